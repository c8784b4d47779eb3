#pragma once

#include "stab/diagnostics.hpp"
#include "stab/solver.hpp"

namespace stab {

// The asymmetric threshold rounding: a horizontal edge is kept only when its
// value exceeds 1/2, a vertical edge already when its value reaches 1/2. All
// comparisons are exact; k is discarded.
EdgeSelection round_dm(const LpSolution& sol, const LinearProgram& lp);

// Rule-based feasibility diagnosis of a selection: uncovered reflex vertices,
// islands and knees at Steiner vertices on the internal-edge expansion, plus
// pairwise planarity findings for extended-edge selections. Independent of the
// partition module's checker.
DiagnosticReport diagnose(const EdgeSelection& sel, const Arrangement& arr);

struct RoundingOutcome {
  EdgeSelection selection;
  DiagnosticReport report;
  Rational lp_objective;
  std::optional<long long> rounded_stab;  // present iff the report is feasible
};

// Builds the model, solves the relaxation exactly, rounds, diagnoses, and on
// success validates the partition and evaluates its stabbing number.
RoundingOutcome round_and_check(const Arrangement& arr, ModelKind kind);

}  // namespace stab

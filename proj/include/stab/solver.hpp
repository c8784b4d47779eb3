#pragma once

#include <vector>

#include "stab/formulation.hpp"

namespace stab {

enum class SolveStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
  SolveStatus status = SolveStatus::Infeasible;
  Rational objective;
  std::vector<Rational> values;  // one per lp variable, exact
  long long iterations = 0;      // simplex pivots (both phases)
};

// Exact two-phase primal simplex over rationals with Bland's pivot rule and
// native handling of variable bounds. Deterministic for a fixed variable
// order: identical inputs give identical pivots and solutions.
LpSolution simplex(const LinearProgram& lp);

struct EdgeSelection {
  ModelKind model_kind = ModelKind::Rpst;
  std::vector<int> chosen;            // edge-variable indices, ascending
  std::vector<int> derived_internal;  // union of covers, ascending
};

EdgeSelection make_selection(const LinearProgram& lp, std::vector<int> chosen);

struct MipSolution {
  SolveStatus status = SolveStatus::Infeasible;
  long long k_opt = 0;
  EdgeSelection incumbent;
  Rational dual_bound;  // root relaxation objective
  long long nodes = 0;
};

// Depth-first branch and bound on the edge variables; node relaxations are
// solved exactly, and the integrality of k tightens every node bound.
MipSolution branch_and_bound(const LinearProgram& ip);

// Enumeration oracle: tries every subset of the model's edge set, keeps the
// ones whose induced internal-edge set is a rectangular partition, and counts
// stabbing numbers directly per line. Never touches the constraint matrices.
// Throws TooLarge above 24 edges.
MipSolution brute_force(const Arrangement& arr, ModelKind kind);

}  // namespace stab

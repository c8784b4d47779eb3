#pragma once

#include <cstdint>
#include <map>

#include "stab/partition.hpp"
#include "stab/rounding.hpp"

namespace stab {

// .rect text: '#' comment lines, a vertex count, then one "x y" pair per line.
OrthoPolygon parse_rect(const std::string& text);

// Canonical form: counterclockwise, starting at the lexicographically
// smallest vertex.
std::string write_rect(const OrthoPolygon& poly);

// Deterministic random polygon with exactly n vertices, grown from grid cells;
// rejects additions that would pinch the boundary or enclose a hole.
OrthoPolygon generate_polygon(int n, std::uint64_t seed);

struct HuntConfig {
  int vertex_target = 20;   // even, >= 4
  int instance_count = 1;
  std::uint64_t seed = 0;
  std::vector<ModelKind> model_kinds{ModelKind::Rpst, ModelKind::Rpst2};
  int jobs = 1;  // seeds may be processed concurrently; output stays seed-ordered
};

struct FailureRecord {
  std::uint64_t seed = 0;
  OrthoPolygon polygon;
  ModelKind model = ModelKind::Rpst;
  Rational lp_objective;
  ViolationKind kind = ViolationKind::Island;
  Point at;
  std::vector<std::pair<std::string, Rational>> values;  // full relaxation solution
};

std::string write_failure_record(const FailureRecord& record);

// Runs the relax-round-diagnose pipeline on one polygon; returns the failure
// record (stamped with the given seed) or nothing when the rounding stays
// feasible. Records are replayable from their polygon alone.
std::optional<FailureRecord> probe_rounding(const OrthoPolygon& poly, ModelKind kind,
                                            std::uint64_t seed);

// Generates instances for seed, seed+1, ... and records every infeasible
// rounding, classified by its first violation. Deterministic: results are
// ordered by seed regardless of worker scheduling.
std::vector<FailureRecord> hunt(const HuntConfig& cfg);

// Standalone SVG: polygon outline, dashed grid edges, solid selected edges,
// value labels at edge midpoints, vertex class markers, shaded partition faces.
std::string render_svg(const OrthoPolygon& poly,
                       const std::map<Segment, Rational>* edge_values = nullptr,
                       const Partition* partition = nullptr);

}  // namespace stab

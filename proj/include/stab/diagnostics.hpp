#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stab/geometry.hpp"

namespace stab {

enum class ViolationKind { KneeAtReflex, KneeAtSteiner, Island, PlanarityOverlap, Crossing };

std::string violation_name(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  Point at;  // offending vertex, crossing point, or overlap start
  std::optional<std::pair<Segment, Segment>> edges;

  auto operator<=>(const Violation&) const = default;
};

struct DiagnosticReport {
  std::vector<Violation> violations;  // sorted by (kind, location)

  bool feasible() const { return violations.empty(); }
};

}  // namespace stab

#pragma once

#include "stab/geometry.hpp"

// Shared small instances: the unit square, the 6-vertex L, and the 3-step
// staircase used across the suites.
inline stab::OrthoPolygon square_poly() {
  return stab::validate_polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
}

inline stab::OrthoPolygon l6_poly() {
  return stab::validate_polygon({{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}});
}

inline stab::OrthoPolygon s3_poly() {
  return stab::validate_polygon({{0, 0}, {3, 0}, {3, 1}, {2, 1}, {2, 2}, {1, 2}, {1, 3}, {0, 3}});
}

#pragma once

#include <compare>
#include <map>
#include <optional>
#include <vector>

#include "stab/errors.hpp"

namespace stab {

enum class Axis { Horizontal, Vertical };

struct Point {
  int x = 0;
  int y = 0;
  auto operator<=>(const Point&) const = default;
};

// Axis-parallel segment with canonically ordered endpoints: left-to-right for
// horizontal, bottom-to-top for vertical.
struct Segment {
  Point p;
  Point q;

  static Segment make(Point a, Point b);

  Axis axis() const { return p.x == q.x ? Axis::Vertical : Axis::Horizontal; }
  int length() const { return (q.x - p.x) + (q.y - p.y); }
  bool contains(Point v) const;           // closed
  bool contains_interior(Point v) const;  // relative interior
  auto operator<=>(const Segment&) const = default;
};

enum class EdgeAngle { SameDirection, Perpendicular, Opposite };

// Angle between two edges sharing an endpoint: 0, pi/2 or pi.
EdgeAngle edge_angle(const Segment& ua, const Segment& ub);

struct OrthoPolygon {
  std::vector<Point> vertices;  // counterclockwise, strictly alternating axes

  long long area2() const;  // twice the (positive) enclosed area
  bool boundary_contains(Point v) const;
  // Point-in-interior test in doubled coordinates, so half-integer probes can
  // be answered exactly. (x2, y2) represents the point (x2/2, y2/2).
  bool interior_contains2(long long x2, long long y2) const;
};

// Validates rectilinearity, alternation, simplicity, and vertex count; flips
// clockwise input to counterclockwise.
OrthoPolygon validate_polygon(std::vector<Point> pts);

enum class VertexClass { Reflex, Convex, Steiner, Border };

// Interior angle partition of the polygon's vertex set.
void classify_vertices(const OrthoPolygon& poly, std::vector<Point>& reflex,
                       std::vector<Point>& convex);

// grid(P): maximal interior extensions of the boundary edges at each reflex
// vertex, deduplicated.
std::vector<Segment> build_grid(const OrthoPolygon& poly);

// One representative stabbing line per (strip, connected component). The line
// sits on the half-integer coordinate just inside the strip, so it can never
// meet an arrangement vertex or run along a grid line.
struct StabLine {
  Axis axis;   // Horizontal: the line y = coord2/2 over x in (lo2/2, hi2/2)
  int coord2;  // doubled fixed coordinate, odd
  int lo2;     // doubled open interval, even
  int hi2;

  auto operator<=>(const StabLine&) const = default;
  // Transversal crossing with an axis-parallel segment in ordinary (undoubled)
  // coordinates; by construction only strict interior crossings can occur.
  bool crosses(const Segment& s) const;
};

struct Arrangement {
  OrthoPolygon polygon;
  std::vector<Point> reflex;   // V_r
  std::vector<Point> convex;   // V_c
  std::vector<Point> steiner;  // V_s
  std::vector<Point> border;   // V_b

  std::vector<Segment> grid_segments;           // grid(P), sorted
  std::vector<Segment> boundary_edges;          // E_h
  std::vector<Segment> internal_edges;          // E_i, lexicographic
  std::vector<Segment> extended_edges;          // E_e, lexicographic
  std::vector<std::vector<int>> cover;          // extended edge -> internal edges
  std::vector<StabLine> stab_lines;             // horizontal block, then vertical
  std::map<Point, std::vector<int>> incidence;  // vertex -> incident internal edges

  std::optional<VertexClass> classify(Point v) const;
  int internal_index(const Segment& s) const;  // -1 when absent
  int extended_index(const Segment& s) const;
};

Arrangement build_arrangement(const OrthoPolygon& poly);

// The two pieces of build_arrangement that are independently specified; both
// operate on an arrangement whose core sets are already populated.
void compute_extended_edges(const Arrangement& arr, std::vector<Segment>& edges,
                            std::vector<std::vector<int>>& cover);
std::vector<StabLine> compute_stab_lines(const Arrangement& arr);

}  // namespace stab

#include <algorithm>

#include "doctest.h"
#include "fixtures.hpp"
#include "stab/geometry.hpp"

using namespace stab;

namespace {

Segment seg(int x1, int y1, int x2, int y2) { return Segment::make({x1, y1}, {x2, y2}); }

}  // namespace

TEST_CASE("validate_polygon accepts squares in either orientation") {
  OrthoPolygon ccw = validate_polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  CHECK(ccw.vertices == std::vector<Point>{{0, 0}, {1, 0}, {1, 1}, {0, 1}});

  OrthoPolygon flipped = validate_polygon({{0, 0}, {0, 1}, {1, 1}, {1, 0}});
  CHECK(flipped.area2() > 0);
  CHECK(flipped.vertices.size() == 4);
}

TEST_CASE("validate_polygon rejects bad input") {
  CHECK_THROWS_WITH_AS(validate_polygon({{0, 0}, {1, 0}, {2, 0}, {2, 1}, {0, 1}}),
                       doctest::Contains("collinear"), Error);
  CHECK_THROWS_AS(validate_polygon({{0, 0}, {1, 0}, {1, 1}}), Error);
  CHECK_THROWS_AS(validate_polygon({{0, 0}, {1, 1}, {2, 0}, {1, -1}}), Error);
  // Self-touching bowtie-like boundary.
  CHECK_THROWS_AS(validate_polygon({{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 0}, {1, -1}, {0, -1}, {0, 1}}),
                  Error);
  try {
    validate_polygon({{0, 0}, {1, 0}, {1, 1}});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::TooFewVertices);
  }
}

TEST_CASE("classify_vertices splits reflex and convex") {
  std::vector<Point> reflex, convex;

  classify_vertices(square_poly(), reflex, convex);
  CHECK(reflex.empty());
  CHECK(convex.size() == 4);

  classify_vertices(l6_poly(), reflex, convex);
  CHECK(reflex == std::vector<Point>{{1, 1}});
  CHECK(convex.size() == 5);

  classify_vertices(s3_poly(), reflex, convex);
  CHECK(reflex == std::vector<Point>{{1, 2}, {2, 1}});
}

TEST_CASE("build_grid extends reflex boundary edges to the boundary") {
  CHECK(build_grid(square_poly()).empty());
  CHECK(build_grid(l6_poly()) == std::vector<Segment>{seg(0, 1, 1, 1), seg(1, 0, 1, 1)});
  CHECK(build_grid(s3_poly()) == std::vector<Segment>{seg(0, 1, 2, 1), seg(0, 2, 1, 2),
                                                      seg(1, 0, 1, 2), seg(2, 0, 2, 1)});
}

TEST_CASE("build_arrangement on the L") {
  Arrangement arr = build_arrangement(l6_poly());
  CHECK(arr.steiner.empty());
  CHECK(arr.border == std::vector<Point>{{0, 1}, {1, 0}});
  CHECK(arr.internal_edges == std::vector<Segment>{seg(0, 1, 1, 1), seg(1, 0, 1, 1)});
  CHECK(arr.extended_edges == arr.internal_edges);
  CHECK(arr.incidence.at({1, 1}) == std::vector<int>{0, 1});
}

TEST_CASE("build_arrangement on the staircase") {
  Arrangement arr = build_arrangement(s3_poly());
  CHECK(arr.steiner == std::vector<Point>{{1, 1}});
  CHECK(arr.border == std::vector<Point>{{0, 1}, {0, 2}, {1, 0}, {2, 0}});
  CHECK(arr.internal_edges.size() == 6);
  CHECK(arr.extended_edges ==
        std::vector<Segment>{seg(0, 1, 2, 1), seg(0, 2, 1, 2), seg(1, 0, 1, 2), seg(1, 1, 1, 2),
                             seg(1, 1, 2, 1), seg(2, 0, 2, 1)});
  // The long edges decompose into their internal pieces.
  int long_h = arr.extended_index(seg(0, 1, 2, 1));
  REQUIRE(long_h >= 0);
  CHECK(arr.cover[long_h].size() == 2);
  int short_h = arr.extended_index(seg(1, 1, 2, 1));
  REQUIRE(short_h >= 0);
  CHECK(arr.cover[short_h] == std::vector<int>{arr.internal_index(seg(1, 1, 2, 1))});
}

TEST_CASE("arrangement of a square is trivial") {
  Arrangement arr = build_arrangement(square_poly());
  CHECK(arr.grid_segments.empty());
  CHECK(arr.internal_edges.empty());
  CHECK(arr.extended_edges.empty());
  CHECK(arr.steiner.empty());
  CHECK(arr.border.empty());
  CHECK(arr.boundary_edges.size() == 4);
  CHECK(arr.stab_lines.size() == 2);
}

TEST_CASE("stab lines are half-integer strip representatives") {
  Arrangement l6 = build_arrangement(l6_poly());
  REQUIRE(l6.stab_lines.size() == 4);
  CHECK(l6.stab_lines[0] == StabLine{Axis::Horizontal, 1, 0, 4});
  CHECK(l6.stab_lines[1] == StabLine{Axis::Horizontal, 3, 0, 2});
  CHECK(l6.stab_lines[2] == StabLine{Axis::Vertical, 1, 0, 4});
  CHECK(l6.stab_lines[3] == StabLine{Axis::Vertical, 3, 0, 2});

  CHECK(build_arrangement(s3_poly()).stab_lines.size() == 6);

  // No line touches an arrangement vertex, and internal edges are crossed
  // transversally or not at all.
  for (const OrthoPolygon& poly : {l6_poly(), s3_poly()}) {
    Arrangement arr = build_arrangement(poly);
    for (const StabLine& line : arr.stab_lines) {
      CHECK(line.coord2 % 2 == 1);
      for (const auto& [v, _] : arr.incidence) {
        if (line.axis == Axis::Horizontal) CHECK(2 * v.y != line.coord2);
        else CHECK(2 * v.x != line.coord2);
      }
    }
  }
}

TEST_CASE("stab line crossing tests") {
  Arrangement arr = build_arrangement(l6_poly());
  StabLine y_half{Axis::Horizontal, 1, 0, 4};
  CHECK(y_half.crosses(seg(1, 0, 1, 1)));
  CHECK_FALSE(y_half.crosses(seg(0, 1, 1, 1)));
  StabLine x_half{Axis::Vertical, 1, 0, 4};
  CHECK(x_half.crosses(seg(0, 1, 1, 1)));
  CHECK_FALSE(x_half.crosses(seg(1, 0, 1, 1)));
}

TEST_CASE("edge_angle distinguishes straight, perpendicular and opposite") {
  CHECK(edge_angle(seg(0, 1, 1, 1), seg(1, 0, 1, 1)) == EdgeAngle::Perpendicular);
  CHECK(edge_angle(seg(0, 1, 1, 1), seg(1, 1, 2, 1)) == EdgeAngle::Opposite);
  CHECK(edge_angle(seg(0, 1, 1, 1), seg(0, 1, 1, 1)) == EdgeAngle::SameDirection);
  CHECK(edge_angle(seg(1, 1, 1, 2), seg(1, 0, 1, 1)) == EdgeAngle::Opposite);
  CHECK_THROWS_AS(edge_angle(seg(0, 0, 1, 0), seg(5, 5, 6, 5)), Error);
}

TEST_CASE("arrangement counts are orientation invariant") {
  for (const OrthoPolygon& poly : {l6_poly(), s3_poly()}) {
    std::vector<Point> reversed(poly.vertices.rbegin(), poly.vertices.rend());
    Arrangement a = build_arrangement(poly);
    Arrangement b = build_arrangement(validate_polygon(reversed));
    CHECK(a.reflex == b.reflex);
    CHECK(a.steiner == b.steiner);
    CHECK(a.border == b.border);
    CHECK(a.grid_segments == b.grid_segments);
    CHECK(a.internal_edges == b.internal_edges);
    CHECK(a.extended_edges == b.extended_edges);
    CHECK(a.stab_lines == b.stab_lines);
  }
}

TEST_CASE("extended edges reproduce their covers exactly") {
  for (const OrthoPolygon& poly : {l6_poly(), s3_poly()}) {
    Arrangement arr = build_arrangement(poly);
    for (size_t e = 0; e < arr.extended_edges.size(); ++e) {
      const Segment& ext = arr.extended_edges[e];
      REQUIRE(!arr.cover[e].empty());
      int len = 0;
      for (int i : arr.cover[e]) {
        CHECK(arr.internal_edges[i].axis() == ext.axis());
        CHECK(ext.contains(arr.internal_edges[i].p));
        CHECK(ext.contains(arr.internal_edges[i].q));
        len += arr.internal_edges[i].length();
      }
      CHECK(len == ext.length());
    }
  }
}

TEST_CASE("grid segment interiors stay strictly inside the polygon") {
  for (const OrthoPolygon& poly : {l6_poly(), s3_poly()}) {
    Arrangement arr = build_arrangement(poly);
    for (const Segment& g : arr.grid_segments) {
      long long mx = g.p.x + g.q.x, my = g.p.y + g.q.y;  // doubled midpoint
      CHECK(poly.interior_contains2(mx, my));
    }
  }
}

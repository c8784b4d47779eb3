#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "stab/partition.hpp"
#include "stab/rounding.hpp"

using namespace stab;

namespace {

Segment seg(int x1, int y1, int x2, int y2) { return Segment::make({x1, y1}, {x2, y2}); }

EdgeSelection internal_selection(const Arrangement& arr, std::uint64_t mask) {
  EdgeSelection sel;
  sel.model_kind = ModelKind::Rpst;
  for (size_t i = 0; i < arr.internal_edges.size(); ++i)
    if (mask >> i & 1) {
      sel.chosen.push_back(int(i));
      sel.derived_internal.push_back(int(i));
    }
  return sel;
}

// Independent stabbing oracle: rectangles whose closure meets the open line.
int rect_count_on_line(const Partition& part, const StabLine& line) {
  int n = 0;
  for (const Rect& r : part.rectangles) {
    bool hit;
    if (line.axis == Axis::Horizontal)
      hit = 2 * r.y1 < line.coord2 && line.coord2 < 2 * r.y2 && 2 * r.x2 > line.lo2 &&
            2 * r.x1 < line.hi2;
    else
      hit = 2 * r.x1 < line.coord2 && line.coord2 < 2 * r.x2 && 2 * r.y2 > line.lo2 &&
            2 * r.y1 < line.hi2;
    n += hit;
  }
  return n;
}

bool anchored(const Partition& part) {
  std::vector<Point> reflex, convex;
  classify_vertices(part.polygon, reflex, convex);
  std::set<Point> rs(reflex.begin(), reflex.end());
  for (const Segment& m : maximal_segments(part))
    if (!rs.count(m.p) && !rs.count(m.q)) return false;
  return true;
}

}  // namespace

TEST_CASE("validate_partition builds the expected rectangles") {
  Arrangement l6 = build_arrangement(l6_poly());
  Partition both = validate_partition(internal_selection(l6, 0b11), l6);
  CHECK(both.rectangles == std::vector<Rect>{{0, 0, 1, 1}, {0, 1, 1, 2}, {1, 0, 2, 1}});

  Arrangement sq = build_arrangement(square_poly());
  Partition empty = validate_partition(internal_selection(sq, 0), sq);
  CHECK(empty.rectangles == std::vector<Rect>{{0, 0, 1, 1}});

  Arrangement s3 = build_arrangement(s3_poly());
  std::uint64_t mask = 0;
  for (const Segment& s : {seg(0, 1, 1, 1), seg(1, 1, 2, 1), seg(1, 1, 1, 2)})
    mask |= 1ULL << s3.internal_index(s);
  Partition stair = validate_partition(internal_selection(s3, mask), s3);
  CHECK(stair.rectangles == std::vector<Rect>{{0, 0, 3, 1}, {0, 1, 1, 3}, {1, 1, 2, 2}});
}

TEST_CASE("validate_partition reports violations") {
  Arrangement s3 = build_arrangement(s3_poly());
  int lone = s3.internal_index(seg(1, 0, 1, 1));
  try {
    validate_partition(internal_selection(s3, 1ULL << lone), s3);
    FAIL("expected NotAPartitionError");
  } catch (const NotAPartitionError& e) {
    REQUIRE(e.report().violations.size() == 3);
    CHECK(e.report().violations[0] == Violation{ViolationKind::KneeAtReflex, {1, 2}, std::nullopt});
    CHECK(e.report().violations[1] == Violation{ViolationKind::KneeAtReflex, {2, 1}, std::nullopt});
    CHECK(e.report().violations[2] == Violation{ViolationKind::Island, {1, 1}, std::nullopt});
  }

  // A knee: two perpendicular edges meeting at the Steiner vertex.
  std::uint64_t knee = (1ULL << s3.internal_index(seg(0, 1, 1, 1))) |
                       (1ULL << s3.internal_index(seg(1, 0, 1, 1)));
  try {
    validate_partition(internal_selection(s3, knee), s3);
    FAIL("expected NotAPartitionError");
  } catch (const NotAPartitionError& e) {
    bool has_knee = false;
    for (const Violation& v : e.report().violations)
      has_knee |= v == Violation{ViolationKind::KneeAtSteiner, {1, 1}, std::nullopt};
    CHECK(has_knee);
  }
}

TEST_CASE("make_partition rejects overlapping or escaping segments") {
  OrthoPolygon sq = validate_polygon({{0, 0}, {3, 0}, {3, 3}, {0, 3}});
  CHECK_THROWS_AS(make_partition(sq, {seg(1, 0, 1, 3), seg(1, 1, 1, 2)}), NotAPartitionError);
  CHECK_THROWS_AS(make_partition(sq, {seg(0, 1, 3, 1), seg(0, 1, 2, 1)}), NotAPartitionError);
}

TEST_CASE("partitions may cross and tee inside") {
  OrthoPolygon sq = validate_polygon({{0, 0}, {3, 0}, {3, 3}, {0, 3}});
  Partition cross = make_partition(sq, {seg(0, 1, 3, 1), seg(1, 0, 1, 3)});
  CHECK(cross.rectangles.size() == 4);
  CHECK(cross.segments.size() == 4);  // both segments split at the crossing

  Partition tee = make_partition(sq, {seg(0, 2, 3, 2), seg(1, 0, 1, 2)});
  CHECK(tee.rectangles.size() == 3);
}

TEST_CASE("stabbing numbers match the hand counts") {
  Arrangement sq = build_arrangement(square_poly());
  CHECK(stabbing_number(validate_partition(internal_selection(sq, 0), sq), sq).stabbing_number == 1);

  Arrangement l6 = build_arrangement(l6_poly());
  StabbingReport rep = stabbing_number(validate_partition(internal_selection(l6, 0b11), l6), l6);
  CHECK(rep.stabbing_number == 2);
  CHECK(rep.per_line.at(StabLine{Axis::Horizontal, 1, 0, 4}) == 2);
  CHECK(rep.per_line.at(StabLine{Axis::Horizontal, 3, 0, 2}) == 1);
  CHECK(rep.per_line.at(StabLine{Axis::Vertical, 1, 0, 4}) == 2);
  CHECK(rep.per_line.at(StabLine{Axis::Vertical, 3, 0, 2}) == 1);
}

TEST_CASE("strip-midline counts equal the rectangle-intersection oracle") {
  for (const OrthoPolygon& poly : {l6_poly(), s3_poly()}) {
    Arrangement arr = build_arrangement(poly);
    for (std::uint64_t mask = 0; mask < (1ULL << arr.internal_edges.size()); ++mask) {
      Partition part;
      try {
        part = validate_partition(internal_selection(arr, mask), arr);
      } catch (const NotAPartitionError&) {
        continue;
      }
      StabbingReport rep = stabbing_number(part, arr);
      for (const auto& [line, count] : rep.per_line) CHECK(count == rect_count_on_line(part, line));
    }
  }
}

TEST_CASE("maximal segments merge collinear pieces") {
  Arrangement s3 = build_arrangement(s3_poly());
  std::uint64_t mask = 0;
  for (const Segment& s : {seg(0, 1, 1, 1), seg(1, 1, 2, 1), seg(1, 1, 1, 2)})
    mask |= 1ULL << s3.internal_index(s);
  Partition stair = validate_partition(internal_selection(s3, mask), s3);
  CHECK(maximal_segments(stair) == std::vector<Segment>{seg(0, 1, 2, 1), seg(1, 1, 1, 2)});

  Arrangement l6 = build_arrangement(l6_poly());
  Partition both = validate_partition(internal_selection(l6, 0b11), l6);
  CHECK(maximal_segments(both) == std::vector<Segment>{seg(0, 1, 1, 1), seg(1, 0, 1, 1)});

  Arrangement sq = build_arrangement(square_poly());
  CHECK(maximal_segments(validate_partition(internal_selection(sq, 0), sq)).empty());
}

TEST_CASE("normalize_dragging leaves anchored partitions alone") {
  Arrangement sq = build_arrangement(square_poly());
  Partition empty = validate_partition(internal_selection(sq, 0), sq);
  Partition n1 = normalize_dragging(empty);
  CHECK(n1.segments.empty());
  CHECK(n1.rectangles == empty.rectangles);

  Arrangement l6 = build_arrangement(l6_poly());
  Partition both = validate_partition(internal_selection(l6, 0b11), l6);
  Partition n2 = normalize_dragging(both);
  CHECK(n2.segments == both.segments);
  CHECK(n2.rectangles == both.rectangles);
}

TEST_CASE("normalize_dragging collapses the reflex-free strip partition") {
  OrthoPolygon strip = validate_polygon({{0, 0}, {3, 0}, {3, 1}, {0, 1}});
  Arrangement arr = build_arrangement(strip);
  Partition part = make_partition(strip, {seg(1, 0, 1, 1), seg(2, 0, 2, 1)});
  CHECK(stabbing_number(part, arr).stabbing_number == 3);

  Partition norm = normalize_dragging(part);
  CHECK(norm.segments.empty());
  CHECK(norm.rectangles == std::vector<Rect>{{0, 0, 3, 1}});
  CHECK(stabbing_number(norm, arr).stabbing_number == 1);
}

TEST_CASE("normalize_dragging sweeps attached segments along") {
  OrthoPolygon box = validate_polygon({{0, 0}, {3, 0}, {3, 2}, {0, 2}});
  Arrangement arr = build_arrangement(box);
  Partition part = make_partition(box, {seg(0, 1, 3, 1), seg(1, 0, 1, 1), seg(2, 1, 2, 2)});
  CHECK(part.rectangles.size() == 4);
  int before = stabbing_number(part, arr).stabbing_number;

  Partition norm = normalize_dragging(part);
  CHECK(norm.rectangles == std::vector<Rect>{{0, 0, 3, 2}});
  CHECK(stabbing_number(norm, arr).stabbing_number <= before);
  CHECK(anchored(norm));
}

TEST_CASE("dragging normalization properties hold on every small partition") {
  for (const OrthoPolygon& poly : {l6_poly(), s3_poly()}) {
    Arrangement arr = build_arrangement(poly);
    for (std::uint64_t mask = 0; mask < (1ULL << arr.internal_edges.size()); ++mask) {
      Partition part;
      try {
        part = validate_partition(internal_selection(arr, mask), arr);
      } catch (const NotAPartitionError&) {
        continue;
      }
      Partition norm = normalize_dragging(part);
      CHECK(stabbing_number(norm, arr).stabbing_number <=
            stabbing_number(part, arr).stabbing_number);
      CHECK(anchored(norm));
      Partition again = normalize_dragging(norm);
      CHECK(again.segments == norm.segments);
      CHECK(again.rectangles == norm.rectangles);

      long long sum = 0;
      for (const Rect& r : norm.rectangles) sum += r.area();
      CHECK(2 * sum == poly.area2());
    }
  }
}

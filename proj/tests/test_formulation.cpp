#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "stab/formulation.hpp"

using namespace stab;

namespace {

int rows_tagged(const LinearProgram& lp, RowTag tag) {
  int n = 0;
  for (const Constraint& c : lp.constraints) n += c.tag == tag;
  return n;
}

std::set<int> row_vars(const Constraint& c) {
  std::set<int> ids;
  for (auto& [id, _] : c.coeffs) ids.insert(id);
  return ids;
}

// Satisfaction under a full assignment, exact.
bool satisfied(const Constraint& c, const std::vector<Rational>& x) {
  Rational lhs = 0;
  for (auto& [id, a] : c.coeffs) lhs += a * x[id];
  switch (c.sense) {
    case Sense::Ge: return lhs >= c.rhs;
    case Sense::Le: return lhs <= c.rhs;
    case Sense::Eq: return lhs == c.rhs;
  }
  return false;
}

}  // namespace

TEST_CASE("rpst on the L") {
  LinearProgram lp = build_rpst(build_arrangement(l6_poly()));
  REQUIRE(lp.variables.size() == 3);
  CHECK(lp.variables[0].name == "x0");
  CHECK(lp.variables[0].orientation == Orientation::Horizontal);
  CHECK(lp.variables[1].orientation == Orientation::Vertical);
  CHECK(lp.variables[2].name == "k");
  CHECK(lp.variables[2].kind == VarKind::Stab);
  CHECK(lp.variables[2].lower == 1);
  CHECK(!lp.variables[2].upper);
  CHECK(lp.objective_var == 2);
  CHECK(!lp.relaxed);

  REQUIRE(lp.constraints.size() == 3);  // empty stab rows dropped
  CHECK(rows_tagged(lp, RowTag::Reflex) == 1);
  CHECK(rows_tagged(lp, RowTag::Steiner) == 0);
  CHECK(rows_tagged(lp, RowTag::Stab) == 2);
  CHECK(row_vars(lp.constraints[0]) == std::set<int>{0, 1});
  CHECK(lp.constraints[0].sense == Sense::Ge);
  CHECK(lp.constraints[0].rhs == 1);
  CHECK(row_vars(lp.constraints[1]) == std::set<int>{1, 2});  // y=1/2 crosses the vertical edge
  CHECK(lp.constraints[1].rhs == -1);
  CHECK(row_vars(lp.constraints[2]) == std::set<int>{0, 2});
}

TEST_CASE("rpst on the square has no constraints") {
  LinearProgram lp = build_rpst(build_arrangement(square_poly()));
  CHECK(lp.variables.size() == 1);
  CHECK(lp.constraints.empty());
}

TEST_CASE("rpst on the staircase") {
  LinearProgram lp = build_rpst(build_arrangement(s3_poly()));
  CHECK(lp.variables.size() == 7);
  CHECK(rows_tagged(lp, RowTag::Reflex) == 2);
  // One degree-4 Steiner vertex: 4 perpendicular pairs, 2 distinct third
  // edges each.
  CHECK(rows_tagged(lp, RowTag::Steiner) == 8);
  CHECK(rows_tagged(lp, RowTag::Stab) == 4);
  for (const Constraint& c : lp.constraints) {
    if (c.tag != RowTag::Steiner) continue;
    CHECK(c.coeffs.size() == 3);
    CHECK(c.rhs == 0);
    CHECK(c.sense == Sense::Ge);
  }
}

TEST_CASE("rpst2 on the L matches rpst structure") {
  LinearProgram lp = build_rpst2(build_arrangement(l6_poly()));
  CHECK(lp.variables.size() == 3);
  CHECK(rows_tagged(lp, RowTag::Reflex) == 1);
  CHECK(row_vars(lp.constraints[0]) == std::set<int>{0, 1});
  CHECK(rows_tagged(lp, RowTag::Planarity) == 0);
  CHECK(rows_tagged(lp, RowTag::Steiner) == 0);
  CHECK(rows_tagged(lp, RowTag::Stab) == 2);
}

TEST_CASE("rpst2 on the staircase") {
  Arrangement arr = build_arrangement(s3_poly());
  LinearProgram lp = build_rpst2(arr);
  CHECK(lp.variables.size() == 7);
  CHECK(rows_tagged(lp, RowTag::Reflex) == 2);
  CHECK(rows_tagged(lp, RowTag::Planarity) == 3);
  CHECK(rows_tagged(lp, RowTag::Steiner) == 2);
  CHECK(rows_tagged(lp, RowTag::Stab) == 4);

  auto ext = [&](int x1, int y1, int x2, int y2) {
    int i = arr.extended_index(Segment::make({x1, y1}, {x2, y2}));
    REQUIRE(i >= 0);
    return i;
  };
  int long_h = ext(0, 1, 2, 1), long_v = ext(1, 0, 1, 2);
  int short_h = ext(1, 1, 2, 1), short_v = ext(1, 1, 1, 2);
  int low_v = ext(2, 0, 2, 1), top_h = ext(0, 2, 1, 2);

  // Reflex covers at (1,2) and (2,1); reflex vertices are processed in order.
  CHECK(row_vars(lp.constraints[0]) == std::set<int>{top_h, long_v, short_v});
  CHECK(row_vars(lp.constraints[1]) == std::set<int>{long_h, short_h, low_v});

  // Planarity: interior crossing of the two long edges plus the two collinear
  // overlaps; contacts at an endpoint stay unconstrained.
  std::set<std::set<int>> planarity;
  for (const Constraint& c : lp.constraints)
    if (c.tag == RowTag::Planarity) {
      CHECK(c.sense == Sense::Le);
      CHECK(c.rhs == 1);
      planarity.insert(row_vars(c));
    }
  CHECK(planarity ==
        std::set<std::set<int>>{{long_h, long_v}, {long_h, short_h}, {long_v, short_v}});

  // Steiner rows: an edge ending at the crossing needs a selected
  // perpendicular edge passing strictly through it.
  std::set<std::set<int>> steiner;
  for (const Constraint& c : lp.constraints)
    if (c.tag == RowTag::Steiner) steiner.insert(row_vars(c));
  CHECK(steiner == std::set<std::set<int>>{{long_h, short_v}, {long_v, short_h}});
}

TEST_CASE("conforming model uses border-to-border grid segments") {
  LinearProgram l6 = build_conforming(build_arrangement(l6_poly()));
  CHECK(l6.variables.size() == 3);
  CHECK(rows_tagged(l6, RowTag::Reflex) == 1);
  CHECK(rows_tagged(l6, RowTag::Stab) == 2);

  LinearProgram s3 = build_conforming(build_arrangement(s3_poly()));
  CHECK(s3.variables.size() == 5);  // four grid segments + k
  CHECK(rows_tagged(s3, RowTag::Reflex) == 2);
  for (const Constraint& c : s3.constraints)
    if (c.tag == RowTag::Reflex) CHECK(c.coeffs.size() == 2);

  LinearProgram sq = build_conforming(build_arrangement(square_poly()));
  CHECK(sq.variables.size() == 1);
  CHECK(sq.constraints.empty());
}

TEST_CASE("relax drops integrality and is idempotent") {
  LinearProgram ip = build_rpst(build_arrangement(l6_poly()));
  LinearProgram lp = relax(ip);
  CHECK(lp.relaxed);
  for (const Variable& v : lp.variables) CHECK(!v.integral);
  CHECK(lp.constraints == ip.constraints);
  CHECK(relax(lp) == lp);
}

TEST_CASE("the all-edges point with saturated k is feasible for every model") {
  for (const OrthoPolygon& poly : {square_poly(), l6_poly(), s3_poly()}) {
    Arrangement arr = build_arrangement(poly);
    for (const LinearProgram& lp : {build_rpst(arr), build_rpst2(arr), build_conforming(arr)}) {
      std::vector<Rational> x(lp.variables.size(), Rational(1));
      Rational max_load = 0;
      for (const Constraint& c : lp.constraints) {
        if (c.tag != RowTag::Stab) continue;
        max_load = std::max(max_load, Rational((long)c.coeffs.size() - 1));
      }
      x[lp.objective_var] = 1 + max_load;
      int bad = 0;
      for (const Constraint& c : lp.constraints) {
        if (c.tag == RowTag::Planarity) continue;  // overlapping extended edges excluded
        bad += !satisfied(c, x);
      }
      CHECK(bad == 0);
    }
  }
}

TEST_CASE("lp text export and parse round-trip") {
  Arrangement l6 = build_arrangement(l6_poly());
  Arrangement s3 = build_arrangement(s3_poly());
  for (const LinearProgram& lp :
       {build_rpst(l6), build_rpst2(s3), build_conforming(s3), relax(build_rpst(s3))}) {
    std::string text = export_lp_text(lp);
    LinearProgram back = parse_lp_text(text);
    CHECK(back == lp);
    CHECK(export_lp_text(back) == text);
  }

  std::string text = export_lp_text(build_rpst(l6));
  CHECK(text.find("reflex: +1 x0 +1 x1 >= 1") != std::string::npos);
  CHECK(text.find("minimize k") != std::string::npos);

  std::string sq = export_lp_text(build_rpst(build_arrangement(square_poly())));
  CHECK(sq.find("subject to\nbounds") != std::string::npos);  // empty constraint section
}

TEST_CASE("malformed lp text is rejected with a line number") {
  CHECK_THROWS_AS(parse_lp_text("model rpst\nrelaxed 0\nminimize k\nsubject to\n"), Error);
  CHECK_THROWS_WITH_AS(parse_lp_text("model nope\n"), doctest::Contains("line 1"), Error);
}

#include "stab/formulation.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace stab {

std::string model_name(ModelKind kind) {
  switch (kind) {
    case ModelKind::Rpst: return "rpst";
    case ModelKind::Rpst2: return "rpst2";
    case ModelKind::Conforming: return "conforming";
  }
  return "?";
}

std::optional<ModelKind> model_from_name(const std::string& name) {
  if (name == "rpst") return ModelKind::Rpst;
  if (name == "rpst2") return ModelKind::Rpst2;
  if (name == "conforming") return ModelKind::Conforming;
  return std::nullopt;
}

namespace {

LinearProgram skeleton(ModelKind kind, std::vector<Segment> columns,
                       std::vector<std::vector<int>> cover) {
  LinearProgram lp;
  lp.model_kind = kind;
  lp.columns = std::move(columns);
  lp.column_cover = std::move(cover);
  for (size_t i = 0; i < lp.columns.size(); ++i) {
    Variable v;
    v.id = int(i);
    v.name = "x" + std::to_string(i);
    v.kind = VarKind::Edge;
    v.orientation = lp.columns[i].axis() == Axis::Horizontal ? Orientation::Horizontal
                                                             : Orientation::Vertical;
    v.lower = 0;
    v.upper = Rational(1);
    v.integral = true;
    lp.variables.push_back(std::move(v));
  }
  Variable k;
  k.id = int(lp.columns.size());
  k.name = "k";
  k.kind = VarKind::Stab;
  k.orientation = Orientation::None;
  k.lower = 1;
  k.upper = std::nullopt;
  k.integral = true;
  lp.variables.push_back(std::move(k));
  lp.objective_var = int(lp.columns.size());
  lp.relaxed = false;
  return lp;
}

// One stab row per line: sum of crossing edge variables <= k - 1. Rows with an
// empty left-hand side are dropped.
void add_stab_rows(LinearProgram& lp, const Arrangement& arr) {
  for (const StabLine& line : arr.stab_lines) {
    Constraint row;
    for (size_t i = 0; i < lp.columns.size(); ++i)
      if (line.crosses(lp.columns[i])) row.coeffs.emplace_back(int(i), 1);
    if (row.coeffs.empty()) continue;
    row.coeffs.emplace_back(lp.stab_var(), -1);
    row.sense = Sense::Le;
    row.rhs = -1;
    row.tag = RowTag::Stab;
    lp.constraints.push_back(std::move(row));
  }
}

}  // namespace

LinearProgram build_rpst(const Arrangement& arr) {
  std::vector<std::vector<int>> identity;
  identity.reserve(arr.internal_edges.size());
  for (size_t i = 0; i < arr.internal_edges.size(); ++i) identity.push_back({int(i)});
  LinearProgram lp = skeleton(ModelKind::Rpst, arr.internal_edges, std::move(identity));

  for (Point u : arr.reflex) {
    const auto& inc = arr.incidence.at(u);
    Constraint row;
    for (int e : inc) row.coeffs.emplace_back(e, 1);
    row.sense = Sense::Ge;
    row.rhs = 1;
    row.tag = RowTag::Reflex;
    lp.constraints.push_back(std::move(row));
  }

  for (Point u : arr.steiner) {
    std::vector<int> inc = arr.incidence.at(u);
    std::sort(inc.begin(), inc.end());
    for (size_t a = 0; a < inc.size(); ++a) {
      for (size_t b = a + 1; b < inc.size(); ++b) {
        if (arr.internal_edges[inc[a]].axis() == arr.internal_edges[inc[b]].axis()) continue;
        for (size_t c = 0; c < inc.size(); ++c) {
          if (c == a || c == b) continue;
          Constraint row;
          row.coeffs.emplace_back(inc[a], 1);
          row.coeffs.emplace_back(inc[b], 1);
          row.coeffs.emplace_back(inc[c], -1);
          row.sense = Sense::Ge;
          row.rhs = 0;
          row.tag = RowTag::Steiner;
          lp.constraints.push_back(std::move(row));
        }
      }
    }
  }

  add_stab_rows(lp, arr);
  return lp;
}

namespace {

// Planarity semantics: a pair is constrained when the edges overlap
// collinearly or cross strictly inside both; an intersection that is an
// endpoint of either edge is allowed.
bool planarity_pair(const Segment& a, const Segment& b) {
  if (a.axis() == b.axis()) {
    if (a.axis() == Axis::Horizontal) {
      if (a.p.y != b.p.y) return false;
      return std::max(a.p.x, b.p.x) < std::min(a.q.x, b.q.x);
    }
    if (a.p.x != b.p.x) return false;
    return std::max(a.p.y, b.p.y) < std::min(a.q.y, b.q.y);
  }
  const Segment& h = a.axis() == Axis::Horizontal ? a : b;
  const Segment& v = a.axis() == Axis::Horizontal ? b : a;
  Point x{v.p.x, h.p.y};
  return h.contains_interior(x) && v.contains_interior(x);
}

}  // namespace

LinearProgram build_rpst2(const Arrangement& arr) {
  LinearProgram lp = skeleton(ModelKind::Rpst2, arr.extended_edges, arr.cover);
  std::set<Point> steiner(arr.steiner.begin(), arr.steiner.end());

  for (Point u : arr.reflex) {
    Constraint row;
    for (size_t i = 0; i < arr.extended_edges.size(); ++i) {
      const Segment& e = arr.extended_edges[i];
      if (e.p == u || e.q == u) row.coeffs.emplace_back(int(i), 1);
    }
    row.sense = Sense::Ge;
    row.rhs = 1;
    row.tag = RowTag::Reflex;
    lp.constraints.push_back(std::move(row));
  }

  for (size_t i = 0; i < arr.extended_edges.size(); ++i) {
    for (size_t j = i + 1; j < arr.extended_edges.size(); ++j) {
      if (!planarity_pair(arr.extended_edges[i], arr.extended_edges[j])) continue;
      Constraint row;
      row.coeffs.emplace_back(int(i), 1);
      row.coeffs.emplace_back(int(j), 1);
      row.sense = Sense::Le;
      row.rhs = 1;
      row.tag = RowTag::Planarity;
      lp.constraints.push_back(std::move(row));
    }
  }

  // For an extended edge running from reflex a to Steiner b, some selected
  // perpendicular edge must pass strictly through b.
  std::set<Point> reflex(arr.reflex.begin(), arr.reflex.end());
  for (size_t i = 0; i < arr.extended_edges.size(); ++i) {
    const Segment& ab = arr.extended_edges[i];
    for (Point b : {ab.p, ab.q}) {
      if (!steiner.count(b)) continue;
      Point a = b == ab.p ? ab.q : ab.p;
      if (!reflex.count(a)) continue;
      Constraint row;
      for (size_t j = 0; j < arr.extended_edges.size(); ++j) {
        if (arr.extended_edges[j].axis() == ab.axis()) continue;
        if (arr.extended_edges[j].contains_interior(b)) row.coeffs.emplace_back(int(j), 1);
      }
      row.coeffs.emplace_back(int(i), -1);
      row.sense = Sense::Ge;
      row.rhs = 0;
      row.tag = RowTag::Steiner;
      lp.constraints.push_back(std::move(row));
    }
  }

  add_stab_rows(lp, arr);
  return lp;
}

void conforming_columns(const Arrangement& arr, std::vector<Segment>& cols,
                        std::vector<std::vector<int>>& cover) {
  cols = arr.grid_segments;
  std::sort(cols.begin(), cols.end());
  cover.clear();
  cover.resize(cols.size());
  for (size_t c = 0; c < cols.size(); ++c)
    for (size_t i = 0; i < arr.internal_edges.size(); ++i) {
      const Segment& piece = arr.internal_edges[i];
      if (piece.axis() != cols[c].axis()) continue;
      if (cols[c].contains(piece.p) && cols[c].contains(piece.q)) cover[c].push_back(int(i));
    }
}

LinearProgram build_conforming(const Arrangement& arr) {
  std::vector<Segment> cols;
  std::vector<std::vector<int>> cover;
  conforming_columns(arr, cols, cover);
  LinearProgram lp = skeleton(ModelKind::Conforming, cols, std::move(cover));

  for (Point u : arr.reflex) {
    Constraint row;
    for (size_t i = 0; i < lp.columns.size(); ++i)
      if (lp.columns[i].p == u || lp.columns[i].q == u) row.coeffs.emplace_back(int(i), 1);
    row.sense = Sense::Ge;
    row.rhs = 1;
    row.tag = RowTag::Reflex;
    lp.constraints.push_back(std::move(row));
  }

  add_stab_rows(lp, arr);
  return lp;
}

LinearProgram relax(const LinearProgram& ip) {
  LinearProgram lp = ip;
  for (Variable& v : lp.variables) v.integral = false;
  lp.relaxed = true;
  return lp;
}

}  // namespace stab

#include "stab/rounding.hpp"

#include <algorithm>
#include <set>

#include "stab/partition.hpp"

namespace stab {

std::string violation_name(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::KneeAtReflex: return "knee_at_reflex";
    case ViolationKind::KneeAtSteiner: return "knee_at_steiner";
    case ViolationKind::Island: return "island";
    case ViolationKind::PlanarityOverlap: return "planarity_overlap";
    case ViolationKind::Crossing: return "crossing";
  }
  return "?";
}

EdgeSelection round_dm(const LpSolution& sol, const LinearProgram& lp) {
  static const Rational half(1, 2);
  std::vector<int> chosen;
  for (int j = 0; j < lp.edge_count(); ++j) {
    const Rational& v = sol.values[j];
    bool keep = lp.variables[j].orientation == Orientation::Horizontal ? v > half : v >= half;
    if (keep) chosen.push_back(j);
  }
  return make_selection(lp, std::move(chosen));
}

DiagnosticReport diagnose(const EdgeSelection& sel, const Arrangement& arr) {
  DiagnosticReport report;
  std::set<int> selected(sel.derived_internal.begin(), sel.derived_internal.end());

  for (Point u : arr.reflex) {
    bool covered = false;
    for (int e : arr.incidence.at(u))
      if (selected.count(e)) { covered = true; break; }
    if (!covered) report.violations.push_back({ViolationKind::KneeAtReflex, u, std::nullopt});
  }

  for (Point u : arr.steiner) {
    int horizontal = 0, vertical = 0;
    for (int e : arr.incidence.at(u)) {
      if (!selected.count(e)) continue;
      (arr.internal_edges[e].axis() == Axis::Horizontal ? horizontal : vertical) += 1;
    }
    int total = horizontal + vertical;
    if (total == 1)
      report.violations.push_back({ViolationKind::Island, u, std::nullopt});
    else if (total == 2 && horizontal == 1)
      report.violations.push_back({ViolationKind::KneeAtSteiner, u, std::nullopt});
  }

  if (sel.model_kind == ModelKind::Rpst2) {
    for (size_t a = 0; a < sel.chosen.size(); ++a) {
      for (size_t b = a + 1; b < sel.chosen.size(); ++b) {
        const Segment& ea = arr.extended_edges[sel.chosen[a]];
        const Segment& eb = arr.extended_edges[sel.chosen[b]];
        if (ea.axis() == eb.axis()) {
          bool same_line = ea.axis() == Axis::Horizontal ? ea.p.y == eb.p.y : ea.p.x == eb.p.x;
          if (!same_line) continue;
          bool overlap = ea.axis() == Axis::Horizontal
                             ? std::max(ea.p.x, eb.p.x) < std::min(ea.q.x, eb.q.x)
                             : std::max(ea.p.y, eb.p.y) < std::min(ea.q.y, eb.q.y);
          if (overlap)
            report.violations.push_back(
                {ViolationKind::PlanarityOverlap, std::max(ea.p, eb.p), std::pair{ea, eb}});
          continue;
        }
        const Segment& h = ea.axis() == Axis::Horizontal ? ea : eb;
        const Segment& v = ea.axis() == Axis::Horizontal ? eb : ea;
        Point x{v.p.x, h.p.y};
        if (h.contains_interior(x) && v.contains_interior(x))
          report.violations.push_back({ViolationKind::Crossing, x, std::pair{ea, eb}});
      }
    }
  }

  std::sort(report.violations.begin(), report.violations.end());
  return report;
}

RoundingOutcome round_and_check(const Arrangement& arr, ModelKind kind) {
  LinearProgram ip;
  switch (kind) {
    case ModelKind::Rpst: ip = build_rpst(arr); break;
    case ModelKind::Rpst2: ip = build_rpst2(arr); break;
    case ModelKind::Conforming: ip = build_conforming(arr); break;
  }
  LinearProgram lp = relax(ip);
  LpSolution sol = simplex(lp);

  RoundingOutcome out;
  out.lp_objective = sol.objective;
  out.selection = round_dm(sol, lp);
  out.report = diagnose(out.selection, arr);
  if (out.report.feasible()) {
    Partition part = validate_partition(out.selection, arr);
    out.rounded_stab = stabbing_number(part, arr).stabbing_number;
  }
  return out;
}

}  // namespace stab

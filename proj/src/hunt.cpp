#include <atomic>
#include <sstream>
#include <thread>

#include "stab/toolkit.hpp"

namespace stab {

std::string write_failure_record(const FailureRecord& record) {
  std::ostringstream out;
  out << "failure\n";
  out << "seed " << record.seed << "\n";
  out << "model " << model_name(record.model) << "\n";
  out << "kind " << violation_name(record.kind) << "\n";
  out << "at " << record.at.x << " " << record.at.y << "\n";
  out << "lp_objective " << record.lp_objective.get_str() << "\n";
  out << "polygon " << record.polygon.vertices.size() << "\n";
  for (Point v : record.polygon.vertices) out << v.x << " " << v.y << "\n";
  out << "values " << record.values.size() << "\n";
  for (const auto& [name, value] : record.values) out << name << " = " << value.get_str() << "\n";
  out << "end\n";
  return out.str();
}

std::optional<FailureRecord> probe_rounding(const OrthoPolygon& poly, ModelKind kind,
                                            std::uint64_t seed) {
  Arrangement arr = build_arrangement(poly);
  LinearProgram ip;
  switch (kind) {
    case ModelKind::Rpst: ip = build_rpst(arr); break;
    case ModelKind::Rpst2: ip = build_rpst2(arr); break;
    case ModelKind::Conforming: ip = build_conforming(arr); break;
  }
  LinearProgram lp = relax(ip);
  LpSolution sol = simplex(lp);
  if (sol.status != SolveStatus::Optimal) return std::nullopt;
  EdgeSelection sel = round_dm(sol, lp);
  DiagnosticReport report = diagnose(sel, arr);
  if (report.feasible()) return std::nullopt;

  FailureRecord rec;
  rec.seed = seed;
  rec.polygon = poly;
  rec.model = kind;
  rec.lp_objective = sol.objective;
  rec.kind = report.violations.front().kind;
  rec.at = report.violations.front().at;
  for (size_t j = 0; j < lp.variables.size(); ++j)
    rec.values.emplace_back(lp.variables[j].name, sol.values[j]);
  return rec;
}

std::vector<FailureRecord> hunt(const HuntConfig& cfg) {
  const int count = cfg.instance_count;
  std::vector<std::vector<FailureRecord>> slots(count);
  std::atomic<int> cursor{0};
  int jobs = std::max(1, cfg.jobs);

  auto worker = [&]() {
    for (;;) {
      int i = cursor.fetch_add(1);
      if (i >= count) return;
      std::uint64_t seed = cfg.seed + std::uint64_t(i);
      OrthoPolygon poly;
      try {
        poly = generate_polygon(cfg.vertex_target, seed);
      } catch (const Error&) {
        continue;  // generation failure: skip the seed
      }
      for (ModelKind kind : cfg.model_kinds) {
        auto rec = probe_rounding(poly, kind, seed);
        if (rec) slots[i].push_back(std::move(*rec));
      }
    }
  };

  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  std::vector<FailureRecord> out;
  for (auto& slot : slots)
    for (auto& rec : slot) out.push_back(std::move(rec));
  return out;
}

}  // namespace stab

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "stab/toolkit.hpp"

using namespace stab;

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw Error(Errc::SyntaxError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(Errc::SyntaxError, "cannot open '" + path + "' for writing");
  out << text;
}

ModelKind parse_model(const std::string& name) {
  auto kind = model_from_name(name);
  if (!kind) throw Error(Errc::SyntaxError, "unknown model '" + name + "' (rpst|rpst2|conforming)");
  return *kind;
}

LinearProgram build_model(const Arrangement& arr, ModelKind kind) {
  switch (kind) {
    case ModelKind::Rpst: return build_rpst(arr);
    case ModelKind::Rpst2: return build_rpst2(arr);
    case ModelKind::Conforming: return build_conforming(arr);
  }
  throw Error(Errc::SyntaxError, "bad model kind");
}

// Selector grammar: comma-separated internal-edge indices, or the tokens
// 'h' / 'v' meaning every horizontal / vertical internal edge.
EdgeSelection parse_selection(const Arrangement& arr, const std::string& spec) {
  std::vector<int> chosen;
  std::istringstream in(spec);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) continue;
    if (tok == "h" || tok == "v") {
      Axis want = tok == "h" ? Axis::Horizontal : Axis::Vertical;
      for (size_t i = 0; i < arr.internal_edges.size(); ++i)
        if (arr.internal_edges[i].axis() == want) chosen.push_back(int(i));
      continue;
    }
    try {
      size_t used = 0;
      int idx = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      if (idx < 0 || idx >= int(arr.internal_edges.size()))
        throw Error(Errc::SyntaxError, "edge index " + tok + " out of range (0.." +
                                           std::to_string(arr.internal_edges.size() - 1) + ")");
      chosen.push_back(idx);
    } catch (const std::invalid_argument&) {
      throw Error(Errc::SyntaxError, "bad selector token '" + tok + "'");
    }
  }
  std::sort(chosen.begin(), chosen.end());
  chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
  EdgeSelection sel;
  sel.model_kind = ModelKind::Rpst;
  sel.chosen = chosen;
  sel.derived_internal = chosen;
  return sel;
}

std::string describe_segment(const Segment& s) {
  std::ostringstream out;
  out << "(" << s.p.x << "," << s.p.y << ")-(" << s.q.x << "," << s.q.y << ")";
  return out.str();
}

std::string describe_line(const StabLine& line) {
  std::ostringstream out;
  auto half = [](int v2) {
    std::ostringstream o;
    if (v2 % 2 == 0) o << v2 / 2;
    else o << v2 << "/2";
    return o.str();
  };
  if (line.axis == Axis::Horizontal)
    out << "y=" << half(line.coord2) << " x in (" << half(line.lo2) << "," << half(line.hi2) << ")";
  else
    out << "x=" << half(line.coord2) << " y in (" << half(line.lo2) << "," << half(line.hi2) << ")";
  return out.str();
}

std::string describe_report(const DiagnosticReport& report) {
  std::ostringstream out;
  for (const Violation& v : report.violations) {
    out << "  " << violation_name(v.kind) << " at (" << v.at.x << "," << v.at.y << ")";
    if (v.edges)
      out << " between " << describe_segment(v.edges->first) << " and "
          << describe_segment(v.edges->second);
    out << "\n";
  }
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stabbing-number toolkit for rectangular partitions of rectilinear polygons"};
  app.require_subcommand(1);

  std::string input = "-", output, model_name_arg = "rpst", select_spec;
  int vertices = 20, count = 1, jobs = int(std::thread::hardware_concurrency());
  std::uint64_t seed = 1;
  bool strict = false, labels = false;
  std::vector<std::string> hunt_models;

  auto* gen = app.add_subcommand("gen", "Generate a random polygon as .rect text");
  gen->add_option("--vertices", vertices, "Vertex count (even, >= 4)")->required();
  gen->add_option("--seed", seed, "Generator seed");
  gen->add_option("-o,--output", output, "Output file (default stdout)");

  auto* grid = app.add_subcommand("grid", "Print the grid arrangement of a polygon");
  grid->add_option("file", input, "Input .rect file or -");
  grid->add_option("-o,--output", output, "Output file");

  auto* model = app.add_subcommand("model", "Export an integer model as LP text");
  model->add_option("file", input, "Input .rect file or -");
  model->add_option("--model", model_name_arg, "rpst|rpst2|conforming");
  model->add_option("-o,--output", output, "Output file");

  auto* relax_cmd = app.add_subcommand("relax", "Solve the LP relaxation exactly");
  relax_cmd->add_option("file", input, "Input .rect file or -");
  relax_cmd->add_option("--model", model_name_arg, "rpst|rpst2|conforming");
  relax_cmd->add_option("-o,--output", output, "Output file");

  auto* solve = app.add_subcommand("solve", "Solve the integer model by branch and bound");
  solve->add_option("file", input, "Input .rect file or -");
  solve->add_option("--model", model_name_arg, "rpst|rpst2|conforming");
  solve->add_option("-o,--output", output, "Output file");

  auto* round_cmd = app.add_subcommand("round", "Relax, round, and diagnose the result");
  round_cmd->add_option("file", input, "Input .rect file or -");
  round_cmd->add_option("--model", model_name_arg, "rpst|rpst2|conforming");
  round_cmd->add_flag("--strict", strict, "Exit 1 when the rounded selection is infeasible");
  round_cmd->add_option("-o,--output", output, "Output file");

  auto* check = app.add_subcommand("check", "Validate an edge selection as a partition");
  check->add_option("file", input, "Input .rect file or -");
  check->add_option("--select", select_spec, "Comma list of edge indices, or h/v")->required();
  check->add_option("-o,--output", output, "Output file");

  auto* stab_cmd = app.add_subcommand("stab", "Per-line stabbing report of a selection");
  stab_cmd->add_option("file", input, "Input .rect file or -");
  stab_cmd->add_option("--select", select_spec, "Comma list of edge indices, or h/v")->required();
  stab_cmd->add_option("-o,--output", output, "Output file");

  auto* normalize = app.add_subcommand("normalize", "Drag maximal segments onto reflex anchors");
  normalize->add_option("file", input, "Input .rect file or -");
  normalize->add_option("--select", select_spec, "Comma list of edge indices, or h/v")->required();
  normalize->add_option("-o,--output", output, "Output file");

  auto* hunt_cmd = app.add_subcommand("hunt", "Search random instances for rounding failures");
  hunt_cmd->add_option("--vertices", vertices, "Vertex count per instance");
  hunt_cmd->add_option("--count", count, "Number of instances")->required();
  hunt_cmd->add_option("--seed", seed, "First seed");
  hunt_cmd->add_option("--model", hunt_models, "rpst and/or rpst2 (default both)");
  hunt_cmd->add_option("--jobs", jobs, "Worker threads");
  hunt_cmd->add_option("-o,--output", output, "Output file");

  auto* render = app.add_subcommand("render", "Render a polygon (and selection) as SVG");
  render->add_option("file", input, "Input .rect file or -");
  render->add_option("--select", select_spec, "Partition selection to draw");
  render->add_flag("--labels", labels, "Label edges with relaxation values");
  render->add_option("--model", model_name_arg, "Model for --labels");
  render->add_option("-o,--output", output, "Output file");

  CLI11_PARSE(app, argc, argv);

  try {
    std::ostringstream out;

    if (gen->parsed()) {
      out << write_rect(generate_polygon(vertices, seed));
    } else if (grid->parsed()) {
      OrthoPolygon poly = parse_rect(read_input(input));
      Arrangement arr = build_arrangement(poly);
      out << "vertices " << poly.vertices.size() << " (reflex " << arr.reflex.size() << ", convex "
          << arr.convex.size() << ")\n";
      out << "steiner " << arr.steiner.size() << ", border " << arr.border.size() << "\n";
      out << "grid segments " << arr.grid_segments.size() << "\n";
      for (const Segment& g : arr.grid_segments) out << "  " << describe_segment(g) << "\n";
      out << "internal edges " << arr.internal_edges.size() << "\n";
      for (size_t i = 0; i < arr.internal_edges.size(); ++i)
        out << "  x" << i << " " << describe_segment(arr.internal_edges[i]) << "\n";
      out << "extended edges " << arr.extended_edges.size() << "\n";
      for (size_t i = 0; i < arr.extended_edges.size(); ++i)
        out << "  e" << i << " " << describe_segment(arr.extended_edges[i]) << "\n";
      out << "stab lines " << arr.stab_lines.size() << "\n";
      for (const StabLine& line : arr.stab_lines) out << "  " << describe_line(line) << "\n";
    } else if (model->parsed()) {
      Arrangement arr = build_arrangement(parse_rect(read_input(input)));
      out << export_lp_text(build_model(arr, parse_model(model_name_arg)));
    } else if (relax_cmd->parsed()) {
      Arrangement arr = build_arrangement(parse_rect(read_input(input)));
      LinearProgram lp = relax(build_model(arr, parse_model(model_name_arg)));
      LpSolution sol = simplex(lp);
      if (sol.status != SolveStatus::Optimal) {
        out << "status " << (sol.status == SolveStatus::Infeasible ? "infeasible" : "unbounded")
            << "\n";
      } else {
        out << "objective " << sol.objective.get_str() << "\n";
        for (size_t j = 0; j < lp.variables.size(); ++j)
          out << lp.variables[j].name << " = " << sol.values[j].get_str() << "\n";
      }
    } else if (solve->parsed()) {
      Arrangement arr = build_arrangement(parse_rect(read_input(input)));
      LinearProgram ip = build_model(arr, parse_model(model_name_arg));
      MipSolution mip = branch_and_bound(ip);
      if (mip.status != SolveStatus::Optimal) {
        out << "status infeasible\n";
      } else {
        out << "k = " << mip.k_opt << "\n";
        out << "dual bound " << mip.dual_bound.get_str() << ", nodes " << mip.nodes << "\n";
        out << "selected " << mip.incumbent.chosen.size() << " edges\n";
        for (int c : mip.incumbent.chosen)
          out << "  x" << c << " " << describe_segment(ip.columns[c]) << "\n";
      }
    } else if (round_cmd->parsed()) {
      Arrangement arr = build_arrangement(parse_rect(read_input(input)));
      RoundingOutcome res = round_and_check(arr, parse_model(model_name_arg));
      out << "lp objective " << res.lp_objective.get_str() << "\n";
      out << "selected " << res.selection.chosen.size() << " edges\n";
      if (res.report.feasible()) {
        out << "feasible, stabbing number " << *res.rounded_stab << "\n";
      } else {
        out << "infeasible rounding:\n" << describe_report(res.report);
      }
      write_output(output, out.str());
      return strict && !res.report.feasible() ? 1 : 0;
    } else if (check->parsed()) {
      Arrangement arr = build_arrangement(parse_rect(read_input(input)));
      EdgeSelection sel = parse_selection(arr, select_spec);
      try {
        Partition part = validate_partition(sel, arr);
        out << "feasible, stabbing number " << stabbing_number(part, arr).stabbing_number << "\n";
      } catch (const NotAPartitionError& e) {
        out << "infeasible:\n" << describe_report(e.report());
      }
    } else if (stab_cmd->parsed()) {
      Arrangement arr = build_arrangement(parse_rect(read_input(input)));
      Partition part = validate_partition(parse_selection(arr, select_spec), arr);
      StabbingReport rep = stabbing_number(part, arr);
      for (const auto& [line, n] : rep.per_line) out << describe_line(line) << ": " << n << "\n";
      out << "stabbing number " << rep.stabbing_number << "\n";
    } else if (normalize->parsed()) {
      Arrangement arr = build_arrangement(parse_rect(read_input(input)));
      Partition part = validate_partition(parse_selection(arr, select_spec), arr);
      Partition norm = normalize_dragging(part);
      out << "before: " << part.segments.size() << " segments, stabbing "
          << stabbing_number(part, arr).stabbing_number << "\n";
      out << "after: " << norm.segments.size() << " segments, stabbing "
          << stabbing_number(norm, arr).stabbing_number << "\n";
      for (const Segment& s : maximal_segments(norm)) out << "  " << describe_segment(s) << "\n";
    } else if (hunt_cmd->parsed()) {
      HuntConfig cfg;
      cfg.vertex_target = vertices;
      cfg.instance_count = count;
      cfg.seed = seed;
      cfg.jobs = std::max(1, jobs);
      if (!hunt_models.empty()) {
        cfg.model_kinds.clear();
        for (const std::string& m : hunt_models) cfg.model_kinds.push_back(parse_model(m));
      }
      std::vector<FailureRecord> records = hunt(cfg);
      for (const FailureRecord& r : records) out << write_failure_record(r);
      std::cerr << records.size() << " failure(s) in " << count << " instance(s)\n";
    } else if (render->parsed()) {
      OrthoPolygon poly = parse_rect(read_input(input));
      Arrangement arr = build_arrangement(poly);
      std::optional<Partition> part;
      if (!select_spec.empty()) part = validate_partition(parse_selection(arr, select_spec), arr);
      std::map<Segment, Rational> values;
      if (labels) {
        LinearProgram lp = relax(build_model(arr, parse_model(model_name_arg)));
        LpSolution sol = simplex(lp);
        for (int j = 0; j < lp.edge_count(); ++j) values[lp.columns[j]] = sol.values[j];
      }
      out << render_svg(poly, labels ? &values : nullptr, part ? &*part : nullptr);
    }

    write_output(output, out.str());
    return 0;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}

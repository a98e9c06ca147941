// Command-line surface for the H-coloring library.
//
// Exit codes: 0 = statement verified / object found; 1 = refuted / not
// found; 2 = inconclusive (node limit); 3 = usage error; 4 = I/O or data
// error. Diagnostics go to stderr, data to stdout or files.

#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "hcolor/canonical.hpp"
#include "hcolor/generate.hpp"
#include "hcolor/graph.hpp"
#include "hcolor/hcoloring.hpp"
#include "hcolor/io.hpp"
#include "hcolor/matchings.hpp"

namespace {

using namespace hcolor;

struct CommonArgs {
  int workers = 0;
  std::uint64_t node_limit = 1'000'000'000;
  bool no_symmetry = false;
  std::string strategy = "vertex";
  std::string out_dir;
  std::string report_path;
};

GenStrategy parse_strategy(const std::string& name) {
  if (name == "vertex") return GenStrategy::VertexAugmentation;
  if (name == "edge") return GenStrategy::EdgeAugmentation;
  throw Error(ErrorCode::BadArguments,
              "unknown strategy '" + name + "' (use vertex|edge)");
}

RunOptions to_run_options(const CommonArgs& args) {
  RunOptions opts;
  opts.workers = args.workers;
  opts.node_limit = args.node_limit;
  opts.symmetry_break = !args.no_symmetry;
  opts.strategy = parse_strategy(args.strategy);
  opts.dump_dir = args.out_dir;
  return opts;
}

int emit_report(const VerificationReport& rep, const CommonArgs& args) {
  std::string json = report_to_json_string(rep);
  std::cout << json;
  if (!args.report_path.empty()) {
    std::ofstream out(args.report_path);
    if (!out) {
      std::cerr << "cannot write " << args.report_path << "\n";
      return 4;
    }
    out << json;
  }
  std::cerr << rep.task << ": examined " << rep.examined << " graphs, "
            << rep.hits.size() << " hits, " << rep.failures.size()
            << " counterexamples, " << rep.inconclusive.size()
            << " inconclusive (" << rep.elapsed_ms << " ms)\n";
  if (!rep.failures.empty()) return 1;
  if (!rep.inconclusive.empty()) return 2;
  return 0;
}

int run_solve(const std::string& g_sel, const std::string& h_sel,
              bool all, int max_solutions, bool symmetry,
              std::uint64_t node_limit, const std::string& out_path) {
  CubicMultigraph g = named_graph(g_sel);
  CubicMultigraph h = named_graph(h_sel);
  SolveOptions opts;
  opts.enumerate_all = all;
  opts.max_solutions = max_solutions;
  opts.symmetry_break = symmetry;
  opts.node_limit = node_limit;
  SolveOutcome out = solve(g, h, opts);
  std::cerr << "status " << solve_status_name(out.status) << ", "
            << out.witnesses.size() << " witness(es), " << out.stats.nodes
            << " nodes, " << out.stats.micros << " us\n";
  if (out.status != SolveStatus::Found)
    return out.status == SolveStatus::ExhaustedNone ? 1 : 2;
  for (std::size_t i = 0; i < out.witnesses.size(); ++i) {
    HColoring f = out.witness(g, h, i);
    if (out_path.empty()) {
      std::cout << write_coloring_text(f);
    } else if (out.witnesses.size() == 1) {
      write_coloring_file(out_path, f);
    } else {
      write_coloring_file(out_path + "." + std::to_string(i), f);
    }
  }
  return 0;
}

int run_check(const std::string& g_sel, const std::string& h_sel,
              const std::string& coloring_path) {
  CubicMultigraph g = named_graph(g_sel);
  CubicMultigraph h = named_graph(h_sel);
  HColoring f = parse_coloring_file(coloring_path, g, h);
  CheckResult result = check(f);
  if (result.ok) {
    std::cerr << "valid\n";
    return 0;
  }
  std::cerr << "invalid: " << result.violation << "\n";
  return 1;
}

int run_gen(int max_n, bool any, bool bridgeless, bool simple_only,
            const std::string& strategy, bool count_only) {
  GenFilter filter;
  filter.max_n = max_n;
  filter.connected = !any;
  filter.bridgeless = bridgeless;
  filter.simple_only = simple_only;
  auto graphs = gen_cubic(filter, parse_strategy(strategy));
  if (count_only) {
    std::map<int, int> by_n;
    for (const auto& g : graphs) ++by_n[g.vertex_count()];
    for (auto [n, count] : by_n)
      std::cout << n << " " << count << "\n";
    std::cerr << "total " << graphs.size() << " classes (" << filter.describe()
              << ")\n";
    return 0;
  }
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    std::cout << "# graph " << i << " canonical " << canonical_hex(graphs[i])
              << "\n"
              << write_graph_text(graphs[i]);
  }
  std::cerr << graphs.size() << " graphs (" << filter.describe() << ")\n";
  return 0;
}

int run_covers(const std::string& g_sel, const std::string& coloring_path,
               const std::string& out_dir) {
  CubicMultigraph g = named_graph(g_sel);
  CubicMultigraph h = petersen();
  HColoring f{g, h, {}};
  if (!coloring_path.empty()) {
    f = parse_coloring_file(coloring_path, g, h);
  } else {
    SolveOptions opts;
    opts.symmetry_break = true;
    SolveOutcome out = solve(g, h, opts);
    std::cerr << "solve status " << solve_status_name(out.status) << "\n";
    if (out.status != SolveStatus::Found)
      return out.status == SolveStatus::ExhaustedNone ? 1 : 2;
    f = out.witness(g, h);
  }
  CheckResult result = check(f);
  if (!result.ok) {
    std::cerr << "invalid coloring: " << result.violation << "\n";
    return 1;
  }
  std::vector<EdgeSubset> bf = derive_bf_cover(f);
  std::vector<EdgeSubset> even;
  try {
    even = derive_52_cover(f);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  auto print_cover = [&](const char* name,
                         const std::vector<EdgeSubset>& cover) {
    std::cout << name << " " << cover.size() << "\n";
    for (EdgeSubset s : cover) {
      bool first = true;
      for (EdgeId e : edge_ids(s)) {
        std::cout << (first ? "" : " ") << e;
        first = false;
      }
      std::cout << "\n";
    }
  };
  std::cout << write_coloring_text(f);
  print_cover("bf_cover", bf);
  print_cover("even_cover_52", even);
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    write_coloring_file(out_dir + "/coloring.hcol", f);
  }
  std::cerr << "6-cover and (5,2)-cover derived and validated\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"H-colorings of cubic multigraphs: solver, generator, verifiers"};
  app.require_subcommand(1);

  // solve
  std::string g_sel, h_sel, coloring_path, out_path;
  bool all = false, symmetry = false;
  int max_solutions = 1 << 20;
  std::uint64_t node_limit = 1'000'000'000;
  auto* solve_cmd =
      app.add_subcommand("solve", "Search for a coloring of --g by edges of --h");
  solve_cmd->set_help_flag("--help", "print help");  // frees -h for --h
  solve_cmd->add_option("--g", g_sel, "source graph selector")->required();
  solve_cmd->add_option("--h", h_sel, "color graph selector")->required();
  solve_cmd->add_flag("--all", all, "enumerate all colorings");
  solve_cmd->add_option("--max-solutions", max_solutions, "cap for --all");
  solve_cmd->add_flag("--symmetry-break", symmetry,
                      "branch the first edge over color-graph edge orbits");
  solve_cmd->add_option("--node-limit", node_limit, "search node cap");
  solve_cmd->add_option("--out", out_path, "coloring output file");

  // check
  auto* check_cmd =
      app.add_subcommand("check", "Validate a coloring file against --g and --h");
  check_cmd->set_help_flag("--help", "print help");
  check_cmd->add_option("--g", g_sel, "source graph selector")->required();
  check_cmd->add_option("--h", h_sel, "color graph selector")->required();
  check_cmd->add_option("--coloring", coloring_path, "coloring file")
      ->required();

  // gen
  int max_n = 10;
  bool any = false, bridgeless = false, simple_only = false, count_only = false;
  std::string strategy = "vertex";
  auto* gen_cmd = app.add_subcommand(
      "gen", "Enumerate cubic multigraphs, one per isomorphism class");
  gen_cmd->add_option("--max-n", max_n, "largest vertex count (even)");
  gen_cmd->add_flag("--any", any, "include disconnected graphs");
  gen_cmd->add_flag("--bridgeless", bridgeless, "bridgeless only");
  gen_cmd->add_flag("--simple-only", simple_only, "no parallel edges");
  gen_cmd->add_option("--strategy", strategy, "vertex|edge");
  gen_cmd->add_flag("--count-only", count_only, "print per-n class counts");

  // verify / scan
  CommonArgs common;
  std::string which;
  auto* verify_cmd =
      app.add_subcommand("verify", "Machine-check one of the statements");
  verify_cmd->add_option("statement", which, "prop1|prop2|thm1|thm2")
      ->required();
  int verify_max_n = 10;
  verify_cmd->add_option("--max-n", verify_max_n, "universe bound");
  auto* scan_cmd = app.add_subcommand("scan", "Conjecture scan over a range");
  std::string scan_which;
  scan_cmd->add_option("conjecture", scan_which, "jaeger|sylvester")
      ->required();
  int scan_max_n = 10;
  scan_cmd->add_option("--max-n", scan_max_n, "universe bound");
  for (CLI::App* cmd : {verify_cmd, scan_cmd}) {
    cmd->add_option("--workers", common.workers, "worker threads (0 = auto)");
    cmd->add_option("--node-limit", common.node_limit, "per-solve node cap");
    cmd->add_flag("--no-symmetry-break", common.no_symmetry,
                  "disable solver symmetry breaking");
    cmd->add_option("--strategy", common.strategy, "generator: vertex|edge");
    cmd->add_option("--out", common.out_dir, "counterexample dump directory");
    cmd->add_option("--report", common.report_path, "also write JSON here");
  }

  // covers
  std::string covers_coloring, covers_out;
  auto* covers_cmd = app.add_subcommand(
      "covers",
      "Derive the 6-matching and (5,2) even covers from a Petersen coloring");
  covers_cmd->add_option("--g", g_sel, "graph selector")->required();
  covers_cmd->add_option("--coloring", covers_coloring,
                         "use this coloring instead of solving");
  covers_cmd->add_option("--out", covers_out, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 3;
  }

  try {
    if (solve_cmd->parsed())
      return run_solve(g_sel, h_sel, all, max_solutions, symmetry, node_limit,
                       out_path);
    if (check_cmd->parsed()) return run_check(g_sel, h_sel, coloring_path);
    if (gen_cmd->parsed())
      return run_gen(max_n, any, bridgeless, simple_only, strategy,
                     count_only);
    if (verify_cmd->parsed()) {
      RunOptions opts = to_run_options(common);
      VerificationReport rep;
      if (which == "prop1") rep = verify_prop1(verify_max_n, opts);
      else if (which == "prop2") rep = verify_prop2(verify_max_n, opts);
      else if (which == "thm1") rep = verify_thm1(verify_max_n, opts);
      else if (which == "thm2") rep = verify_thm2(verify_max_n, opts);
      else {
        std::cerr << "unknown statement '" << which << "'\n";
        return 3;
      }
      return emit_report(rep, common);
    }
    if (scan_cmd->parsed()) {
      RunOptions opts = to_run_options(common);
      VerificationReport rep;
      if (scan_which == "jaeger") rep = scan_jaeger(scan_max_n, opts);
      else if (scan_which == "sylvester") rep = scan_sylvester(scan_max_n, opts);
      else {
        std::cerr << "unknown conjecture '" << scan_which << "'\n";
        return 3;
      }
      return emit_report(rep, common);
    }
    if (covers_cmd->parsed())
      return run_covers(g_sel, covers_coloring, covers_out);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return e.code() == ErrorCode::BadArguments ? 3 : 4;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 4;
  }
  return 3;
}

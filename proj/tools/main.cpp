#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "tassp/cli.hpp"

namespace {

std::pair<int, int> parse_m_sweep(const std::string& text) {
  const auto sep = text.find("..");
  if (sep == std::string::npos)
    throw std::invalid_argument("--m-sweep expects A..B (e.g. 1..5)");
  const int lo = std::stoi(text.substr(0, sep));
  const int hi = std::stoi(text.substr(sep + 2));
  if (lo < 1 || hi < lo) throw std::invalid_argument("--m-sweep range must satisfy 1 <= A <= B");
  return {lo, hi};
}

void add_oracle_limit_options(CLI::App* cmd, tassp::OracleLimits& limits) {
  cmd->add_option("--oracle-max-targets", limits.max_targets,
                  "Oracle target cap (instances above are skipped or rejected)");
  cmd->add_option("--oracle-max-robots", limits.max_robots, "Oracle robot cap");
  cmd->add_option("--oracle-max-nodes", limits.max_nodes, "Oracle search node budget");
  cmd->add_option("--oracle-max-seconds", limits.max_seconds, "Oracle time budget per instance");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tassp: route k robots through targets whose tasks are handled by m operators"};
  app.require_subcommand(1);

  tassp::GenerateOptions generate_options;
  auto* generate = app.add_subcommand("generate", "Generate random instances plus a manifest");
  generate->add_option("-n,--targets", generate_options.params.n, "Targets per instance");
  generate->add_option("-k,--robots", generate_options.params.k, "Robots");
  generate->add_option("-m,--operators", generate_options.params.m, "Operators");
  generate->add_option("--count", generate_options.count, "Number of instances");
  generate->add_option("--seed", generate_options.params.seed, "Seed of the first instance");
  generate->add_option("--area", generate_options.params.area, "Square side for positions");
  generate->add_option("--p-mean-frac", generate_options.params.p_mean_frac,
                       "Processing mean as a fraction of the average pairwise distance");
  generate->add_option("--p-std-frac", generate_options.params.p_std_frac,
                       "Processing stddev as a fraction of the average pairwise distance");
  generate->add_option("--out", generate_options.out_dir, "Output directory");

  tassp::SolveOptions solve_options;
  std::string m_sweep_text;
  std::string matching_text = "exact";
  auto* solve = app.add_subcommand("solve", "Solve instances and write solutions + reports");
  solve->add_option("inputs", solve_options.inputs, "Instance .json files or manifests")
      ->required();
  solve->add_option("--out", solve_options.out_dir, "Output directory");
  solve->add_flag("--exact", solve_options.exact, "Also run the exact oracle where it fits");
  solve->add_flag("--emit-lp", solve_options.emit_lp, "Also export the MILP as an .lp file");
  solve->add_option("--m-sweep", m_sweep_text, "Solve each instance for every m in A..B");
  solve->add_option("--jobs", solve_options.jobs, "Parallel instance solves");
  solve->add_flag("--strict", solve_options.strict,
                  "Fail (exit 1) when --exact skips an instance beyond the oracle caps");
  solve->add_option("--matching", matching_text, "Matching mode inside christofides")
      ->check(CLI::IsMember({"exact", "greedy-unsafe"}));
  add_oracle_limit_options(solve, solve_options.oracle_limits);

  tassp::CertifyOptions certify_options;
  auto* certify = app.add_subcommand("certify", "Check feasibility, bounds and the ratio");
  certify->add_option("inputs", certify_options.inputs, "Instance .json files or manifests")
      ->required();
  add_oracle_limit_options(certify, certify_options.oracle_limits);

  tassp::BoundsOptions bounds_options;
  auto* bounds = app.add_subcommand("bounds", "Print lower bounds per instance");
  bounds->add_option("inputs", bounds_options.inputs, "Instance .json files or manifests")
      ->required();

  tassp::ExactOptions exact_options;
  auto* exact = app.add_subcommand("exact", "Run the exact oracle");
  exact->add_option("inputs", exact_options.inputs, "Instance .json files or manifests")
      ->required();
  add_oracle_limit_options(exact, exact_options.limits);

  tassp::ExportMilpOptions export_options;
  auto* export_milp = app.add_subcommand("export-milp", "Write LP-format models");
  export_milp->add_option("inputs", export_options.inputs, "Instance .json files or manifests")
      ->required();
  export_milp->add_option("--out", export_options.out_dir, "Output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? tassp::kExitOk : tassp::kExitUsage;
  }

  try {
    if (generate->parsed()) return tassp::cmd_generate(generate_options, std::cout);
    if (solve->parsed()) {
      if (!m_sweep_text.empty()) solve_options.m_sweep = parse_m_sweep(m_sweep_text);
      solve_options.matching = matching_text == "greedy-unsafe"
                                   ? tassp::MatchingMode::GreedyUnsafe
                                   : tassp::MatchingMode::Exact;
      return tassp::cmd_solve(solve_options, std::cout);
    }
    if (certify->parsed()) return tassp::cmd_certify(certify_options, std::cout);
    if (bounds->parsed()) return tassp::cmd_bounds(bounds_options, std::cout);
    if (exact->parsed()) return tassp::cmd_exact(exact_options, std::cout);
    if (export_milp->parsed()) return tassp::cmd_export_milp(export_options, std::cout);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return tassp::kExitUsage;
  }
  return tassp::kExitUsage;
}

#include "tassp/cli.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "tassp/bounds.hpp"
#include "tassp/io.hpp"
#include "tassp/milp.hpp"
#include "tassp/report.hpp"
#include "tassp/tsp.hpp"

namespace tassp {
namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

bool close(double a, double b, double tol = 1e-9) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

Instance with_m(const Instance& instance, int m, const std::string& name) {
  return Instance(name, instance.k(), m, instance.depot_pos(), instance.targets(),
                  instance.metric());
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error(path.string() + ": cannot open for writing");
  out << text;
  if (!out) throw std::runtime_error(path.string() + ": write failed");
}

bool split_guarantee_holds(const Metric& metric, int k, std::string* why) {
  if (metric.size() < 2) return true;
  const Tour tour = christofides(metric);
  const RouteSet routes = splitour(tour, k, metric);
  const double L = tour.cost;
  double c_max = 0.0;
  for (int t : tour.order) c_max = std::max(c_max, metric.cost(0, t));
  const double bound = L / k + (1.0 - 1.0 / k) * 2.0 * c_max;
  const double worst = max_route_travel_cost(metric, routes);
  if (worst <= bound + 1e-9 * std::max({1.0, worst, bound})) return true;
  if (why) {
    std::ostringstream os;
    os << "split guarantee violated: max route " << worst << " > " << bound;
    *why = os.str();
  }
  return false;
}

}  // namespace

std::vector<std::string> expand_inputs(const std::vector<std::string>& inputs) {
  std::vector<std::string> paths;
  for (const auto& input : inputs) {
    if (fs::path(input).extension() == ".json") {
      paths.push_back(input);
      continue;
    }
    std::ifstream in(input);
    if (!in) throw std::runtime_error(input + ": cannot open manifest");
    const fs::path base = fs::path(input).parent_path();
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      fs::path p(line);
      paths.push_back(p.is_absolute() ? p.string() : (base / p).string());
    }
  }
  return paths;
}

int cmd_generate(const GenerateOptions& options, std::ostream& out) {
  if (options.count < 0) throw std::invalid_argument("generate: count must be nonnegative");
  fs::create_directories(options.out_dir);
  std::ostringstream manifest;
  for (int i = 0; i < options.count; ++i) {
    GeneratorParams params = options.params;
    params.seed = options.params.seed + static_cast<std::uint64_t>(i);
    const Instance instance = generate(params);
    const std::string file_name = instance.name() + ".json";
    write_instance(instance, (fs::path(options.out_dir) / file_name).string());
    manifest << file_name << "\n";
  }
  write_text(fs::path(options.out_dir) / "manifest.txt", manifest.str());
  out << "wrote " << options.count << " instance(s) and manifest.txt to " << options.out_dir
      << "\n";
  return kExitOk;
}

int cmd_solve(const SolveOptions& options, std::ostream& out) {
  const auto paths = expand_inputs(options.inputs);
  fs::create_directories(options.out_dir);

  struct Task {
    Instance instance;
    std::string file_stem;
  };
  std::vector<Task> tasks;
  for (const auto& path : paths) {
    Instance base = read_instance(path);
    if (options.m_sweep) {
      for (int m = options.m_sweep->first; m <= options.m_sweep->second; ++m) {
        std::string stem = base.name() + "-m" + std::to_string(m);
        tasks.push_back({with_m(base, m, stem), stem});
      }
    } else {
      tasks.push_back({std::move(base), fs::path(path).stem().string()});
    }
  }

  struct Result {
    std::string csv;
    std::string json;
    bool oracle_skipped = false;
    std::string error;
  };
  std::vector<Result> results(tasks.size());

  ApproxOptions approx_options;
  approx_options.matching = options.matching;

  auto solve_one = [&](std::size_t index) {
    const Instance& instance = tasks[index].instance;
    Result& result = results[index];
    try {
      const ApproxSolution solution = approx(instance, approx_options);
      const BoundsReport bounds = lower_bounds(instance);

      std::optional<ExactResult> exact;
      std::optional<double> oracle_runtime;
      if (options.exact) {
        if (instance.num_targets() <= options.oracle_limits.max_targets &&
            instance.k() <= options.oracle_limits.max_robots) {
          const auto start = Clock::now();
          exact = exact_solve(instance, options.oracle_limits);
          oracle_runtime = std::chrono::duration<double>(Clock::now() - start).count();
        } else {
          result.oracle_skipped = true;
        }
      }

      SolveReport report = make_report(instance, solution, bounds, exact, oracle_runtime);
      if (result.oracle_skipped) report.flags.push_back("oracle-cap-exceeded");
      result.csv = report_csv_row(report);
      result.json = report_json(report);

      write_text(fs::path(options.out_dir) / (tasks[index].file_stem + ".solution.json"),
                 solution_to_json(instance, solution));
      if (options.emit_lp)
        write_lp(build_milp(instance),
                 (fs::path(options.out_dir) / (tasks[index].file_stem + ".lp")).string());
    } catch (const std::exception& e) {
      result.error = e.what();
    }
  };

  const int jobs = std::max(1, options.jobs);
  if (jobs == 1 || tasks.size() <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) solve_one(i);
  } else {
    std::atomic<std::size_t> cursor{0};
    std::vector<std::thread> workers;
    const std::size_t worker_count =
        std::min<std::size_t>(static_cast<std::size_t>(jobs), tasks.size());
    workers.reserve(worker_count);
    for (std::size_t w = 0; w < worker_count; ++w)
      workers.emplace_back([&] {
        for (;;) {
          const std::size_t i = cursor.fetch_add(1);
          if (i >= results.size()) return;
          solve_one(i);
        }
      });
    for (auto& worker : workers) worker.join();
  }

  for (const auto& result : results)
    if (!result.error.empty()) throw std::runtime_error("solve failed: " + result.error);

  std::ostringstream csv;
  std::ostringstream sidecar;
  csv << report_csv_header() << "\n";
  sidecar << "[\n";
  bool oracle_skipped = false;
  for (std::size_t i = 0; i < results.size(); ++i) {
    csv << results[i].csv << "\n";
    sidecar << "  " << results[i].json << (i + 1 < results.size() ? "," : "") << "\n";
    oracle_skipped = oracle_skipped || results[i].oracle_skipped;
  }
  sidecar << "]\n";
  write_text(fs::path(options.out_dir) / "report.csv", csv.str());
  write_text(fs::path(options.out_dir) / "report.json", sidecar.str());
  out << csv.str();

  return oracle_skipped && options.strict ? kExitCheckFailed : kExitOk;
}

int cmd_certify(const CertifyOptions& options, std::ostream& out) {
  const auto paths = expand_inputs(options.inputs);
  int failures = 0;
  for (const auto& path : paths) {
    const Instance instance = read_instance(path);
    std::vector<std::string> problems;
    try {
      const ApproxSolution solution = approx(instance);

      for (const auto* result : {&solution.s1, &solution.s2}) {
        auto report = validate_solution(instance, result->timeline);
        for (const auto& v : report.violations) problems.push_back("feasibility: " + v);
        try {
          cost_breakdown(instance, result->timeline);
        } catch (const std::exception& e) {
          problems.push_back(e.what());
        }
      }

      std::string why;
      if (!split_guarantee_holds(instance.metric(), instance.k(), &why))
        problems.push_back("base tour: " + why);
      if (!split_guarantee_holds(instance.modified(), instance.k(), &why))
        problems.push_back("modified tour: " + why);

      if (instance.m() >= instance.k()) {
        const Metric modified = instance.modified();
        const Timeline& timeline = solution.s2.timeline;
        for (std::size_t r = 0; r < timeline.robot_intervals.size(); ++r) {
          for (const auto& iv : timeline.robot_intervals[r])
            if (iv.phase == Phase::Wait && iv.end > iv.start) {
              problems.push_back("robot " + std::to_string(r) + " waits although m >= k");
              break;
            }
          const double expected =
              route_travel_cost(modified, timeline.routes.routes[r]);
          if (!close(timeline.mission_time[r], expected))
            problems.push_back("robot " + std::to_string(r) +
                               " mission time differs from modified route cost");
        }
      }

      const bool oracle_fits = instance.num_targets() <= options.oracle_limits.max_targets &&
                               instance.k() <= options.oracle_limits.max_robots;
      if (oracle_fits && instance.k() >= 2) {
        const ExactResult exact = exact_solve(instance, options.oracle_limits);
        if (!exact.proven) {
          problems.push_back("oracle budget exhausted; ratio unchecked");
        } else {
          const double ratio = theorem_ratio(instance.k(), instance.m()).value();
          if (solution.cost() > ratio * exact.opt_cost)
            problems.push_back("cost " + std::to_string(solution.cost()) + " exceeds " +
                               std::to_string(ratio) + " x OPT " +
                               std::to_string(exact.opt_cost));
        }
      }
    } catch (const std::exception& e) {
      problems.push_back(e.what());
    }

    if (problems.empty()) {
      out << "PASS " << instance.name() << "\n";
    } else {
      ++failures;
      out << "FAIL " << instance.name();
      for (const auto& p : problems) out << "\n  - " << p;
      out << "\n";
    }
  }
  out << (failures == 0 ? "certify: all instances pass\n"
                        : "certify: " + std::to_string(failures) + " instance(s) failed\n");
  return failures == 0 ? kExitOk : kExitCheckFailed;
}

int cmd_bounds(const BoundsOptions& options, std::ostream& out) {
  out << "name,V,k,m,l1,l2,l3,l_max,tsp_bound_kind\n";
  for (const auto& path : expand_inputs(options.inputs)) {
    const Instance instance = read_instance(path);
    const BoundsReport b = lower_bounds(instance);
    out << instance.name() << ',' << instance.num_vertices() << ',' << instance.k() << ','
        << instance.m() << ',' << b.l1 << ',' << b.l2 << ',' << b.l3 << ',' << b.l_max << ','
        << (b.tsp_bound_kind == TspBoundKind::Exact ? "exact" : "christofides-derived") << "\n";
  }
  return kExitOk;
}

int cmd_exact(const ExactOptions& options, std::ostream& out) {
  out << "name,V,k,m,opt_cost,nodes_explored,proven,runtime_oracle\n";
  for (const auto& path : expand_inputs(options.inputs)) {
    const Instance instance = read_instance(path);
    const auto start = Clock::now();
    const ExactResult result = exact_solve(instance, options.limits);
    const double runtime = std::chrono::duration<double>(Clock::now() - start).count();
    out << instance.name() << ',' << instance.num_vertices() << ',' << instance.k() << ','
        << instance.m() << ',' << result.opt_cost << ',' << result.nodes_explored << ','
        << (result.proven ? "true" : "false") << ',' << runtime << "\n";
  }
  return kExitOk;
}

int cmd_export_milp(const ExportMilpOptions& options, std::ostream& out) {
  fs::create_directories(options.out_dir);
  for (const auto& path : expand_inputs(options.inputs)) {
    const Instance instance = read_instance(path);
    const fs::path lp_path =
        fs::path(options.out_dir) / (fs::path(path).stem().string() + ".lp");
    write_lp(build_milp(instance), lp_path.string());
    out << lp_path.string() << "\n";
  }
  return kExitOk;
}

}  // namespace tassp

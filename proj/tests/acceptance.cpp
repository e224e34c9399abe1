// Acceptance gate: one check per release criterion, each printing a single
// PASS/FAIL line. Exit status is nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "support/helpers.hpp"
#include "support/oracles.hpp"
#include "tassp/approx.hpp"
#include "tassp/bounds.hpp"
#include "tassp/generate.hpp"
#include "tassp/milp.hpp"
#include "tassp/oracle.hpp"
#include "tassp/report.hpp"
#include "tassp/rng.hpp"
#include "tassp/schedule.hpp"
#include "tassp/split.hpp"
#include "tassp/tsp.hpp"

using namespace tassp;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void report(int index, const std::string& name, bool ok, const std::string& detail,
            double elapsed) {
  std::printf("[%2d/10] %s  %s: %s (%.1f s)\n", index, ok ? "PASS" : "FAIL", name.c_str(),
              detail.c_str(), elapsed);
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

double total_wait(const Timeline& timeline) {
  double wait = 0.0;
  for (const auto& intervals : timeline.robot_intervals)
    for (const auto& iv : intervals)
      if (iv.phase == Phase::Wait) wait += iv.end - iv.start;
  return wait;
}

// 1: every solution the solver produces is feasible, at scale.
void criterion_feasibility() {
  const auto start = Clock::now();
  Rng rng(1001);
  int checked = 0;
  bool ok = true;
  std::string detail;
  for (int round = 0; round < 1000 && ok; ++round) {
    const int n = 1 + static_cast<int>(rng.next_u64() % 50);
    const int k = 1 + static_cast<int>(rng.next_u64() % 8);
    const int m = 1 + static_cast<int>(rng.next_u64() % 8);
    const Instance inst = test::random_instance(rng, n, k, m);
    const ApproxSolution solution = approx(inst);
    for (const AlgorithmResult* result : {&solution.s1, &solution.s2, &solution.best()}) {
      const auto report = validate_solution(inst, result->timeline);
      if (!report.ok()) {
        ok = false;
        detail = "violation on n=" + std::to_string(n) + " k=" + std::to_string(k) +
                 " m=" + std::to_string(m) + ": " + report.violations.front();
        break;
      }
    }
    ++checked;
  }
  const double elapsed = seconds_since(start);
  if (ok && elapsed >= 120.0) {
    ok = false;
    detail = "runtime budget exceeded";
  }
  if (ok) detail = std::to_string(checked) + "/1000 instances, all solutions feasible";
  report(1, "feasibility suite", ok, detail, elapsed);
}

// 2: the proven worst-case ratio holds against the exact optimum.
void criterion_ratio() {
  const auto start = Clock::now();
  Rng rng(1002);
  int checked = 0;
  double worst_slack = 0.0;
  bool ok = true;
  std::string detail;
  for (int round = 0; round < 200 && ok; ++round) {
    const int n = 1 + static_cast<int>(rng.next_u64() % 7);
    const int k = 2 + static_cast<int>(rng.next_u64() % 2);
    const int m = 1 + static_cast<int>(rng.next_u64() % 3);
    const Instance inst = test::random_instance(rng, n, k, m);
    const ExactResult exact = exact_solve(inst);
    if (!exact.proven) {
      ok = false;
      detail = "oracle failed to prove n=" + std::to_string(n);
      break;
    }
    const ApproxSolution solution = approx(inst);
    const double limit = theorem_ratio(k, m).value() * exact.opt_cost;
    if (solution.cost() > limit) {
      ok = false;
      detail = "ratio violated: cost " + fmt(solution.cost()) + " > " + fmt(limit) +
               " on n=" + std::to_string(n) + " k=" + std::to_string(k) +
               " m=" + std::to_string(m);
      break;
    }
    worst_slack = std::max(worst_slack, solution.cost() / exact.opt_cost);
    ++checked;
  }
  const double elapsed = seconds_since(start);
  if (ok && elapsed >= 600.0) {
    ok = false;
    detail = "runtime budget exceeded";
  }
  if (ok)
    detail = std::to_string(checked) + "/200 instances within ratio, worst observed " +
             fmt(worst_slack);
  report(2, "worst-case ratio vs oracle", ok, detail, elapsed);
}

// 3: wait-time and mission-time inequalities on arbitrary route sets.
void criterion_wait_bound() {
  const auto start = Clock::now();
  Rng rng(1003);
  int checked = 0;
  bool ok = true;
  std::string detail;
  for (int round = 0; round < 500 && ok; ++round) {
    const int n = 1 + static_cast<int>(rng.next_u64() % 12);
    const int k = 1 + static_cast<int>(rng.next_u64() % 5);
    const int m = 1 + static_cast<int>(rng.next_u64() % 5);
    const Instance inst = test::random_instance(rng, n, k, m);
    const RouteSet routes = test::random_routes(rng, n, k);
    const Timeline timeline = greedy_schedule(inst, routes);
    try {
      const CostBreakdown breakdown = cost_breakdown(inst, timeline);
      // spell the inequalities out instead of leaning on the throwing check
      const double total_p = inst.total_processing();
      for (std::size_t r = 0; r < breakdown.robots.size(); ++r) {
        double route_p = 0.0;
        for (int t : routes.routes[r]) route_p += inst.processing(t);
        const double off_p = total_p - route_p;
        const double wait = breakdown.robots[r].wait;
        const double scale = std::max({1.0, inst.m() * wait, off_p});
        if (inst.m() * wait > off_p + 1e-9 * scale) {
          ok = false;
          detail = "wait bound violated on robot " + std::to_string(r);
          break;
        }
        const double bound = breakdown.robots[r].travel +
                             (1.0 - 1.0 / inst.m()) * route_p + total_p / inst.m();
        if (timeline.mission_time[r] > bound * (1 + 1e-9)) {
          ok = false;
          detail = "mission-time bound violated on robot " + std::to_string(r);
          break;
        }
      }
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    ++checked;
  }
  if (ok) detail = std::to_string(checked) + "/500 route sets within both bounds";
  report(3, "wait and mission-time bounds", ok, detail, seconds_since(start));
}

// 4: the tour-splitting cost guarantee on arbitrary tours.
void criterion_split() {
  const auto start = Clock::now();
  Rng rng(1004);
  int checked = 0;
  bool ok = true;
  std::string detail;
  for (int round = 0; round < 500 && ok; ++round) {
    const int n = 1 + static_cast<int>(rng.next_u64() % 30);
    const int k = 1 + static_cast<int>(rng.next_u64() % 8);
    const Instance inst = test::random_instance(rng, n, k, 1);
    const Metric& metric = inst.metric();
    const std::vector<int> order = test::random_order(rng, n);
    const Tour tour{order, tour_cost(metric, order)};
    const RouteSet routes = splitour(tour, k, metric);
    if (!check_partition(routes, n).empty()) {
      ok = false;
      detail = "split routes are not a partition";
      break;
    }
    double c_max = 0.0;
    for (int i = 1; i <= n; ++i) c_max = std::max(c_max, metric.cost(0, i));
    const double bound = tour.cost / k + (1.0 - 1.0 / k) * 2.0 * c_max;
    if (max_route_travel_cost(metric, routes) > bound * (1 + 1e-9)) {
      ok = false;
      detail = "guarantee violated at n=" + std::to_string(n) + " k=" + std::to_string(k);
      break;
    }
    ++checked;
  }
  if (ok) detail = std::to_string(checked) + "/500 tours within the split bound";
  report(4, "tour split guarantee", ok, detail, seconds_since(start));
}

// 5: christofides stays within 3/2 of the exact tour.
void criterion_christofides() {
  const auto start = Clock::now();
  Rng rng(1005);
  int checked = 0;
  bool ok = true;
  std::string detail;
  for (int round = 0; round < 100 && ok; ++round) {
    const int n = 1 + static_cast<int>(rng.next_u64() % 12);
    const Instance inst = test::random_instance(rng, n, 1, 1);
    const double heuristic = christofides(inst.metric()).cost;
    const double optimum = held_karp(inst.metric()).cost;
    if (heuristic > 1.5 * optimum * (1 + 1e-12)) {
      ok = false;
      detail = "factor violated at n=" + std::to_string(n) + ": " + fmt(heuristic) + " vs opt " +
               fmt(optimum);
      break;
    }
    ++checked;
  }
  if (ok) detail = std::to_string(checked) + "/100 tours within 3/2 of the optimum";
  report(5, "christofides factor", ok, detail, seconds_since(start));
}

// 6: with m >= k >= 2, mission times equal modified route costs, wait-free.
void criterion_identity() {
  const auto start = Clock::now();
  Rng rng(1006);
  int checked = 0;
  bool ok = true;
  std::string detail;
  for (int round = 0; round < 100 && ok; ++round) {
    const int n = 1 + static_cast<int>(rng.next_u64() % 14);
    const int k = 2 + static_cast<int>(rng.next_u64() % 4);
    const int m = k + static_cast<int>(rng.next_u64() % 4);
    const Instance inst = test::random_instance(rng, n, k, m);
    const AlgorithmResult s2 = algorithm2(inst);
    if (total_wait(s2.timeline) != 0.0) {
      ok = false;
      detail = "wait observed with m >= k";
      break;
    }
    const Metric modified = inst.modified();
    for (std::size_t r = 0; r < s2.timeline.mission_time.size(); ++r) {
      const double expected = route_travel_cost(modified, s2.routes.routes[r]);
      const double got = s2.timeline.mission_time[r];
      if (std::abs(got - expected) > 1e-9 * std::max({1.0, got, expected})) {
        ok = false;
        detail = "identity off by " + fmt(std::abs(got - expected)) + " on robot " +
                 std::to_string(r);
        break;
      }
    }
    ++checked;
  }
  if (ok) detail = std::to_string(checked) + "/100 instances wait-free with exact identity";
  report(6, "modified-cost identity (m >= k)", ok, detail, seconds_since(start));
}

// 7: benchmark-class statistics land in the published bands.
void criterion_small_benchmark() {
  const auto start = Clock::now();
  struct Config {
    int n, k, m;
    bool oracle;
  };
  const std::vector<Config> configs{{11, 4, 3, false}, {11, 3, 2, false}, {9, 3, 2, true}};
  bool ok = true;
  std::string detail;
  std::string stats;
  for (const auto& config : configs) {
    double sum_lb = 0.0, sum_opt = 0.0;
    int opt_count = 0;
    double worst_runtime = 0.0;
    for (int i = 0; i < 30; ++i) {
      GeneratorParams params;
      params.n = config.n;
      params.k = config.k;
      params.m = config.m;
      params.seed = 7000 + static_cast<std::uint64_t>(100 * config.n + i);
      const Instance inst = generate(params);
      const ApproxSolution solution = approx(inst);
      worst_runtime = std::max(worst_runtime, solution.runtime_seconds());
      const BoundsReport bounds = lower_bounds(inst);
      sum_lb += solution.cost() / bounds.l_max;
      if (config.oracle) {
        const ExactResult exact = exact_solve(inst);
        if (!exact.proven) {
          ok = false;
          detail = "oracle failed to prove a |V|=10 instance";
        }
        sum_opt += solution.cost() / exact.opt_cost;
        ++opt_count;
      }
    }
    const double mean_lb = sum_lb / 30.0;
    if (!stats.empty()) stats += ", ";
    stats += "V=" + std::to_string(config.n + 1) + " mean_vs_lb=" + fmt(mean_lb);
    if (mean_lb < 1.2 || mean_lb > 1.7) {
      ok = false;
      detail = "mean_vs_lb " + fmt(mean_lb) + " outside [1.2, 1.7] for n=" +
               std::to_string(config.n);
    }
    if (opt_count > 0) {
      const double mean_opt = sum_opt / opt_count;
      stats += " mean_vs_opt=" + fmt(mean_opt);
      if (mean_opt < 1.0 || mean_opt > 1.25) {
        ok = false;
        detail = "mean_vs_opt " + fmt(mean_opt) + " outside [1.0, 1.25]";
      }
    }
    if (worst_runtime >= 1.0) {
      ok = false;
      detail = "approx runtime " + fmt(worst_runtime) + " s exceeds 1 s";
    }
  }
  if (ok) detail = stats;
  report(7, "small benchmark bands", ok, detail, seconds_since(start));
}

// 8: operator sweep on the large benchmark class.
void criterion_operator_sweep() {
  const auto start = Clock::now();
  const int count = 25;
  bool ok = true;
  std::string detail;
  double mean_cost[6] = {0};
  int binding_expected[6] = {0};
  int per_instance_monotone = 0;
  double worst_runtime = 0.0;
  for (int i = 0; i < count; ++i) {
    GeneratorParams params;
    params.n = 49;
    params.k = 5;
    params.seed = 8000 + static_cast<std::uint64_t>(i);
    bool monotone = true;
    double previous = 0.0;
    for (int m = 1; m <= 5; ++m) {
      params.m = m;
      const Instance inst = generate(params);
      const ApproxSolution solution = approx(inst);
      worst_runtime = std::max(worst_runtime, solution.runtime_seconds());
      mean_cost[m] += solution.cost() / count;
      if (m > 1 && solution.cost() > previous * (1 + 1e-12)) monotone = false;
      previous = solution.cost();
      const SolveReport row = make_report(inst, solution, lower_bounds(inst));
      const std::string expected = m <= 3 ? "L2" : "L1";
      if (row.binding_bound == expected) ++binding_expected[m];
    }
    if (monotone) ++per_instance_monotone;
  }
  if (!(mean_cost[1] > mean_cost[2] && mean_cost[2] > mean_cost[3])) {
    ok = false;
    detail = "means not strictly decreasing over m=1..3";
  }
  for (int m = 2; m <= 5 && ok; ++m)
    if (mean_cost[m] > mean_cost[m - 1] * (1 + 1e-12)) {
      ok = false;
      detail = "means increase at m=" + std::to_string(m);
    }
  for (int m = 1; m <= 5 && ok; ++m)
    if (binding_expected[m] < 20) {  // 80% of 25
      ok = false;
      detail = "binding bound expectation missed at m=" + std::to_string(m) + " (" +
               std::to_string(binding_expected[m]) + "/25)";
    }
  if (ok && worst_runtime >= 5.0) {
    ok = false;
    detail = "approx runtime " + fmt(worst_runtime) + " s exceeds 5 s";
  }
  if (ok) {
    detail = "means";
    for (int m = 1; m <= 5; ++m) detail += " " + fmt(mean_cost[m]);
    detail += "; per-instance monotone " + std::to_string(per_instance_monotone) + "/25";
  }
  report(8, "operator sweep", ok, detail, seconds_since(start));
}

// 9: solutions embed into the MILP, and the hand model is tight.
void criterion_milp() {
  const auto start = Clock::now();
  Rng rng(1009);
  bool ok = true;
  std::string detail;
  int checked = 0;
  for (int round = 0; round < 20 && ok; ++round) {
    const int n = 1 + static_cast<int>(rng.next_u64() % 9);
    const int k = 1 + static_cast<int>(rng.next_u64() % 4);
    const int m = 1 + static_cast<int>(rng.next_u64() % 4);
    const Instance inst = test::random_instance(rng, n, k, m);
    const ApproxSolution solution = approx(inst);
    const MilpModel model = build_milp(inst);
    const MilpAssignment assignment = map_solution(inst, solution.best().timeline);
    const auto violations = verify_assignment(model, assignment);
    if (!violations.empty()) {
      ok = false;
      detail = "mapped solution infeasible: " + violations.front();
      break;
    }
    ++checked;
  }
  if (ok) {
    // c(d,t) = 5, p = 2: optimum 12 both for the oracle and the hand chain
    const Instance one = test::euclidean_instance("one", 1, 1, {0, 0}, {{{5, 0}, 2.0}});
    const MilpModel model = build_milp(one);
    MilpAssignment hand{{"x_0_1", 1.0}, {"x_1_0", 1.0}, {"y_0_1", 1.0}, {"y_1_0", 1.0},
                        {"vet_1", 5.0}, {"tst_1", 5.0}, {"vlt_1", 7.0}, {"MT", 12.0}};
    if (!verify_assignment(model, hand).empty()) {
      ok = false;
      detail = "hand-built single-target assignment rejected";
    } else {
      hand["MT"] = 12.0 - 1e-3;
      if (verify_assignment(model, hand).empty()) {
        ok = false;
        detail = "single-target model accepts a makespan below 2c+p";
      } else if (exact_solve(one).opt_cost != 12.0) {
        ok = false;
        detail = "oracle disagrees with the hand model";
      }
    }
  }
  if (ok) detail = std::to_string(checked) + "/20 mapped solutions feasible; 1-target model tight";
  report(9, "milp round-trip", ok, detail, seconds_since(start));
}

// 10: the oracle is consistent with the bounds, the heuristic, and itself.
void criterion_oracle_consistency() {
  const auto start = Clock::now();
  Rng rng(1010);
  bool ok = true;
  std::string detail;
  int checked = 0;
  for (int round = 0; round < 40 && ok; ++round) {
    const int n = 1 + static_cast<int>(rng.next_u64() % 6);
    const int k = 1 + static_cast<int>(rng.next_u64() % 3);
    const int m = 1 + static_cast<int>(rng.next_u64() % 3);
    const Instance inst = test::random_instance(rng, n, k, m);
    const ExactResult exact = exact_solve(inst);
    const BoundsReport bounds = lower_bounds(inst);
    const ApproxSolution solution = approx(inst);
    if (bounds.l_max > exact.opt_cost * (1 + 1e-9)) {
      ok = false;
      detail = "l_max exceeds the optimum";
      break;
    }
    if (exact.opt_cost > solution.cost() * (1 + 1e-9)) {
      ok = false;
      detail = "optimum exceeds the heuristic cost";
      break;
    }
    ++checked;
  }
  int pairs = 0;
  for (int round = 0; round < 50 && ok; ++round) {
    const int n = 1 + static_cast<int>(rng.next_u64() % 5);
    const int k = 1 + static_cast<int>(rng.next_u64() % 3);
    const int m2 = 1 + static_cast<int>(rng.next_u64() % 3);
    const int m1 = m2 + static_cast<int>(rng.next_u64() % 3);
    const Instance inst = test::random_instance(rng, n, k, std::max(m1, m2));
    if (!monotonicity_check(inst, m1, m2)) {
      ok = false;
      detail = "monotonicity violated for m1=" + std::to_string(m1) + " m2=" + std::to_string(m2);
      break;
    }
    ++pairs;
  }
  if (ok)
    detail = std::to_string(checked) + "/40 runs bracketed; " + std::to_string(pairs) +
             "/50 monotone pairs";
  report(10, "oracle self-consistency", ok, detail, seconds_since(start));
}

}  // namespace

int main() {
  const auto start = Clock::now();
  criterion_feasibility();
  criterion_ratio();
  criterion_wait_bound();
  criterion_split();
  criterion_christofides();
  criterion_identity();
  criterion_small_benchmark();
  criterion_operator_sweep();
  criterion_milp();
  criterion_oracle_consistency();
  std::printf("%s: %d/10 criteria passed (%.1f s total)\n", failures == 0 ? "PASS" : "FAIL",
              10 - failures, seconds_since(start));
  return failures == 0 ? 0 : 1;
}

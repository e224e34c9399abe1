#include "tassp/approx.hpp"

#include <chrono>
#include <stdexcept>

#include "tassp/tsp.hpp"

namespace tassp {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

AlgorithmResult run_pipeline(const Instance& instance, const Metric& tour_metric,
                             const Metric& split_metric, MatchingMode mode) {
  const auto start = Clock::now();
  AlgorithmResult result;
  if (instance.num_targets() == 0) {
    result.routes.routes.assign(static_cast<std::size_t>(instance.k()), {});
  } else {
    const Tour tour = christofides(tour_metric, mode);
    result.routes = splitour(tour, instance.k(), split_metric);
  }
  result.timeline = greedy_schedule(instance, result.routes);
  result.cost = result.timeline.makespan;
  result.runtime_seconds = seconds_since(start);
  return result;
}

}  // namespace

AlgorithmResult algorithm1(const Instance& instance, const ApproxOptions& options) {
  return run_pipeline(instance, instance.metric(), instance.metric(), options.matching);
}

AlgorithmResult algorithm2(const Instance& instance, const ApproxOptions& options) {
  const Metric modified = instance.modified();
  const Metric& split_metric = options.split_with_modified_costs ? modified : instance.metric();
  return run_pipeline(instance, modified, split_metric, options.matching);
}

ApproxSolution approx(const Instance& instance, const ApproxOptions& options) {
  ApproxSolution solution;
  solution.s1 = algorithm1(instance, options);
  solution.s2 = algorithm2(instance, options);
  solution.chosen = solution.s2.cost < solution.s1.cost ? 2 : 1;
  if (options.matching == MatchingMode::GreedyUnsafe)
    solution.flags.push_back("greedy-unsafe-matching");

  for (const AlgorithmResult* result : {&solution.s1, &solution.s2}) {
    auto report = validate_solution(instance, result->timeline);
    if (!report.ok())
      throw std::logic_error("approx: produced an infeasible timeline: " +
                             report.violations.front());
  }
  return solution;
}

Ratio theorem_ratio(int k, int m) {
  if (k < 2)
    throw std::invalid_argument(
        "theorem_ratio: k must be at least 2 (k = 1 reduces to the single TSP)");
  if (m < 1) throw std::invalid_argument("theorem_ratio: m must be at least 1");
  const long long kk = k;
  if (m == 1) return {7 * kk - 5, 2 * kk};
  if (m >= k) return {5 * kk - 2, 2 * kk};
  return {7 * kk - 2, 2 * kk};
}

}  // namespace tassp

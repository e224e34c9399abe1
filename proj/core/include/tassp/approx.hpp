#ifndef TASSP_APPROX_HPP_
#define TASSP_APPROX_HPP_

#include <string>
#include <vector>

#include "tassp/instance.hpp"
#include "tassp/matching.hpp"
#include "tassp/schedule.hpp"
#include "tassp/split.hpp"

namespace tassp {

struct ApproxOptions {
  MatchingMode matching = MatchingMode::Exact;
  // Split thresholds for the modified-metric tour: true = modified costs
  // (default; makes the m >= k mission-time identity exact), false = base
  // costs. Both produce feasible solutions.
  bool split_with_modified_costs = true;
};

struct AlgorithmResult {
  RouteSet routes;
  Timeline timeline;
  double cost = 0.0;  // makespan of the timeline
  double runtime_seconds = 0.0;
};

// Tour on the base metric, ignoring processing while routing, then greedy
// scheduling.
AlgorithmResult algorithm1(const Instance& instance, const ApproxOptions& options = {});

// Tour on the modified metric (legs absorb half the processing time at each
// endpoint), split there, then greedy scheduling under the true metric and
// processing times. With m >= k every robot's mission time equals its
// route's modified-metric travel cost and nobody waits.
AlgorithmResult algorithm2(const Instance& instance, const ApproxOptions& options = {});

struct ApproxSolution {
  AlgorithmResult s1;
  AlgorithmResult s2;
  int chosen = 1;  // 1 or 2
  std::vector<std::string> flags;

  const AlgorithmResult& best() const { return chosen == 1 ? s1 : s2; }
  double cost() const { return best().cost; }
  double runtime_seconds() const { return s1.runtime_seconds + s2.runtime_seconds; }
};

// Runs both algorithms and keeps the cheaper solution (ties go to S1). Both
// timelines are re-validated on the way out.
ApproxSolution approx(const Instance& instance, const ApproxOptions& options = {});

// Exact rational, kept over the common denominator 2k.
struct Ratio {
  long long num = 0;
  long long den = 1;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

// Worst-case ratio of approx() relative to the optimum:
//   m = 1:          7/2 - 5/(2k)
//   m >= k >= 2:    5/2 - 1/k
//   k > m >= 2:     7/2 - 1/k
// k = 1 is rejected (the problem reduces to the single TSP there and the
// ratio is not defined); m must be at least 1.
Ratio theorem_ratio(int k, int m);

}  // namespace tassp

#endif  // TASSP_APPROX_HPP_

#ifndef TASSP_ORACLE_HPP_
#define TASSP_ORACLE_HPP_

#include <cstdint>

#include "tassp/instance.hpp"
#include "tassp/schedule.hpp"
#include "tassp/split.hpp"

namespace tassp {

// Search budget for exact_solve. The size caps are hard preconditions
// (exceeding them throws); the node and time budgets merely stop the search,
// leaving proven = false on the incumbent.
struct OracleLimits {
  int max_targets = 9;
  int max_robots = 4;
  std::uint64_t max_nodes = 200'000'000;
  double max_seconds = 120.0;
};

struct ExactResult {
  double opt_cost = 0.0;
  RouteSet routes;
  Timeline timeline;
  std::uint64_t nodes_explored = 0;
  bool proven = false;
};

// Exhaustive exact solver. Route sets are enumerated once each (identical
// robots are deduplicated by forcing the first targets of nonempty routes to
// increase, empty routes trailing); for each route set the optimal schedule
// is found by depth-first search over dispatch decisions, branching on which
// waiting robot a freed operator serves and on deliberately holding free
// operators until the next arrival. Non-delay schedules are not assumed
// optimal; only provably useless choices (delaying departures) are skipped.
// Prunes against the best makespan found so far. Deterministic.
ExactResult exact_solve(const Instance& instance, const OracleLimits& limits = {});

// True when the optimal makespan with m1 operators is at most the optimal
// makespan with m2 operators (m1 >= m2 required). Runs exact_solve twice.
bool monotonicity_check(const Instance& instance, int m1, int m2,
                        const OracleLimits& limits = {});

}  // namespace tassp

#endif  // TASSP_ORACLE_HPP_

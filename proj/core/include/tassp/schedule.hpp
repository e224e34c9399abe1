#ifndef TASSP_SCHEDULE_HPP_
#define TASSP_SCHEDULE_HPP_

#include <vector>

#include "tassp/instance.hpp"
#include "tassp/split.hpp"

namespace tassp {

enum class Phase { Travel, Wait, Process };

// One contiguous piece of a robot's day. Travel carries the endpoints as
// vertex ids; Wait and Process carry the target the robot is parked at.
struct Interval {
  Phase phase = Phase::Travel;
  double start = 0.0;
  double end = 0.0;
  int from = -1;
  int to = -1;
  int target = -1;
};

// Full schedule of a RouteSet: per-robot interval chains starting at time 0,
// per-target task start times (indexed target vertex - 1), per-robot mission
// times (depot-return instant, 0 for an empty route) and their maximum.
struct Timeline {
  RouteSet routes;
  std::vector<std::vector<Interval>> robot_intervals;
  std::vector<double> task_start;
  std::vector<double> mission_time;
  double makespan = 0.0;
};

// Event simulation of the greedy policy: every robot departs at time 0 and
// follows its route; an arriving robot starts processing immediately when one
// of the m operators is idle and otherwise queues. The queue is served in
// (arrival time, robot index, target id) order, and at equal timestamps
// operator releases are handled before arrivals so a just-freed operator can
// take a just-arrived task without artificial wait. Processing is never
// preempted. Throws std::invalid_argument when routes do not partition the
// target set.
Timeline greedy_schedule(const Instance& instance, const RouteSet& routes);

// Rebuilds a Timeline from per-target task start times (indexed target
// vertex - 1): each robot travels its route, waits at each target until the
// given start, processes, and returns. No feasibility checking beyond the
// partition; run validate_solution on the result.
Timeline timeline_from_starts(const Instance& instance, const RouteSet& routes,
                              const std::vector<double>& task_start);

// Universal feasibility gate. Checks the route partition, per-robot interval
// chains (contiguous from 0, correct travel legs and lengths, exact
// processing durations, consistent route order), single processing per
// target, task_start consistency, at most m concurrent process intervals at
// any instant, and mission time / makespan accounting.
ValidationReport validate_solution(const Instance& instance, const Timeline& timeline,
                                   double tol = 1e-9);

// Per-robot travel/wait/process totals; travel + wait + process = Cost_r.
struct RobotCosts {
  double travel = 0.0;
  double wait = 0.0;
  double process = 0.0;
};

struct CostBreakdown {
  std::vector<RobotCosts> robots;
  double makespan = 0.0;
};

// Totals per robot, with two inequalities every greedy timeline satisfies
// enforced on the way out (std::logic_error when violated):
//   m * wait_r <= sum of p_i over targets NOT on route r
//   Cost_r <= travel_r + (1 - 1/m) * (p over route r) + (total p) / m
CostBreakdown cost_breakdown(const Instance& instance, const Timeline& timeline);

}  // namespace tassp

#endif  // TASSP_SCHEDULE_HPP_

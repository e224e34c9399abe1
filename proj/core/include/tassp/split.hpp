#ifndef TASSP_SPLIT_HPP_
#define TASSP_SPLIT_HPP_

#include <string>
#include <vector>

#include "tassp/metric.hpp"
#include "tassp/tsp.hpp"

namespace tassp {

// One depot-rooted route per robot, holding target vertex ids in visit
// order. Empty routes are legal: the robot never leaves the depot. Together
// the routes partition the target set; travel costs are recomputed from
// whichever metric the caller is working under.
struct RouteSet {
  std::vector<std::vector<int>> routes;
};

// Violations of the partition invariant against targets 1..num_targets;
// empty result means the routes are a partition.
std::vector<std::string> check_partition(const RouteSet& routes, int num_targets);

// c(d,u_1) + sum of consecutive legs + c(u_last,d); 0 for an empty route.
double route_travel_cost(const Metric& metric, const std::vector<int>& route);

std::vector<double> route_travel_costs(const Metric& metric, const RouteSet& routes);

double max_route_travel_cost(const Metric& metric, const RouteSet& routes);

// k-SPLITOUR: cut one tour into k depot-rooted routes of roughly equal
// travel. With L the tour cost, c_max the largest depot distance among
// visited targets and d_i the along-tour distance from the depot to the i-th
// target, cut j ends at the largest index whose d value is at most
// (j/k)(L - 2 c_max) + c_max, indices forced non-decreasing left to right;
// the last route takes the remainder. The result satisfies
//   max_j route_travel_cost(route_j) <= L/k + (1 - 1/k) 2 c_max.
// The tour must visit every target of the metric exactly once; k >= 1.
RouteSet splitour(const Tour& tour, int k, const Metric& metric);

}  // namespace tassp

#endif  // TASSP_SPLIT_HPP_

#include "tassp/split.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace tassp {

std::vector<std::string> check_partition(const RouteSet& routes, int num_targets) {
  std::vector<std::string> violations;
  std::vector<int> count(static_cast<std::size_t>(num_targets) + 1, 0);
  for (const auto& route : routes.routes)
    for (int t : route) {
      if (t < 1 || t > num_targets) {
        violations.push_back("unknown target vertex " + std::to_string(t));
        continue;
      }
      ++count[static_cast<std::size_t>(t)];
    }
  for (int t = 1; t <= num_targets; ++t) {
    if (count[static_cast<std::size_t>(t)] == 0)
      violations.push_back("target vertex " + std::to_string(t) + " not covered");
    else if (count[static_cast<std::size_t>(t)] > 1)
      violations.push_back("target vertex " + std::to_string(t) + " visited " +
                           std::to_string(count[static_cast<std::size_t>(t)]) + " times");
  }
  return violations;
}

double route_travel_cost(const Metric& metric, const std::vector<int>& route) {
  return tour_cost(metric, route);
}

std::vector<double> route_travel_costs(const Metric& metric, const RouteSet& routes) {
  std::vector<double> costs;
  costs.reserve(routes.routes.size());
  for (const auto& route : routes.routes) costs.push_back(route_travel_cost(metric, route));
  return costs;
}

double max_route_travel_cost(const Metric& metric, const RouteSet& routes) {
  double max_cost = 0.0;
  for (const auto& route : routes.routes)
    max_cost = std::max(max_cost, route_travel_cost(metric, route));
  return max_cost;
}

RouteSet splitour(const Tour& tour, int k, const Metric& metric) {
  if (k < 1) throw std::invalid_argument("splitour: k must be at least 1");
  const int n = metric.size() - 1;
  {
    RouteSet as_route_set{{tour.order}};
    auto violations = check_partition(as_route_set, n);
    if (!violations.empty())
      throw std::invalid_argument("splitour: tour does not cover the target set: " +
                                  violations.front());
  }

  RouteSet result;
  result.routes.assign(static_cast<std::size_t>(k), {});
  if (n == 0) return result;

  const double L = tour_cost(metric, tour.order);
  double c_max = 0.0;
  for (int t : tour.order) c_max = std::max(c_max, metric.cost(0, t));

  // d[i]: distance along the tour from the depot to the (i+1)-th target.
  std::vector<double> d(tour.order.size());
  d[0] = metric.cost(0, tour.order[0]);
  for (std::size_t i = 1; i < tour.order.size(); ++i)
    d[i] = d[i - 1] + metric.cost(tour.order[i - 1], tour.order[i]);

  std::vector<int> cut(static_cast<std::size_t>(k), n);  // cut[j-1] = p(j), p(k) = n
  int prev = 0;
  for (int j = 1; j < k; ++j) {
    const double threshold = (static_cast<double>(j) / k) * (L - 2.0 * c_max) + c_max;
    int p = 0;
    for (int i = n; i >= 1; --i)
      if (d[static_cast<std::size_t>(i) - 1] <= threshold) {
        p = i;
        break;
      }
    p = std::max(p, prev);
    cut[static_cast<std::size_t>(j) - 1] = p;
    prev = p;
  }

  prev = 0;
  for (int j = 0; j < k; ++j) {
    for (int i = prev; i < cut[static_cast<std::size_t>(j)]; ++i)
      result.routes[static_cast<std::size_t>(j)].push_back(tour.order[static_cast<std::size_t>(i)]);
    prev = cut[static_cast<std::size_t>(j)];
  }
  return result;
}

}  // namespace tassp

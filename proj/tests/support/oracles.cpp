#include "support/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace tassp::test {
namespace {

double closed_cost(const Metric& metric, const std::vector<int>& order) {
  if (order.empty()) return 0.0;
  double cost = metric.cost(0, order.front());
  for (std::size_t i = 0; i + 1 < order.size(); ++i)
    cost += metric.cost(order[i], order[i + 1]);
  return cost + metric.cost(order.back(), 0);
}

// Optimal closed tour over an arbitrary vertex subset, by permutations.
double best_subset_tour(const Metric& metric, std::vector<int> vertices) {
  std::sort(vertices.begin(), vertices.end());
  double best = std::numeric_limits<double>::infinity();
  do {
    best = std::min(best, closed_cost(metric, vertices));
  } while (std::next_permutation(vertices.begin(), vertices.end()));
  return vertices.empty() ? 0.0 : best;
}

}  // namespace

double brute_force_tsp(const Metric& metric) {
  const int n = metric.size() - 1;
  if (n < 1) throw std::invalid_argument("brute_force_tsp: no targets");
  std::vector<int> order;
  for (int i = 1; i <= n; ++i) order.push_back(i);
  return best_subset_tour(metric, order);
}

double brute_force_matching_weight(const std::vector<std::vector<double>>& weights) {
  const int n = static_cast<int>(weights.size());
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  double best = std::numeric_limits<double>::infinity();
  const auto recurse = [&](const auto& self, int matched, double sum) -> void {
    if (matched == n) {
      best = std::min(best, sum);
      return;
    }
    int first = 0;
    while (used[static_cast<std::size_t>(first)]) ++first;
    used[static_cast<std::size_t>(first)] = true;
    for (int j = first + 1; j < n; ++j) {
      if (used[static_cast<std::size_t>(j)]) continue;
      used[static_cast<std::size_t>(j)] = true;
      self(self, matched + 2, sum + weights[static_cast<std::size_t>(first)][static_cast<std::size_t>(j)]);
      used[static_cast<std::size_t>(j)] = false;
    }
    used[static_cast<std::size_t>(first)] = false;
  };
  recurse(recurse, 0, 0.0);
  return best;
}

double brute_force_minmax_routes(const Metric& metric, int k) {
  const int n = metric.size() - 1;
  std::vector<double> subset_cost(static_cast<std::size_t>(1) << n,
                                  std::numeric_limits<double>::quiet_NaN());
  const auto tour_of = [&](unsigned mask) {
    double& slot = subset_cost[mask];
    if (std::isnan(slot)) {
      std::vector<int> vertices;
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) vertices.push_back(i + 1);
      slot = best_subset_tour(metric, vertices);
    }
    return slot;
  };

  double best = std::numeric_limits<double>::infinity();
  std::vector<unsigned> masks(static_cast<std::size_t>(k), 0u);
  // Parts are unlabeled: a target may open route r only when r-1 is in use.
  const auto assign = [&](const auto& self, int target) -> void {
    if (target == n) {
      double worst = 0.0;
      for (unsigned mask : masks) worst = std::max(worst, tour_of(mask));
      best = std::min(best, worst);
      return;
    }
    for (int r = 0; r < k; ++r) {
      if (r > 0 && masks[static_cast<std::size_t>(r) - 1] == 0u) break;
      masks[static_cast<std::size_t>(r)] |= 1u << target;
      self(self, target + 1);
      masks[static_cast<std::size_t>(r)] &= ~(1u << target);
    }
  };
  assign(assign, 0);
  return best;
}

}  // namespace tassp::test

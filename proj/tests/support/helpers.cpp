#include "support/helpers.hpp"

#include <utility>

namespace tassp::test {

Instance euclidean_instance(std::string name, int k, int m, Point depot,
                            const std::vector<std::pair<Point, double>>& targets) {
  std::vector<Point> positions{depot};
  std::vector<Target> list;
  int index = 1;
  for (const auto& [pos, p] : targets) {
    positions.push_back(pos);
    list.push_back(Target{"t" + std::to_string(index++), pos, p});
  }
  return Instance(std::move(name), k, m, depot, std::move(list), Metric::euclidean(positions));
}

Instance matrix_instance(std::string name, int k, int m,
                         std::vector<std::vector<double>> matrix,
                         const std::vector<double>& processing) {
  std::vector<Target> list;
  for (std::size_t i = 0; i < processing.size(); ++i)
    list.push_back(Target{"t" + std::to_string(i + 1), std::nullopt, processing[i]});
  return Instance(std::move(name), k, m, std::nullopt, std::move(list),
                  Metric::explicit_matrix(matrix));
}

Instance random_instance(Rng& rng, int n, int k, int m, double area, double p_max) {
  const Point depot{rng.uniform(0.0, area), rng.uniform(0.0, area)};
  std::vector<std::pair<Point, double>> targets;
  for (int i = 0; i < n; ++i)
    targets.push_back({{rng.uniform(0.0, area), rng.uniform(0.0, area)}, rng.uniform(0.0, p_max)});
  return euclidean_instance("test", k, m, depot, targets);
}

RouteSet random_routes(Rng& rng, int n, int k) {
  RouteSet routes;
  routes.routes.assign(static_cast<std::size_t>(k), {});
  for (int target : random_order(rng, n))
    routes.routes[rng.next_u64() % static_cast<std::uint64_t>(k)].push_back(target);
  return routes;
}

std::vector<int> random_order(Rng& rng, int n) {
  std::vector<int> order;
  for (int i = 1; i <= n; ++i) order.push_back(i);
  for (int i = n - 1; i > 0; --i) {
    const int j = static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(i + 1));
    std::swap(order[i], order[j]);
  }
  return order;
}

}  // namespace tassp::test

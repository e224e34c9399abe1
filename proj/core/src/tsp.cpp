#include "tassp/tsp.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace tassp {
namespace {

struct MstResult {
  std::vector<std::pair<int, int>> edges;
  double cost = 0.0;
};

MstResult prim_mst(const Metric& metric) {
  const int n = metric.size();
  MstResult result;
  std::vector<bool> in_tree(n, false);
  std::vector<double> key(n, std::numeric_limits<double>::infinity());
  std::vector<int> parent(n, -1);
  key[0] = 0.0;
  for (int step = 0; step < n; ++step) {
    int u = -1;
    for (int v = 0; v < n; ++v)
      if (!in_tree[v] && (u == -1 || key[v] < key[u])) u = v;
    in_tree[u] = true;
    if (parent[u] != -1) {
      result.edges.emplace_back(parent[u], u);
      result.cost += key[u];
    }
    for (int v = 0; v < n; ++v)
      if (!in_tree[v] && metric.cost(u, v) < key[v]) {
        key[v] = metric.cost(u, v);
        parent[v] = u;
      }
  }
  return result;
}

// Eulerian circuit from vertex 0 of a connected multigraph with all degrees
// even; neighbors explored in ascending order.
std::vector<int> euler_circuit(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<std::pair<int, int>>> adj(n);  // (neighbor, edge id)
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    adj[edges[e].first].emplace_back(edges[e].second, e);
    adj[edges[e].second].emplace_back(edges[e].first, e);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  std::vector<std::size_t> next(n, 0);
  std::vector<bool> used(edges.size(), false);
  std::vector<int> stack{0};
  std::vector<int> circuit;
  while (!stack.empty()) {
    int u = stack.back();
    while (next[u] < adj[u].size() && used[adj[u][next[u]].second]) ++next[u];
    if (next[u] == adj[u].size()) {
      circuit.push_back(u);
      stack.pop_back();
    } else {
      auto [v, e] = adj[u][next[u]];
      used[e] = true;
      stack.push_back(v);
    }
  }
  std::reverse(circuit.begin(), circuit.end());
  return circuit;
}

}  // namespace

double tour_cost(const Metric& metric, const std::vector<int>& order) {
  if (order.empty()) return 0.0;
  double cost = metric.cost(0, order.front());
  for (std::size_t i = 0; i + 1 < order.size(); ++i) cost += metric.cost(order[i], order[i + 1]);
  cost += metric.cost(order.back(), 0);
  return cost;
}

Tour christofides(const Metric& metric, MatchingMode mode, ChristofidesStats* stats) {
  const int n = metric.size();
  if (n < 2) throw std::invalid_argument("christofides: need at least one target");

  MstResult mst = prim_mst(metric);

  std::vector<int> degree(n, 0);
  for (const auto& [u, v] : mst.edges) {
    ++degree[u];
    ++degree[v];
  }
  std::vector<int> odd;
  for (int v = 0; v < n; ++v)
    if (degree[v] % 2 != 0) odd.push_back(v);

  std::vector<std::vector<double>> weights(odd.size(), std::vector<double>(odd.size(), 0.0));
  for (std::size_t a = 0; a < odd.size(); ++a)
    for (std::size_t b = 0; b < odd.size(); ++b) weights[a][b] = metric.cost(odd[a], odd[b]);
  const auto matching =
      mode == MatchingMode::Exact ? exact_matching(weights) : greedy_matching(weights);

  auto multigraph = mst.edges;
  double matching_cost = 0.0;
  for (const auto& [a, b] : matching) {
    multigraph.emplace_back(odd[a], odd[b]);
    matching_cost += weights[a][b];
  }

  const auto circuit = euler_circuit(n, multigraph);

  std::vector<bool> seen(n, false);
  seen[0] = true;
  Tour tour;
  for (int v : circuit)
    if (!seen[v]) {
      seen[v] = true;
      tour.order.push_back(v);
    }
  tour.cost = tour_cost(metric, tour.order);

  if (stats) {
    stats->mst_cost = mst.cost;
    stats->matching_weight = matching_cost;
    stats->euler_cost = mst.cost + matching_cost;
    stats->odd_count = static_cast<int>(odd.size());
  }
  return tour;
}

Tour held_karp(const Metric& metric, int cap) {
  const int n = metric.size() - 1;
  if (n > cap) throw std::invalid_argument("held_karp: instance above cap");
  Tour tour;
  if (n == 0) return tour;

  const std::uint32_t full = (1u << n) - 1;
  constexpr double inf = std::numeric_limits<double>::infinity();
  // dp[s][i]: cheapest depot-rooted path covering target set s, ending at
  // target i+1. Targets iterate in ascending id so ties resolve the same way
  // every run.
  std::vector<std::vector<double>> dp(full + 1, std::vector<double>(n, inf));
  std::vector<std::vector<std::int8_t>> parent(full + 1, std::vector<std::int8_t>(n, -1));
  for (int i = 0; i < n; ++i) dp[1u << i][i] = metric.cost(0, i + 1);
  for (std::uint32_t s = 1; s <= full; ++s) {
    for (int j = 0; j < n; ++j) {
      if (!(s & (1u << j)) || dp[s][j] == inf) continue;
      for (int t = 0; t < n; ++t) {
        if (s & (1u << t)) continue;
        const std::uint32_t ns = s | (1u << t);
        const double cand = dp[s][j] + metric.cost(j + 1, t + 1);
        if (cand < dp[ns][t]) {
          dp[ns][t] = cand;
          parent[ns][t] = static_cast<std::int8_t>(j);
        }
      }
    }
  }
  double best = inf;
  int last = -1;
  for (int i = 0; i < n; ++i) {
    const double cand = dp[full][i] + metric.cost(i + 1, 0);
    if (cand < best) {
      best = cand;
      last = i;
    }
  }
  std::uint32_t s = full;
  while (last != -1) {
    tour.order.push_back(last + 1);
    const int prev = parent[s][last];
    s ^= 1u << last;
    last = prev;
  }
  std::reverse(tour.order.begin(), tour.order.end());
  tour.cost = best;
  return tour;
}

TspBound tsp_lower_bound(const Metric& metric, int cap) {
  const int n = metric.size() - 1;
  if (n <= cap) return {held_karp(metric, cap).cost, TspBoundKind::Exact};
  return {christofides(metric).cost / 1.5, TspBoundKind::ChristofidesDerived};
}

}  // namespace tassp

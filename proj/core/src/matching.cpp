#include "tassp/matching.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <deque>
#include <limits>
#include <stdexcept>
#include <tuple>

namespace tassp {
namespace {

constexpr int kSubsetDpLimit = 22;

void check_table(const std::vector<std::vector<double>>& weights) {
  const std::size_t n = weights.size();
  if (n % 2 != 0) throw std::invalid_argument("exact_matching: odd-cardinality vertex set");
  for (const auto& row : weights)
    if (row.size() != n) throw std::invalid_argument("exact_matching: weight table is not square");
}

std::vector<std::pair<int, int>> subset_dp_matching(const std::vector<std::vector<double>>& w) {
  const int n = static_cast<int>(w.size());
  const std::uint32_t full = (1u << n) - 1;
  constexpr double inf = std::numeric_limits<double>::infinity();
  std::vector<double> dp(full + 1, inf);
  std::vector<std::uint8_t> choice(full + 1, 0);
  dp[0] = 0.0;
  for (std::uint32_t s = 1; s <= full; ++s) {
    if (std::popcount(s) % 2 != 0) continue;
    const int i = std::countr_zero(s);
    const std::uint32_t rest = s & (s - 1);
    for (std::uint32_t t = rest; t != 0; t &= t - 1) {
      const int j = std::countr_zero(t);
      const double cand = dp[s ^ (1u << i) ^ (1u << j)] + w[i][j];
      if (cand < dp[s]) {
        dp[s] = cand;
        choice[s] = static_cast<std::uint8_t>(j);
      }
    }
  }
  std::vector<std::pair<int, int>> matching;
  for (std::uint32_t s = full; s != 0;) {
    const int i = std::countr_zero(s);
    const int j = choice[s];
    matching.emplace_back(i, j);
    s ^= (1u << i) | (1u << static_cast<std::uint32_t>(j));
  }
  std::sort(matching.begin(), matching.end());
  return matching;
}

// Maximum weighted matching in a general graph, O(n^3) blossom with integer
// weights and integral duals (all weights doubled internally). 1-based
// vertices; w = 0 means no edge.
class Blossom {
 public:
  explicit Blossom(int n)
      : n_(n),
        n_x_(n),
        g_(2 * n + 1, std::vector<Edge>(2 * n + 1)),
        lab_(2 * n + 1, 0),
        match_(2 * n + 1, 0),
        slack_(2 * n + 1, 0),
        st_(2 * n + 1, 0),
        pa_(2 * n + 1, 0),
        s_(2 * n + 1, -1),
        vis_(2 * n + 1, 0),
        flower_(2 * n + 1),
        flower_from_(2 * n + 1, std::vector<int>(n + 1, 0)) {
    for (int u = 1; u <= n_; ++u)
      for (int v = 1; v <= n_; ++v) g_[u][v] = Edge{u, v, 0};
  }

  void set_weight(int u, int v, std::int64_t w) { g_[u][v].w = g_[v][u].w = w; }

  // Runs the algorithm; match(u) is 0 for unmatched vertices afterwards.
  void solve() {
    std::int64_t w_max = 0;
    for (int u = 1; u <= n_; ++u) {
      st_[u] = u;
      for (int v = 1; v <= n_; ++v) {
        flower_from_[u][v] = (u == v ? u : 0);
        w_max = std::max(w_max, g_[u][v].w);
      }
    }
    for (int u = 1; u <= n_; ++u) lab_[u] = w_max;
    while (matching_round()) {
    }
  }

  int match(int u) const { return match_[u]; }

 private:
  struct Edge {
    int u = 0, v = 0;
    std::int64_t w = 0;
  };

  // Reduced cost of an edge between top-level nodes; weights are doubled so
  // duals stay integral through blossom halving.
  std::int64_t e_delta(const Edge& e) const { return lab_[e.u] + lab_[e.v] - g_[e.u][e.v].w * 2; }

  void update_slack(int u, int x) {
    if (!slack_[x] || e_delta(g_[u][x]) < e_delta(g_[slack_[x]][x])) slack_[x] = u;
  }

  void set_slack(int x) {
    slack_[x] = 0;
    for (int u = 1; u <= n_; ++u)
      if (g_[u][x].w > 0 && st_[u] != x && s_[st_[u]] == 0) update_slack(u, x);
  }

  void q_push(int x) {
    if (x <= n_) {
      q_.push_back(x);
    } else {
      for (int sub : flower_[x]) q_push(sub);
    }
  }

  void set_st(int x, int b) {
    st_[x] = b;
    if (x > n_)
      for (int sub : flower_[x]) set_st(sub, b);
  }

  int get_pr(int b, int xr) {
    auto& f = flower_[b];
    int pr = static_cast<int>(std::find(f.begin(), f.end(), xr) - f.begin());
    if (pr % 2 == 1) {
      std::reverse(f.begin() + 1, f.end());
      return static_cast<int>(f.size()) - pr;
    }
    return pr;
  }

  void set_match(int u, int v) {
    match_[u] = g_[u][v].v;
    if (u > n_) {
      const Edge& e = g_[u][v];
      int xr = flower_from_[u][e.u];
      int pr = get_pr(u, xr);
      for (int i = 0; i < pr; ++i) set_match(flower_[u][i], flower_[u][i ^ 1]);
      set_match(xr, v);
      std::rotate(flower_[u].begin(), flower_[u].begin() + pr, flower_[u].end());
    }
  }

  void augment(int u, int v) {
    for (;;) {
      int xnv = st_[match_[u]];
      set_match(u, v);
      if (!xnv) return;
      set_match(xnv, st_[pa_[xnv]]);
      u = st_[pa_[xnv]];
      v = xnv;
    }
  }

  int get_lca(int u, int v) {
    for (++timestamp_; u || v; std::swap(u, v)) {
      if (u == 0) continue;
      if (vis_[u] == timestamp_) return u;
      vis_[u] = timestamp_;
      u = st_[match_[u]];
      if (u) u = st_[pa_[u]];
    }
    return 0;
  }

  void add_blossom(int u, int lca, int v) {
    int b = n_ + 1;
    while (b <= n_x_ && st_[b]) ++b;
    if (b > n_x_) ++n_x_;
    lab_[b] = 0;
    s_[b] = 0;
    match_[b] = match_[lca];
    flower_[b].clear();
    flower_[b].push_back(lca);
    for (int x = u, y; x != lca; x = st_[pa_[y]]) {
      flower_[b].push_back(x);
      flower_[b].push_back(y = st_[match_[x]]);
      q_push(y);
    }
    std::reverse(flower_[b].begin() + 1, flower_[b].end());
    for (int x = v, y; x != lca; x = st_[pa_[y]]) {
      flower_[b].push_back(x);
      flower_[b].push_back(y = st_[match_[x]]);
      q_push(y);
    }
    set_st(b, b);
    for (int x = 1; x <= n_x_; ++x) g_[b][x].w = g_[x][b].w = 0;
    for (int x = 1; x <= n_; ++x) flower_from_[b][x] = 0;
    for (int xs : flower_[b]) {
      for (int x = 1; x <= n_x_; ++x)
        if (g_[b][x].w == 0 || e_delta(g_[xs][x]) < e_delta(g_[b][x])) {
          g_[b][x] = g_[xs][x];
          g_[x][b] = g_[x][xs];
        }
      for (int x = 1; x <= n_; ++x)
        if (flower_from_[xs][x]) flower_from_[b][x] = xs;
    }
    set_slack(b);
  }

  void expand_blossom(int b) {
    for (int sub : flower_[b]) set_st(sub, sub);
    int xr = flower_from_[b][g_[b][pa_[b]].u];
    int pr = get_pr(b, xr);
    for (int i = 0; i < pr; i += 2) {
      int xs = flower_[b][i];
      int xns = flower_[b][i + 1];
      pa_[xs] = g_[xns][xs].u;
      s_[xs] = 1;
      s_[xns] = 0;
      slack_[xs] = 0;
      set_slack(xns);
      q_push(xns);
    }
    s_[xr] = 1;
    pa_[xr] = pa_[b];
    for (std::size_t i = static_cast<std::size_t>(pr) + 1; i < flower_[b].size(); ++i) {
      int xs = flower_[b][i];
      s_[xs] = -1;
      set_slack(xs);
    }
    st_[b] = 0;
  }

  bool on_found_edge(const Edge& e) {
    int u = st_[e.u];
    int v = st_[e.v];
    if (s_[v] == -1) {
      pa_[v] = e.u;
      s_[v] = 1;
      int nu = st_[match_[v]];
      slack_[v] = slack_[nu] = 0;
      s_[nu] = 0;
      q_push(nu);
    } else if (s_[v] == 0) {
      int lca = get_lca(u, v);
      if (!lca) {
        augment(u, v);
        augment(v, u);
        return true;
      }
      add_blossom(u, lca, v);
    }
    return false;
  }

  bool matching_round() {
    std::fill(s_.begin(), s_.begin() + n_x_ + 1, -1);
    std::fill(slack_.begin(), slack_.begin() + n_x_ + 1, 0);
    q_.clear();
    for (int x = 1; x <= n_x_; ++x)
      if (st_[x] == x && !match_[x]) {
        pa_[x] = 0;
        s_[x] = 0;
        q_push(x);
      }
    if (q_.empty()) return false;
    for (;;) {
      while (!q_.empty()) {
        int u = q_.front();
        q_.pop_front();
        if (s_[st_[u]] == 1) continue;
        for (int v = 1; v <= n_; ++v)
          if (g_[u][v].w > 0 && st_[u] != st_[v]) {
            if (e_delta(g_[u][v]) == 0) {
              if (on_found_edge(g_[u][v])) return true;
            } else {
              update_slack(u, st_[v]);
            }
          }
      }
      std::int64_t d = std::numeric_limits<std::int64_t>::max();
      for (int b = n_ + 1; b <= n_x_; ++b)
        if (st_[b] == b && s_[b] == 1) d = std::min(d, lab_[b] / 2);
      for (int x = 1; x <= n_x_; ++x)
        if (st_[x] == x && slack_[x]) {
          if (s_[x] == -1)
            d = std::min(d, e_delta(g_[slack_[x]][x]));
          else if (s_[x] == 0)
            d = std::min(d, e_delta(g_[slack_[x]][x]) / 2);
        }
      for (int u = 1; u <= n_; ++u) {
        if (s_[st_[u]] == 0) {
          if (lab_[u] <= d) return false;
          lab_[u] -= d;
        } else if (s_[st_[u]] == 1) {
          lab_[u] += d;
        }
      }
      for (int b = n_ + 1; b <= n_x_; ++b)
        if (st_[b] == b) {
          if (s_[b] == 0)
            lab_[b] += d * 2;
          else if (s_[b] == 1)
            lab_[b] -= d * 2;
        }
      q_.clear();
      for (int x = 1; x <= n_x_; ++x)
        if (st_[x] == x && slack_[x] && st_[slack_[x]] != x && e_delta(g_[slack_[x]][x]) == 0)
          if (on_found_edge(g_[slack_[x]][x])) return true;
      for (int b = n_ + 1; b <= n_x_; ++b)
        if (st_[b] == b && s_[b] == 1 && lab_[b] == 0) expand_blossom(b);
    }
  }

  int n_;
  int n_x_;
  std::vector<std::vector<Edge>> g_;
  std::vector<std::int64_t> lab_;
  std::vector<int> match_, slack_, st_, pa_;
  std::vector<int> s_;
  std::vector<int> vis_;
  std::vector<std::vector<int>> flower_;
  std::vector<std::vector<int>> flower_from_;
  std::deque<int> q_;
  int timestamp_ = 0;
};

std::vector<std::pair<int, int>> blossom_matching(const std::vector<std::vector<double>>& w) {
  const int n = static_cast<int>(w.size());
  double w_max = 0.0;
  for (const auto& row : w)
    for (double x : row) {
      if (!std::isfinite(x)) throw std::invalid_argument("exact_matching: non-finite weight");
      w_max = std::max(w_max, std::abs(x));
    }
  // Power-of-two scale so quantization is exact binary truncation; keep the
  // largest scaled weight below 2^52 so duals and deltas stay in int64.
  double scale = std::exp2(40);
  while (w_max * scale >= std::exp2(52)) scale /= 2.0;
  const std::int64_t ceiling =
      static_cast<std::int64_t>(std::llround(w_max * scale)) + 1;

  // Minimize by maximizing ceiling - w; positive weights on a complete graph
  // force the maximum matching to be perfect.
  Blossom blossom(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const std::int64_t wij = static_cast<std::int64_t>(std::llround(w[i][j] * scale));
      blossom.set_weight(i + 1, j + 1, ceiling - wij + 1);
    }
  blossom.solve();

  std::vector<std::pair<int, int>> matching;
  for (int u = 1; u <= n; ++u) {
    const int v = blossom.match(u);
    if (v == 0) throw std::logic_error("exact_matching: blossom left a vertex unmatched");
    if (u < v) matching.emplace_back(u - 1, v - 1);
  }
  return matching;
}

}  // namespace

std::vector<std::pair<int, int>> exact_matching(const std::vector<std::vector<double>>& weights) {
  check_table(weights);
  if (weights.empty()) return {};
  if (weights.size() <= kSubsetDpLimit) return subset_dp_matching(weights);
  return blossom_matching(weights);
}

std::vector<std::pair<int, int>> greedy_matching(const std::vector<std::vector<double>>& weights) {
  check_table(weights);
  const int n = static_cast<int>(weights.size());
  struct Cand {
    double w;
    int i, j;
  };
  std::vector<Cand> cands;
  cands.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) cands.push_back({weights[i][j], i, j});
  std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
    return std::tie(a.w, a.i, a.j) < std::tie(b.w, b.i, b.j);
  });
  std::vector<bool> used(weights.size(), false);
  std::vector<std::pair<int, int>> matching;
  for (const auto& c : cands) {
    if (used[c.i] || used[c.j]) continue;
    used[c.i] = used[c.j] = true;
    matching.emplace_back(c.i, c.j);
  }
  std::sort(matching.begin(), matching.end());
  return matching;
}

double matching_weight(const std::vector<std::vector<double>>& weights,
                       const std::vector<std::pair<int, int>>& matching) {
  double total = 0.0;
  for (const auto& [i, j] : matching) total += weights[i][j];
  return total;
}

}  // namespace tassp

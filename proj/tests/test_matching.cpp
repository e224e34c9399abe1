#include "tassp/matching.hpp"

#include <stdexcept>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "doctest.h"
#include "support/oracles.hpp"
#include "tassp/rng.hpp"

using namespace tassp;

namespace {

std::vector<std::vector<double>> random_weights(Rng& rng, int n, double lo = 0.0,
                                                double hi = 100.0) {
  std::vector<std::vector<double>> w(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) w[i][j] = w[j][i] = rng.uniform(lo, hi);
  return w;
}

void check_shape(const std::vector<std::pair<int, int>>& matching, int n) {
  REQUIRE(static_cast<int>(matching.size()) == n / 2);
  std::vector<bool> seen(n, false);
  int prev = -1;
  for (const auto& [i, j] : matching) {
    CHECK(i < j);
    CHECK(i > prev);
    prev = i;
    REQUIRE(!seen[i]);
    REQUIRE(!seen[j]);
    seen[i] = seen[j] = true;
  }
}

}  // namespace

TEST_CASE("two vertices match on the single edge") {
  const auto m = exact_matching({{0, 3}, {3, 0}});
  REQUIRE(m.size() == 1);
  CHECK(m[0] == std::pair{0, 1});
}

TEST_CASE("cheap pairing is found") {
  // w(a,b)=w(c,d)=1, everything else 10
  const std::vector<std::vector<double>> w{
      {0, 1, 10, 10}, {1, 0, 10, 10}, {10, 10, 0, 1}, {10, 10, 1, 0}};
  const auto m = exact_matching(w);
  REQUIRE(m.size() == 2);
  CHECK(m[0] == std::pair{0, 1});
  CHECK(m[1] == std::pair{2, 3});
  CHECK(matching_weight(w, m) == doctest::Approx(2.0));
}

TEST_CASE("invalid weight tables are rejected") {
  CHECK_THROWS_AS(exact_matching({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(exact_matching({{0, 1}, {1, 0}, {1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(greedy_matching({{0}}), std::invalid_argument);
}

TEST_CASE("exact matching equals exhaustive enumeration up to 12 vertices") {
  Rng rng(21);
  for (int n : {4, 6, 8, 10, 12}) {
    for (int round = 0; round < 8; ++round) {
      const auto w = random_weights(rng, n);
      const auto m = exact_matching(w);
      check_shape(m, n);
      CHECK(matching_weight(w, m) ==
            doctest::Approx(test::brute_force_matching_weight(w)).epsilon(1e-9));
    }
  }
}

TEST_CASE("greedy never beats exact") {
  Rng rng(22);
  for (int round = 0; round < 20; ++round) {
    const auto w = random_weights(rng, 10);
    const auto e = exact_matching(w);
    const auto g = greedy_matching(w);
    check_shape(g, 10);
    CHECK(matching_weight(w, g) >= matching_weight(w, e) - 1e-9);
  }
}

// Above 22 vertices exact_matching switches from subset DP to the blossom
// search, so the larger sizes below exercise that path against instances
// with independently known optima.

TEST_CASE("planted optimal matching is recovered at blossom sizes") {
  Rng rng(23);
  for (int n : {24, 26, 30, 36}) {
    for (int round = 0; round < 4; ++round) {
      std::vector<int> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      for (int i = n - 1; i > 0; --i)
        std::swap(perm[i], perm[rng.next_u64() % static_cast<std::uint64_t>(i + 1)]);
      auto w = random_weights(rng, n, 100.0, 200.0);
      double planted = 0.0;
      for (int i = 0; i < n; i += 2) {
        const double cheap = rng.uniform(0.0, 1.0);
        w[perm[i]][perm[i + 1]] = w[perm[i + 1]][perm[i]] = cheap;
        planted += cheap;
      }
      // any other perfect matching uses at least one edge of weight >= 100 > planted total
      const auto m = exact_matching(w);
      check_shape(m, n);
      CHECK(matching_weight(w, m) == doctest::Approx(planted).epsilon(1e-9));
    }
  }
}

TEST_CASE("collinear points pair up consecutively at blossom sizes") {
  // on a line the optimal matching joins sorted neighbors 2i with 2i+1
  Rng rng(24);
  for (int n : {24, 32}) {
    std::vector<double> xs;
    for (int i = 0; i < n; ++i) xs.push_back(rng.uniform(0.0, 1000.0));
    std::sort(xs.begin(), xs.end());
    std::vector<std::vector<double>> w(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) w[i][j] = std::fabs(xs[i] - xs[j]);
    double expected = 0.0;
    for (int i = 0; i < n; i += 2) expected += xs[i + 1] - xs[i];
    const auto m = exact_matching(w);
    CHECK(matching_weight(w, m) == doctest::Approx(expected).epsilon(1e-9));
  }
}

TEST_CASE("optimal weight is invariant under vertex relabeling") {
  Rng rng(25);
  const int n = 26;
  const auto w = random_weights(rng, n);
  const double base = matching_weight(w, exact_matching(w));
  for (int round = 0; round < 3; ++round) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i)
      std::swap(perm[i], perm[rng.next_u64() % static_cast<std::uint64_t>(i + 1)]);
    std::vector<std::vector<double>> shuffled(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) shuffled[perm[i]][perm[j]] = w[i][j];
    CHECK(matching_weight(shuffled, exact_matching(shuffled)) ==
          doctest::Approx(base).epsilon(1e-9));
  }
}

TEST_CASE("boundary sizes around the DP/blossom switch agree with greedy-certified lines") {
  // consecutive pairing on a line with well separated pairs: greedy and exact
  // both must find it, on both sides of the 22-vertex switch
  for (int n : {20, 22, 24}) {
    std::vector<double> xs;
    for (int i = 0; i < n; i += 2) {
      xs.push_back(100.0 * i);
      xs.push_back(100.0 * i + 1.0);
    }
    std::vector<std::vector<double>> w(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) w[i][j] = std::fabs(xs[i] - xs[j]);
    const auto m = exact_matching(w);
    CHECK(matching_weight(w, m) == doctest::Approx(n / 2.0).epsilon(1e-12));
    for (const auto& [i, j] : m) CHECK(j == i + 1);
  }
}

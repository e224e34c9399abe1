#ifndef TASSP_TSP_HPP_
#define TASSP_TSP_HPP_

#include <vector>

#include "tassp/matching.hpp"
#include "tassp/metric.hpp"

namespace tassp {

// Hamiltonian tour over all targets of a metric; the depot (vertex 0) is
// implicit at both ends. order holds target vertex ids (1..n), cost is the
// closed-tour travel time under the metric the tour was built on.
struct Tour {
  std::vector<int> order;
  double cost = 0.0;
};

// Recomputes the closed-tour cost of visiting `order` from the depot.
double tour_cost(const Metric& metric, const std::vector<int>& order);

// Intermediate quantities of a christofides() run, exposed so callers can
// check the shortcut step against the Eulerian circuit it contracts.
struct ChristofidesStats {
  double mst_cost = 0.0;
  double matching_weight = 0.0;
  double euler_cost = 0.0;
  int odd_count = 0;
};

// MST + minimum-weight perfect matching on odd-degree vertices + Eulerian
// circuit + first-visit shortcut. With MatchingMode::Exact the result is
// within 3/2 of the optimal tour on any symmetric triangle-inequality metric.
// Ties in the MST and the Euler walk break toward smaller vertex ids.
// Requires at least one target.
Tour christofides(const Metric& metric, MatchingMode mode = MatchingMode::Exact,
                  ChristofidesStats* stats = nullptr);

inline constexpr int kHeldKarpCap = 16;

// Exact optimum by subset dynamic programming, usable up to `cap` targets.
// Throws std::invalid_argument above the cap.
Tour held_karp(const Metric& metric, int cap = kHeldKarpCap);

enum class TspBoundKind { Exact, ChristofidesDerived };

// Valid lower bound on the optimal tour cost: Held-Karp when it fits under
// the cap, otherwise christofides cost / 1.5. The kind records which branch
// produced the value.
struct TspBound {
  double value = 0.0;
  TspBoundKind kind = TspBoundKind::Exact;
};

TspBound tsp_lower_bound(const Metric& metric, int cap = kHeldKarpCap);

}  // namespace tassp

#endif  // TASSP_TSP_HPP_

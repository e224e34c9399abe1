#ifndef TASSP_BOUNDS_HPP_
#define TASSP_BOUNDS_HPP_

#include <optional>

#include "tassp/instance.hpp"
#include "tassp/tsp.hpp"

namespace tassp {

// Lower bounds on the optimal makespan:
//   l1 = (TSP lower bound + total processing) / k
//   l2 = total processing / m
//   l3 = max over targets of (round trip to depot + processing)
// tsp_bound_kind records whether l1 rests on the exact tour value or on
// christofides/1.5. The guarantee fields are filled in by callers that know
// a solution cost (and possibly the optimum).
struct BoundsReport {
  double l1 = 0.0;
  double l2 = 0.0;
  double l3 = 0.0;
  double l_max = 0.0;
  TspBoundKind tsp_bound_kind = TspBoundKind::Exact;
  std::optional<double> guarantee_vs_opt;
  std::optional<double> guarantee_vs_l_max;
};

BoundsReport lower_bounds(const Instance& instance, int held_karp_cap = kHeldKarpCap);

// cost / reference; reference must be positive.
double a_posteriori(double cost, double reference);

}  // namespace tassp

#endif  // TASSP_BOUNDS_HPP_

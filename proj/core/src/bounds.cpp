#include "tassp/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace tassp {

BoundsReport lower_bounds(const Instance& instance, int held_karp_cap) {
  BoundsReport report;
  const TspBound tsp = tsp_lower_bound(instance.metric(), held_karp_cap);
  const double total_p = instance.total_processing();
  report.tsp_bound_kind = tsp.kind;
  report.l1 = (tsp.value + total_p) / instance.k();
  report.l2 = total_p / instance.m();
  report.l3 = 0.0;
  for (int t = 1; t <= instance.num_targets(); ++t)
    report.l3 =
        std::max(report.l3, 2.0 * instance.metric().cost(0, t) + instance.processing(t));
  report.l_max = std::max({report.l1, report.l2, report.l3});
  return report;
}

double a_posteriori(double cost, double reference) {
  if (!(reference > 0.0))
    throw std::invalid_argument("a_posteriori: reference must be positive");
  return cost / reference;
}

}  // namespace tassp

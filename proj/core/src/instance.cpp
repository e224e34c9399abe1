#include "tassp/instance.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <unordered_set>
#include <utility>

namespace tassp {

Instance::Instance(std::string name, int k, int m, std::optional<Point> depot_pos,
                   std::vector<Target> targets, Metric metric)
    : name_(std::move(name)),
      k_(k),
      m_(m),
      depot_pos_(depot_pos),
      targets_(std::move(targets)),
      metric_(std::move(metric)) {
  if (metric_.size() != num_vertices())
    throw std::invalid_argument("metric size does not match |targets| + 1");
}

std::vector<double> Instance::processing_times() const {
  std::vector<double> p;
  p.reserve(targets_.size());
  for (const auto& t : targets_) p.push_back(t.processing);
  return p;
}

double Instance::total_processing() const {
  double sum = 0.0;
  for (const auto& t : targets_) sum += t.processing;
  return sum;
}

ValidationReport validate(const Instance& instance, double tol) {
  ValidationReport report;
  auto add = [&](const std::string& v) { report.violations.push_back(v); };

  if (instance.num_targets() < 1) add("instance has no targets (n >= 1 required)");
  if (instance.k() < 1) add("non-positive robot count k");
  if (instance.m() < 1) add("non-positive operator count m");

  std::unordered_set<std::string> seen;
  for (const auto& t : instance.targets()) {
    if (!seen.insert(t.id).second) add("duplicate target id \"" + t.id + "\"");
    if (t.id == "d") add("target id \"d\" collides with the depot");
    if (!std::isfinite(t.processing)) {
      add("non-finite processing time at target \"" + t.id + "\"");
    } else if (t.processing < 0.0) {
      std::ostringstream os;
      os << "negative processing time " << t.processing << " at target \"" << t.id << "\"";
      add(os.str());
    }
  }

  for (auto& v : instance.metric().check(tol)) add(v);
  return report;
}

}  // namespace tassp

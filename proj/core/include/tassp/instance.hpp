#ifndef TASSP_INSTANCE_HPP_
#define TASSP_INSTANCE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "tassp/metric.hpp"

namespace tassp {

struct Target {
  std::string id;
  std::optional<Point> pos;
  double processing = 0.0;  // p_i, time units

  friend bool operator==(const Target& a, const Target& b) {
    return a.id == b.id && a.pos == b.pos && a.processing == b.processing;
  }
};

// One problem instance: a depot, n targets with processing times, k robots,
// m human operators, and a symmetric metric over V = {depot} + targets.
// Vertex index 0 is the depot; target i (0-based in `targets`) is vertex i+1.
// Immutable after construction; safe to share across concurrent solvers.
class Instance {
 public:
  Instance() = default;
  Instance(std::string name, int k, int m, std::optional<Point> depot_pos,
           std::vector<Target> targets, Metric metric);

  const std::string& name() const { return name_; }
  int k() const { return k_; }
  int m() const { return m_; }
  int num_targets() const { return static_cast<int>(targets_.size()); }
  int num_vertices() const { return num_targets() + 1; }
  const std::optional<Point>& depot_pos() const { return depot_pos_; }
  const std::vector<Target>& targets() const { return targets_; }
  const Target& target(int vertex) const { return targets_[static_cast<std::size_t>(vertex) - 1]; }
  const Metric& metric() const { return metric_; }

  // Processing time of a vertex; 0 for the depot.
  double processing(int vertex) const {
    return vertex == 0 ? 0.0 : targets_[static_cast<std::size_t>(vertex) - 1].processing;
  }
  std::vector<double> processing_times() const;
  double total_processing() const;

  Metric modified() const { return modified_metric(metric_, processing_times()); }

  friend bool operator==(const Instance& a, const Instance& b) {
    return a.name_ == b.name_ && a.k_ == b.k_ && a.m_ == b.m_ && a.depot_pos_ == b.depot_pos_ &&
           a.targets_ == b.targets_ && a.metric_ == b.metric_;
  }

 private:
  std::string name_;
  int k_ = 1;
  int m_ = 1;
  std::optional<Point> depot_pos_;
  std::vector<Target> targets_;
  Metric metric_;
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Collects every violated instance invariant: non-positive k/m, empty target
// set, duplicate target ids, negative or non-finite processing times, and the
// metric axioms (symmetry, zero diagonal, triangle inequality at relative
// tolerance `tol`). Violations are data, not failures.
ValidationReport validate(const Instance& instance, double tol = 1e-9);

}  // namespace tassp

#endif  // TASSP_INSTANCE_HPP_

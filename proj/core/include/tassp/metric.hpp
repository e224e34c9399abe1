#ifndef TASSP_METRIC_HPP_
#define TASSP_METRIC_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace tassp {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
};

double euclidean_distance(const Point& a, const Point& b);

// Symmetric travel-time metric over the vertex set V, where index 0 is the
// depot and 1..n are the targets. Either built from 2-D positions (unit robot
// speed, travel time = Euclidean distance) or from an explicit matrix.
class Metric {
 public:
  enum class Kind { Euclidean, Explicit };

  Metric() = default;

  static Metric euclidean(const std::vector<Point>& positions);
  static Metric explicit_matrix(const std::vector<std::vector<double>>& matrix);

  double cost(int i, int j) const { return matrix_[static_cast<std::size_t>(i) * size_ + j]; }
  int size() const { return static_cast<int>(size_); }
  Kind kind() const { return kind_; }

  // Violations of the metric axioms (asymmetry, nonzero diagonal, negative
  // entries, triangle inequality with a witness triple). Euclidean metrics
  // satisfy them by construction; explicit ones are checked numerically with
  // relative tolerance `tol`.
  std::vector<std::string> check(double tol = 1e-9) const;

  friend bool operator==(const Metric& a, const Metric& b) {
    return a.kind_ == b.kind_ && a.size_ == b.size_ && a.matrix_ == b.matrix_;
  }

 private:
  Kind kind_ = Kind::Explicit;
  std::size_t size_ = 0;
  std::vector<double> matrix_;  // row-major |V| x |V|
};

// Travel times augmented by half the endpoint processing times:
//   c^(i,j) = c(i,j) + p_i/2 + p_j/2   for targets i, j
//   c^(i,d) = c(i,d) + p_i/2           for target i and the depot
// The depot carries no processing time. Symmetry and the triangle inequality
// carry over from the base metric.
double modified_cost(const Metric& metric, const std::vector<double>& processing, int i, int j);

// Materializes the modified metric as an explicit matrix.
Metric modified_metric(const Metric& metric, const std::vector<double>& processing);

}  // namespace tassp

#endif  // TASSP_METRIC_HPP_

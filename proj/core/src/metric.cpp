#include "tassp/metric.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace tassp {

double euclidean_distance(const Point& a, const Point& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

Metric Metric::euclidean(const std::vector<Point>& positions) {
  Metric m;
  m.kind_ = Kind::Euclidean;
  m.size_ = positions.size();
  m.matrix_.assign(m.size_ * m.size_, 0.0);
  for (std::size_t i = 0; i < m.size_; ++i) {
    for (std::size_t j = i + 1; j < m.size_; ++j) {
      const double d = euclidean_distance(positions[i], positions[j]);
      m.matrix_[i * m.size_ + j] = d;
      m.matrix_[j * m.size_ + i] = d;
    }
  }
  return m;
}

Metric Metric::explicit_matrix(const std::vector<std::vector<double>>& matrix) {
  Metric m;
  m.kind_ = Kind::Explicit;
  m.size_ = matrix.size();
  m.matrix_.reserve(m.size_ * m.size_);
  for (const auto& row : matrix) {
    if (row.size() != m.size_) throw std::invalid_argument("metric matrix is not square");
    m.matrix_.insert(m.matrix_.end(), row.begin(), row.end());
  }
  return m;
}

std::vector<std::string> Metric::check(double tol) const {
  std::vector<std::string> violations;
  if (kind_ == Kind::Euclidean) return violations;  // holds by construction
  const int n = size();
  auto scale = [&](double a, double b) { return std::max({1.0, std::fabs(a), std::fabs(b)}); };
  for (int i = 0; i < n; ++i) {
    if (cost(i, i) != 0.0) {
      std::ostringstream os;
      os << "nonzero diagonal entry c(" << i << "," << i << ") = " << cost(i, i);
      violations.push_back(os.str());
    }
    for (int j = i + 1; j < n; ++j) {
      if (cost(i, j) < 0.0 || cost(j, i) < 0.0) {
        std::ostringstream os;
        os << "negative travel time between " << i << " and " << j;
        violations.push_back(os.str());
      }
      if (std::fabs(cost(i, j) - cost(j, i)) > tol * scale(cost(i, j), cost(j, i))) {
        std::ostringstream os;
        os << "asymmetric travel times c(" << i << "," << j << ") = " << cost(i, j) << " vs c("
           << j << "," << i << ") = " << cost(j, i);
        violations.push_back(os.str());
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      for (int l = 0; l < n; ++l) {
        if (l == i || l == j) continue;
        const double direct = cost(i, j);
        const double via = cost(i, l) + cost(l, j);
        if (direct > via + tol * scale(direct, via)) {
          std::ostringstream os;
          os << "triangle inequality violated: c(" << i << "," << j << ") = " << direct << " > c("
             << i << "," << l << ") + c(" << l << "," << j << ") = " << via << " (witness " << i
             << "," << l << "," << j << ")";
          violations.push_back(os.str());
        }
      }
    }
  }
  return violations;
}

double modified_cost(const Metric& metric, const std::vector<double>& processing, int i, int j) {
  const int n = metric.size();
  if (i < 0 || i >= n || j < 0 || j >= n)
    throw std::out_of_range("modified_cost: unknown vertex id");
  const double pi = i == 0 ? 0.0 : processing[static_cast<std::size_t>(i) - 1];
  const double pj = j == 0 ? 0.0 : processing[static_cast<std::size_t>(j) - 1];
  return metric.cost(i, j) + pi / 2.0 + pj / 2.0;
}

Metric modified_metric(const Metric& metric, const std::vector<double>& processing) {
  const int n = metric.size();
  std::vector<std::vector<double>> rows(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) rows[i][j] = modified_cost(metric, processing, i, j);
  return Metric::explicit_matrix(rows);
}

}  // namespace tassp

#ifndef TASSP_TESTS_SUPPORT_HELPERS_HPP_
#define TASSP_TESTS_SUPPORT_HELPERS_HPP_

#include <string>
#include <utility>
#include <vector>

#include "tassp/instance.hpp"
#include "tassp/rng.hpp"
#include "tassp/split.hpp"

namespace tassp::test {

// Euclidean fixture: targets get ids t1..tn in the given order.
Instance euclidean_instance(std::string name, int k, int m, Point depot,
                            const std::vector<std::pair<Point, double>>& targets);

// Explicit-matrix fixture; matrix is (n+1)x(n+1), depot first.
Instance matrix_instance(std::string name, int k, int m,
                         std::vector<std::vector<double>> matrix,
                         const std::vector<double>& processing);

// Random Euclidean instance drawn with the test's own rng, so fixtures stay
// decoupled from the library generator.
Instance random_instance(Rng& rng, int n, int k, int m, double area = 100.0,
                         double p_max = 20.0);

// Random partition of targets 1..n into exactly k routes, empties allowed.
RouteSet random_routes(Rng& rng, int n, int k);

// Random visiting order of targets 1..n.
std::vector<int> random_order(Rng& rng, int n);

}  // namespace tassp::test

#endif  // TASSP_TESTS_SUPPORT_HELPERS_HPP_

#include "tassp/generate.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "tassp/rng.hpp"

namespace tassp {

Instance generate(const GeneratorParams& params) {
  if (params.n < 1) throw std::invalid_argument("generate: n must be positive");
  if (params.k < 1) throw std::invalid_argument("generate: k must be positive");
  if (params.m < 1) throw std::invalid_argument("generate: m must be positive");

  Rng rng(params.seed);
  std::vector<Point> positions;
  positions.reserve(static_cast<std::size_t>(params.n) + 1);
  for (int i = 0; i <= params.n; ++i) {
    const double x = rng.uniform(0.0, params.area);
    const double y = rng.uniform(0.0, params.area);
    positions.push_back({x, y});
  }

  // Mean travel time over all unordered pairs of V, depot included.
  double sum = 0.0;
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < positions.size(); ++i) {
    for (std::size_t j = i + 1; j < positions.size(); ++j) {
      sum += euclidean_distance(positions[i], positions[j]);
      ++pairs;
    }
  }
  const double mean_travel = pairs > 0 ? sum / static_cast<double>(pairs) : 0.0;

  std::vector<Target> targets;
  targets.reserve(static_cast<std::size_t>(params.n));
  for (int i = 0; i < params.n; ++i) {
    Target t;
    t.id = "t" + std::to_string(i + 1);
    t.pos = positions[static_cast<std::size_t>(i) + 1];
    t.processing = std::max(
        0.0, rng.normal(params.p_mean_frac * mean_travel, params.p_std_frac * mean_travel));
    targets.push_back(t);
  }

  std::ostringstream name;
  name << "rand-n" << params.n << "-k" << params.k << "-m" << params.m << "-s" << params.seed;
  return Instance(name.str(), params.k, params.m, positions.front(), std::move(targets),
                  Metric::euclidean(positions));
}

}  // namespace tassp

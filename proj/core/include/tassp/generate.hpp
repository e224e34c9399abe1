#ifndef TASSP_GENERATE_HPP_
#define TASSP_GENERATE_HPP_

#include <cstdint>

#include "tassp/instance.hpp"

namespace tassp {

struct GeneratorParams {
  int n = 11;              // target count
  int k = 4;               // robots
  int m = 3;               // operators
  double area = 50.0;      // square side length
  double p_mean_frac = 0.5;
  double p_std_frac = 0.02;
  std::uint64_t seed = 0;
};

// Samples the depot and n targets uniformly over [0, area]^2 with unit robot
// speed (travel time = Euclidean distance). Processing times are drawn from
// Normal(p_mean_frac * a, p_std_frac * a) where `a` is the mean travel time
// over all unordered vertex pairs of V (depot included), clamped below at 0.
// A pure function of its parameters: identical seed, identical instance.
Instance generate(const GeneratorParams& params);

}  // namespace tassp

#endif  // TASSP_GENERATE_HPP_

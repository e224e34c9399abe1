#ifndef TASSP_RNG_HPP_
#define TASSP_RNG_HPP_

#include <cmath>
#include <cstdint>
#include <random>

namespace tassp {

// mt19937_64 core with hand-rolled uniform/normal transforms. The engine is
// fully specified by the standard, and fixing the transforms keeps generated
// instances identical across standard-library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, 1).
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Box-Muller; two draws per sample, no caching of the second value.
  double normal(double mean, double stddev) {
    const double u1 = (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
    const double u2 = (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
    const double z = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    return mean + stddev * z;
  }

  std::uint64_t next_u64() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace tassp

#endif  // TASSP_RNG_HPP_

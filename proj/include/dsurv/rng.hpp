#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace dsurv {

// Seeded random stream addressed by (seed, stream). Monte Carlo consumers
// assign one stream per fixed-size block of draws, so results are identical
// for any worker count.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream) : engine_(mix(seed, stream)) {}

  // Uniform on (0, 1]; never returns 0, so -log stays finite.
  double uniform01() {
    return (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
  }

  double exponential() { return -std::log(uniform01()); }

 private:
  static std::uint64_t mix(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::mt19937_64 engine_;
};

}  // namespace dsurv

#pragma once

#include <cstdint>
#include <random>

namespace cab {

/// The single random stream of a run. Every stochastic draw comes from this
/// object in a fixed order, so the seed fully determines the trajectory.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed = 0) : engine_(seed) {}

  /// Uniform on [0, 1).
  double unit() { return uniform(0.0, 1.0); }

  /// Uniform on [lo, hi). lo == hi returns lo.
  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }

  /// Uniform on [-1, 1); the sign decides attraction vs repulsion.
  double signed_unit() { return uniform(-1.0, 1.0); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace cab

#pragma once

#include <cstdint>
#include <random>

namespace flock {

/// Seeded random source with a portable double extraction. mt19937_64 is
/// bit-exact across implementations; std::uniform_real_distribution is not,
/// so doubles are built from the top 53 bits directly.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  /// Uniform in [0, 1).
  double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

 private:
  std::mt19937_64 gen_;
};

}  // namespace flock

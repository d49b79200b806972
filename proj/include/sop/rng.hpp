#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace sop {

// Deterministic sampling layer over mt19937_64. The standard distribution
// adapters are implementation-defined, so everything an instance depends on
// is derived here from raw engine output only.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1) with 53 random bits.
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Uniform integer in [lo, hi], inclusive, bias-free via rejection.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

  // Standard normal via the Marsaglia polar method.
  double normal();
  double normal(double mean, double stddev) { return mean + stddev * normal(); }

  // Normal restricted to [lo, hi] by rejection.
  double truncated_normal(double mean, double stddev, double lo, double hi);

  template <typename T>
  void shuffle(std::vector<T>& values) {
    for (std::size_t i = values.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(uniform_int(0, static_cast<std::int64_t>(i) - 1));
      std::swap(values[i - 1], values[j]);
    }
  }

  // Derives an independent stream for a named sub-purpose.
  static std::uint64_t mix(std::uint64_t seed, std::uint64_t salt);

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace sop

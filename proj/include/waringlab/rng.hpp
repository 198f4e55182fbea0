#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

#include "waringlab/rational.hpp"

namespace waringlab {

/// SplitMix64 output function.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

/// Derives an independent sub-seed from (seed, salt). Used everywhere a
/// trial, restart or resampling attempt needs its own stream, so results
/// do not depend on execution order.
inline std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t salt) {
  return splitmix64(seed ^ splitmix64(salt + 0x632BE59BD9B4E019ull));
}

/// Deterministic 64-bit generator. Identical seeds give identical streams
/// on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [lo, hi], inclusive.
  long uniform_int(long lo, long hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(next_u64() % span);
  }

  /// Uniform integer coordinate in [-bound, bound], as an exact rational.
  Rat small_int(long bound) { return Rat(uniform_int(-bound, bound)); }

  /// Uniform nonzero integer coordinate in [-bound, bound] \ {0}.
  Rat small_nonzero(long bound) {
    long v = 0;
    while (v == 0) v = uniform_int(-bound, bound);
    return Rat(v);
  }

  /// Uniform double in [0, 1).
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Standard normal via Box-Muller.
  double gaussian() {
    double u = 0.0;
    while (u == 0.0) u = uniform01();
    const double v = uniform01();
    return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * M_PI * v);
  }

  std::complex<double> complex_gaussian() {
    const double re = gaussian() * M_SQRT1_2;
    const double im = gaussian() * M_SQRT1_2;
    return {re, im};
  }

 private:
  std::uint64_t state_;
};

}  // namespace waringlab

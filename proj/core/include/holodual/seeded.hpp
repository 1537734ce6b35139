#pragma once

#include <cstdint>
#include <random>

#include "holodual/spectral.hpp"

namespace holodual {

/// Deterministic random stream. Independent streams for the same seed are
/// selected by `stream`, so parallel trials can draw without sharing state
/// and still reproduce bit for bit. Doubles are built from the raw 64-bit
/// engine output rather than std distributions, whose algorithms are
/// implementation defined.
class SeededStream {
 public:
  explicit SeededStream(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next() { return engine_(); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Integer uniform on [lo, hi].
  int integer(int lo, int hi);

  /// Real and imaginary parts uniform on [-scale, scale).
  Complex complex_in_square(double scale = 1.0) {
    const double re = uniform(-scale, scale);
    const double im = uniform(-scale, scale);
    return {re, im};
  }

  /// e^{i phi} with phi uniform.
  Complex unit_phase();

 private:
  std::mt19937_64 engine_;
};

/// Coefficients on [n_lo, n_hi] drawn by complex_in_square(1) from
/// SeededStream(seed, stream).
BoundaryDistribution random_boundary(int n_lo, int n_hi, std::uint64_t seed,
                                     std::uint64_t stream = 0);

}  // namespace holodual

// Copyright 2026 the spinchan authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace spinchan {

/// Fixed-constant 64-bit linear congruential generator (Knuth's MMIX
/// multiplier 6364136223846793005 and increment 1442695040888963407).
/// Used wherever the library or its checks need reproducible pseudo-random
/// fixtures: the stream is fully determined by the seed, independent of the
/// platform's <random> implementation.
class LcgStream {
 public:
  explicit LcgStream(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ = state_ * 6364136223846793005ull + 1442695040888963407ull;
    return state_;
  }

  /// Uniform double in [0,1), 53 significant bits.
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard complex Gaussian via Box-Muller (both components N(0,1/2)-ish;
  /// only rotation invariance matters for the fixtures built from it).
  std::complex<double> gaussian() {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    return {r * std::cos(6.283185307179586477 * u2),
            r * std::sin(6.283185307179586477 * u2)};
  }

 private:
  std::uint64_t state_;
};

}  // namespace spinchan

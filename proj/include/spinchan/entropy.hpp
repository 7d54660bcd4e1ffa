// Copyright 2026 the spinchan authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace spinchan {

/// A real number constrained to [0,1]. Values within 1e-12 of the boundary
/// (floating-point dust from upstream eigenvalue computations) are clamped;
/// anything further out throws std::domain_error.
class Probability {
 public:
  explicit Probability(double v);
  double value() const { return v_; }

 private:
  double v_;
};

/// Binary entropy H2(x) = -x log2 x - (1-x) log2(1-x), with 0 log2 0 = 0.
/// Result in bits, in [0,1].
double binary_entropy(Probability x);
inline double binary_entropy(double x) { return binary_entropy(Probability(x)); }

/// Entropy of a thermal bosonic state with mean occupation x:
/// g(x) = (x+1) log2(x+1) - x log2 x, with 0 log2 0 = 0. Requires x >= 0.
double bosonic_g(double x);

/// f_y(x) = ((1 - sqrt(r)) / (1 + sqrt(r)))^(x / sqrt(r)) with
/// r = (1-2x)^2 + 4xy, on y in [0,1], x in [0, 1-y]. This is the function
/// whose monotonicity in x underpins the optimality of zero-coherence inputs
/// in the capacity maximizations. At x = 0 the 0^0 form is resolved to the
/// limit value 1. The single interior zero of r (y = 0, x = 1/2) is a
/// removable singularity and is evaluated as the one-sided limit at
/// x = 1/2 - 1e-9.
double monotone_f(double y, double x);

}  // namespace spinchan

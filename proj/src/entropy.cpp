// Copyright 2026 the spinchan authors
// SPDX-License-Identifier: Apache-2.0

#include "spinchan/entropy.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace spinchan {

namespace {
constexpr double kBoundaryClamp = 1e-12;

double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }
}  // namespace

Probability::Probability(double v) : v_(v) {
  if (v_ < 0.0) {
    if (v_ < -kBoundaryClamp)
      throw std::domain_error("Probability: value " + std::to_string(v) +
                              " below 0");
    v_ = 0.0;
  } else if (v_ > 1.0) {
    if (v_ > 1.0 + kBoundaryClamp)
      throw std::domain_error("Probability: value " + std::to_string(v) +
                              " above 1");
    v_ = 1.0;
  }
}

double binary_entropy(Probability x) {
  const double p = x.value();
  return -xlog2x(p) - xlog2x(1.0 - p);
}

double bosonic_g(double x) {
  if (x < 0.0) {
    if (x < -kBoundaryClamp)
      throw std::domain_error("bosonic_g: negative argument");
    x = 0.0;
  }
  return (x + 1.0) * std::log2(x + 1.0) - xlog2x(x);
}

double monotone_f(double y, double x) {
  if (y < -kBoundaryClamp || y > 1.0 + kBoundaryClamp)
    throw std::domain_error("monotone_f: y outside [0,1]");
  y = std::min(std::max(y, 0.0), 1.0);
  if (x < -kBoundaryClamp || x > 1.0 - y + kBoundaryClamp)
    throw std::domain_error("monotone_f: x outside [0,1-y]");
  x = std::min(std::max(x, 0.0), 1.0 - y);

  if (x == 0.0) return 1.0;

  double r = (1.0 - 2.0 * x) * (1.0 - 2.0 * x) + 4.0 * x * y;
  if (r <= 0.0) {
    // Removable singularity (only at y = 0, x = 1/2): one-sided limit.
    x -= 1e-9;
    r = (1.0 - 2.0 * x) * (1.0 - 2.0 * x) + 4.0 * x * y;
  }
  const double sr = std::sqrt(r);
  const double base = (1.0 - sr) / (1.0 + sr);
  // base in [0,1) on this domain; at base == 0 the positive exponent gives 0.
  if (base <= 0.0) return 0.0;
  return std::exp((x / sr) * std::log(base));
}

}  // namespace spinchan

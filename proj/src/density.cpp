// Copyright 2026 the spinchan authors
// SPDX-License-Identifier: Apache-2.0

#include "spinchan/density.hpp"

#include <cmath>
#include <stdexcept>

#include "spinchan/entropy.hpp"

namespace spinchan {

namespace {
constexpr double kHermTol = 1e-12;
constexpr double kTraceTol = 1e-12;
constexpr double kPsdTol = 1e-10;
}  // namespace

QubitParams::QubitParams(double p_, cxd gamma_) : p(p_), gamma(gamma_) {
  if (p < 0.0 || p > 1.0)
    throw std::domain_error("QubitParams: population outside [0,1]");
  if (std::norm(gamma) > p * (1.0 - p) + 1e-12)
    throw std::domain_error("QubitParams: |gamma|^2 exceeds p(1-p)");
}

DensityMatrix::DensityMatrix(Mat m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols() || m_.rows() == 0)
    throw std::invalid_argument("DensityMatrix: matrix not square");
  if (m_.hermitian_defect() > kHermTol * std::max(1.0, m_.frobenius_norm()))
    throw std::invalid_argument("DensityMatrix: matrix not Hermitian");
  if (std::abs(m_.trace() - cxd{1.0}) > kTraceTol)
    throw std::invalid_argument("DensityMatrix: trace differs from 1");
  const EigenSystem es = hermitian_eigensystem(m_);
  if (es.values.back() < -kPsdTol)
    throw std::invalid_argument("DensityMatrix: matrix not positive semidefinite");
}

DensityMatrix make_qubit_state(const QubitParams& params) {
  Mat m(2, 2);
  m(0, 0) = 1.0 - params.p;
  m(0, 1) = std::conj(params.gamma);
  m(1, 0) = params.gamma;
  m(1, 1) = params.p;
  return DensityMatrix(std::move(m));
}

DensityMatrix embed(const DensityMatrix& rho, int dim) {
  if (dim < rho.dim()) throw std::invalid_argument("embed: target dimension too small");
  Mat m(dim, dim);
  for (int i = 0; i < rho.dim(); ++i)
    for (int j = 0; j < rho.dim(); ++j) m(i, j) = rho(i, j);
  return DensityMatrix(std::move(m));
}

DensityMatrix partial_trace(const DensityMatrix& joint, int d1, int d2,
                            Keep keep) {
  if (joint.dim() != d1 * d2)
    throw std::invalid_argument("partial_trace: dimension mismatch");
  const int dk = keep == Keep::First ? d1 : d2;
  const int dt = keep == Keep::First ? d2 : d1;
  Mat out(dk, dk);
  for (int i = 0; i < dk; ++i)
    for (int j = 0; j < dk; ++j) {
      cxd s = 0.0;
      for (int t = 0; t < dt; ++t) {
        const int row = keep == Keep::First ? i * d2 + t : t * d2 + i;
        const int col = keep == Keep::First ? j * d2 + t : t * d2 + j;
        s += joint(row, col);
      }
      out(i, j) = s;
    }
  return DensityMatrix(std::move(out));
}

DensityMatrix purify(const DensityMatrix& rho) {
  const int d = rho.dim();
  const EigenSystem es = hermitian_eigensystem(rho.matrix());

  std::vector<cxd> phi(static_cast<std::size_t>(d) * d);
  for (int i = 0; i < d; ++i) {
    const double lam = std::max(es.values[i], 0.0);
    if (lam == 0.0) continue;
    const double w = std::sqrt(lam);
    for (int s = 0; s < d; ++s) phi[static_cast<std::size_t>(s) * d + i] = w * es.vectors(s, i);
  }

  Mat m(d * d, d * d);
  for (int a = 0; a < d * d; ++a)
    for (int b = 0; b < d * d; ++b) m(a, b) = phi[a] * std::conj(phi[b]);
  return DensityMatrix(std::move(m));
}

double von_neumann_entropy(const DensityMatrix& rho) {
  const EigenSystem es = hermitian_eigensystem(rho.matrix());
  double s = 0.0;
  for (double lam : es.values) {
    if (lam < -kPsdTol)
      throw std::domain_error("von_neumann_entropy: negative eigenvalue beyond tolerance");
    if (lam > 0.0) s -= lam * std::log2(lam);
  }
  return s;
}

DensityMatrix random_density_matrix(int dim, LcgStream& rng) {
  Mat g(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) g(i, j) = rng.gaussian();
  Mat m = g * g.adjoint();
  const double tr = std::real(m.trace());
  m *= cxd{1.0 / tr};
  return DensityMatrix(std::move(m));
}

}  // namespace spinchan

// Copyright 2026 the spinchan authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "spinchan/linalg.hpp"
#include "spinchan/rng.hpp"

namespace spinchan {

/// Parameters (p, gamma) of a general qubit state
///   rho = [[1-p, conj(gamma)], [gamma, p]]
/// in the computational basis: p is the |1> population and gamma the
/// coherence, constrained by |gamma|^2 <= p(1-p).
struct QubitParams {
  double p = 0.0;
  cxd gamma = 0.0;

  QubitParams(double p_, cxd gamma_);
};

/// Hermitian, positive semidefinite, unit-trace complex matrix. The
/// constructor enforces Hermiticity and trace to 1e-12 and positivity to
/// -1e-10 on the spectrum; eigenvalues inside [-1e-10, 0) are treated as
/// zero by consumers (e.g. the entropy).
class DensityMatrix {
 public:
  explicit DensityMatrix(Mat m);

  int dim() const { return m_.rows(); }
  const Mat& matrix() const { return m_; }
  cxd operator()(int i, int j) const { return m_(i, j); }

 private:
  Mat m_;
};

DensityMatrix make_qubit_state(const QubitParams& params);

/// Zero-pads a state into a larger Hilbert space (support on the leading
/// basis vectors). Used to feed qubit states to channels whose carrier
/// space is larger.
DensityMatrix embed(const DensityMatrix& rho, int dim);

enum class Keep { First, Second };

/// Partial trace of a state on a d1 x d2 bipartite space (first factor has
/// the slower-varying index). Keeps the requested factor.
DensityMatrix partial_trace(const DensityMatrix& joint, int d1, int d2,
                            Keep keep);

/// Spectral purification: |Phi> = sum_i sqrt(lambda_i) |e_i> otimes |i>,
/// with {lambda_i, |e_i>} the eigensystem of rho and |i> the computational
/// ancilla basis. The returned state lives on dim(rho)^2 with the system
/// factor first; tracing out the ancilla recovers rho. Any other
/// purification differs from this one by an ancilla isometry, which no
/// entropic quantity used here can see.
DensityMatrix purify(const DensityMatrix& rho);

/// S(rho) = -Tr[rho log2 rho] in bits. Eigenvalues in [-1e-10, 0) are
/// clamped to zero; anything more negative throws.
double von_neumann_entropy(const DensityMatrix& rho);

/// Reproducible random mixed state: rho = G G^dagger / Tr(G G^dagger) with
/// G filled from the given LCG stream.
DensityMatrix random_density_matrix(int dim, LcgStream& rng);

}  // namespace spinchan

// Copyright 2026 the spinchan authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <vector>

namespace spinchan {

using cxd = std::complex<double>;

/// Dense complex matrix, row-major. All channel and chain objects in this
/// library are small (dimension at most a few thousand), so the
/// implementation favours clarity and determinism over speed.
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols)
      : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

  static Mat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  cxd& operator()(int i, int j) {
    return a_[static_cast<std::size_t>(i) * cols_ + j];
  }
  const cxd& operator()(int i, int j) const {
    return a_[static_cast<std::size_t>(i) * cols_ + j];
  }

  Mat adjoint() const;
  cxd trace() const;
  double frobenius_norm() const;
  /// Frobenius norm of (A - A^dagger); zero iff Hermitian.
  double hermitian_defect() const;

  Mat& operator+=(const Mat& rhs);
  Mat& operator-=(const Mat& rhs);
  Mat& operator*=(cxd s);

  static Mat kron(const Mat& a, const Mat& b);

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<cxd> a_;
};

Mat operator+(Mat lhs, const Mat& rhs);
Mat operator-(Mat lhs, const Mat& rhs);
Mat operator*(const Mat& lhs, const Mat& rhs);
Mat operator*(cxd s, Mat m);

std::vector<cxd> operator*(const Mat& m, const std::vector<cxd>& v);

double frobenius_distance(const Mat& a, const Mat& b);

/// Eigendecomposition of a Hermitian matrix. `values` are real and sorted
/// descending; column j of `vectors` is the eigenvector of values[j].
struct EigenSystem {
  std::vector<double> values;
  Mat vectors;
};

/// Cyclic complex Jacobi diagonalization. Converges when the off-diagonal
/// Frobenius norm drops below 1e-13 * ||m||_F (at most 100 sweeps), which is
/// ample for the small matrices handled here. Deterministic: a fixed sweep
/// order and a stable sort of the spectrum.
///
/// Throws std::invalid_argument if `m` is not square or not Hermitian to
/// 1e-10 (relative to its norm).
EigenSystem hermitian_eigensystem(const Mat& m);

}  // namespace spinchan

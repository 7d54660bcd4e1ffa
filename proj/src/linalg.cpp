// Copyright 2026 the spinchan authors
// SPDX-License-Identifier: Apache-2.0

#include "spinchan/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace spinchan {

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Mat Mat::adjoint() const {
  Mat out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

cxd Mat::trace() const {
  if (rows_ != cols_) throw std::invalid_argument("trace: matrix not square");
  cxd t = 0.0;
  for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

double Mat::frobenius_norm() const {
  double s = 0.0;
  for (const cxd& z : a_) s += std::norm(z);
  return std::sqrt(s);
}

double Mat::hermitian_defect() const {
  if (rows_ != cols_) throw std::invalid_argument("hermitian_defect: matrix not square");
  double s = 0.0;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      s += std::norm((*this)(i, j) - std::conj((*this)(j, i)));
  return std::sqrt(s);
}

Mat& Mat::operator+=(const Mat& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw std::invalid_argument("matrix addition: shape mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += rhs.a_[i];
  return *this;
}

Mat& Mat::operator-=(const Mat& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw std::invalid_argument("matrix subtraction: shape mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= rhs.a_[i];
  return *this;
}

Mat& Mat::operator*=(cxd s) {
  for (cxd& z : a_) z *= s;
  return *this;
}

Mat Mat::kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      const cxd aij = a(i, j);
      if (aij == cxd{}) continue;
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return out;
}

Mat operator+(Mat lhs, const Mat& rhs) { return lhs += rhs; }
Mat operator-(Mat lhs, const Mat& rhs) { return lhs -= rhs; }

Mat operator*(const Mat& lhs, const Mat& rhs) {
  if (lhs.cols() != rhs.rows())
    throw std::invalid_argument("matrix product: shape mismatch");
  Mat out(lhs.rows(), rhs.cols());
  for (int i = 0; i < lhs.rows(); ++i)
    for (int k = 0; k < lhs.cols(); ++k) {
      const cxd lik = lhs(i, k);
      if (lik == cxd{}) continue;
      for (int j = 0; j < rhs.cols(); ++j) out(i, j) += lik * rhs(k, j);
    }
  return out;
}

Mat operator*(cxd s, Mat m) { return m *= s; }

std::vector<cxd> operator*(const Mat& m, const std::vector<cxd>& v) {
  if (static_cast<std::size_t>(m.cols()) != v.size())
    throw std::invalid_argument("matrix-vector product: shape mismatch");
  std::vector<cxd> out(m.rows());
  for (int i = 0; i < m.rows(); ++i) {
    cxd s = 0.0;
    for (int j = 0; j < m.cols(); ++j) s += m(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

double frobenius_distance(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("frobenius_distance: shape mismatch");
  double s = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) s += std::norm(a(i, j) - b(i, j));
  return std::sqrt(s);
}

namespace {

double offdiag_norm(const Mat& a) {
  double s = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = i + 1; j < a.cols(); ++j) s += std::norm(a(i, j));
  return std::sqrt(2.0 * s);
}

}  // namespace

EigenSystem hermitian_eigensystem(const Mat& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("hermitian_eigensystem: matrix not square");
  const int n = m.rows();
  const double scale = m.frobenius_norm();
  if (m.hermitian_defect() > 1e-10 * std::max(1.0, scale))
    throw std::invalid_argument("hermitian_eigensystem: matrix not Hermitian");

  // Work on the Hermitian average so roundoff in the input triangles cancels.
  Mat a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      a(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
  Mat v = Mat::identity(n);

  const double target = 1e-13 * std::max(scale, 1e-300);
  for (int sweep = 0; sweep < 100 && offdiag_norm(a) > target; ++sweep) {
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const cxd apq = a(p, q);
        const double r = std::abs(apq);
        if (r == 0.0) continue;
        const cxd phase = apq / r;  // a_pq = r * phase

        // Rotation angle that annihilates a_pq: same formula as the real
        // Jacobi case, applied after factoring out the phase.
        const double h = std::real(a(q, q) - a(p, p));
        const double theta = h / (2.0 * r);
        double t;
        const double theta2 = theta * theta;
        if (std::isfinite(theta2))
          t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta2 + 1.0));
        else
          t = r / h;  // |theta| huge: first-order angle
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        const double app = std::real(a(p, p));
        const double aqq = std::real(a(q, q));
        a(p, p) = c * c * app - 2.0 * c * s * r + s * s * aqq;
        a(q, q) = s * s * app + 2.0 * c * s * r + c * c * aqq;
        a(p, q) = 0.0;
        a(q, p) = 0.0;

        for (int i = 0; i < n; ++i) {
          if (i != p && i != q) {
            const cxd aip = a(i, p);
            const cxd aiq = a(i, q);
            a(i, p) = c * aip - s * std::conj(phase) * aiq;
            a(i, q) = s * phase * aip + c * aiq;
            a(p, i) = std::conj(a(i, p));
            a(q, i) = std::conj(a(i, q));
          }
          const cxd vip = v(i, p);
          const cxd viq = v(i, q);
          v(i, p) = c * vip - s * std::conj(phase) * viq;
          v(i, q) = s * phase * vip + c * viq;
        }
      }
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
    return std::real(a(i, i)) > std::real(a(j, j));
  });

  EigenSystem es;
  es.values.resize(n);
  es.vectors = Mat(n, n);
  for (int j = 0; j < n; ++j) {
    es.values[j] = std::real(a(order[j], order[j]));
    for (int i = 0; i < n; ++i) es.vectors(i, j) = v(i, order[j]);
  }
  return es;
}

}  // namespace spinchan

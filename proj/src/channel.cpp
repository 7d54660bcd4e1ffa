// Copyright 2026 the spinchan authors
// SPDX-License-Identifier: Apache-2.0

#include "spinchan/channel.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace spinchan {

namespace {
constexpr double kTpTol = 1e-10;      // trace preservation
constexpr double kUnitaryTol = 1e-10;
constexpr double kParamTol = 1e-12;
}  // namespace

ChannelParamsAD::ChannelParamsAD(double eta_) : eta(eta_) {
  if (eta < -kParamTol || eta > 1.0 + kParamTol)
    throw std::domain_error("ChannelParamsAD: eta outside [0,1]");
  eta = std::min(std::max(eta, 0.0), 1.0);
}

ChannelParamsT::ChannelParamsT(double eta1_, double eta2_,
                               std::vector<double> zeta_)
    : eta1(eta1_), eta2(eta2_), zeta(std::move(zeta_)) {
  if (eta1 < -kParamTol || eta2 < -kParamTol)
    throw std::domain_error("ChannelParamsT: negative branch probability");
  if (eta1 + eta2 > 1.0 + kParamTol)
    throw std::domain_error("ChannelParamsT: eta1 + eta2 exceeds 1");
  eta1 = std::max(eta1, 0.0);
  eta2 = std::max(eta2, 0.0);
  if (zeta.empty())
    throw std::domain_error("ChannelParamsT: empty zeta spectrum");
  double sum = 0.0;
  for (double z : zeta) {
    if (z <= 0.0) throw std::domain_error("ChannelParamsT: zeta entries must be positive");
    sum += z;
  }
  if (std::abs(sum - 1.0) > kParamTol)
    throw std::domain_error("ChannelParamsT: zeta spectrum does not sum to 1");
}

KrausChannel::KrausChannel(int in_dim, int out_dim, std::vector<Mat> ops)
    : in_dim_(in_dim), out_dim_(out_dim), ops_(std::move(ops)) {
  if (ops_.empty()) throw std::invalid_argument("KrausChannel: no operators");
  for (const Mat& a : ops_)
    if (a.rows() != out_dim_ || a.cols() != in_dim_)
      throw std::invalid_argument("KrausChannel: operator shape mismatch");
  Mat s(in_dim_, in_dim_);
  for (const Mat& a : ops_) s += a.adjoint() * a;
  if (frobenius_distance(s, Mat::identity(in_dim_)) > kTpTol)
    throw std::invalid_argument("KrausChannel: not trace preserving");
}

KrausChannel KrausChannel::identity(int dim) {
  std::vector<Mat> ops{Mat::identity(dim)};
  return KrausChannel(dim, dim, std::move(ops));
}

KrausChannel amplitude_damping(const ChannelParamsAD& params) {
  return amplitude_damping_on_block(params.eta, 2);
}

KrausChannel amplitude_damping_on_block(double eta, int dim) {
  if (eta < 0.0 || eta > 1.0)
    throw std::domain_error("amplitude_damping_on_block: eta outside [0,1]");
  if (dim < 2) throw std::invalid_argument("amplitude_damping_on_block: dim < 2");
  Mat a0 = Mat::identity(dim);
  a0(1, 1) = std::sqrt(eta);
  Mat a1(dim, dim);
  a1(0, 1) = std::sqrt(1.0 - eta);
  std::vector<Mat> ops;
  ops.push_back(std::move(a0));
  ops.push_back(std::move(a1));
  return KrausChannel(dim, dim, std::move(ops));
}

KrausChannel t_channel(const ChannelParamsT& params) {
  const int d = params.dim();
  const double eta3 = params.eta3();

  Mat a0 = Mat::identity(d);
  a0(1, 1) = std::sqrt(params.eta1);
  Mat a1(d, d);
  a1(0, 1) = std::sqrt(params.eta2);

  std::vector<Mat> ops;
  ops.push_back(std::move(a0));
  ops.push_back(std::move(a1));
  for (int i = 0; i < params.rank(); ++i) {
    Mat ai(d, d);
    ai(2 + i, 1) = std::sqrt(std::max(eta3, 0.0) * params.zeta[i]);
    ops.push_back(std::move(ai));
  }
  return KrausChannel(d, d, std::move(ops));
}

DensityMatrix apply(const KrausChannel& channel, const DensityMatrix& rho) {
  if (rho.dim() != channel.in_dim())
    throw std::invalid_argument("apply: state dimension mismatch");
  Mat out(channel.out_dim(), channel.out_dim());
  for (const Mat& a : channel.operators()) out += a * rho.matrix() * a.adjoint();
  return DensityMatrix(std::move(out));
}

DensityMatrix apply_extended(const KrausChannel& channel,
                             const DensityMatrix& joint, int anc_dim) {
  if (joint.dim() != channel.in_dim() * anc_dim)
    throw std::invalid_argument("apply_extended: joint dimension mismatch");
  const Mat id_anc = Mat::identity(anc_dim);
  Mat out(channel.out_dim() * anc_dim, channel.out_dim() * anc_dim);
  for (const Mat& a : channel.operators()) {
    const Mat ext = Mat::kron(a, id_anc);
    out += ext * joint.matrix() * ext.adjoint();
  }
  return DensityMatrix(std::move(out));
}

KrausChannel compose(const KrausChannel& outer, const KrausChannel& inner) {
  if (inner.out_dim() != outer.in_dim())
    throw std::invalid_argument("compose: dimension mismatch");
  std::vector<Mat> ops;
  ops.reserve(outer.operators().size() * inner.operators().size());
  for (const Mat& b : outer.operators())
    for (const Mat& a : inner.operators()) ops.push_back(b * a);
  return KrausChannel(inner.in_dim(), outer.out_dim(), std::move(ops));
}

KrausChannel complementary(const KrausChannel& channel) {
  const int k = static_cast<int>(channel.operators().size());
  const int in = channel.in_dim();
  const int out = channel.out_dim();
  // B_i (i over the original output basis) with (B_i)_{k,j} = (A_k)_{i,j}:
  // then sum_i B_i rho B_i^dagger has (k,l) entry Tr(A_l^dagger A_k rho).
  std::vector<Mat> ops;
  ops.reserve(out);
  for (int i = 0; i < out; ++i) {
    Mat b(k, in);
    for (int kk = 0; kk < k; ++kk)
      for (int j = 0; j < in; ++j) b(kk, j) = channel.operators()[kk](i, j);
    ops.push_back(std::move(b));
  }
  return KrausChannel(in, k, std::move(ops));
}

DilationUnitary::DilationUnitary(Mat u_) : u(std::move(u_)) {
  if (u.rows() != u.cols()) throw std::invalid_argument("DilationUnitary: not square");
  if (frobenius_distance(u.adjoint() * u, Mat::identity(u.rows())) > kUnitaryTol)
    throw std::invalid_argument("DilationUnitary: matrix not unitary");
}

DilationUnitary dilation_ad(const ChannelParamsAD& params) {
  const double c = std::sqrt(params.eta);
  const double s = std::sqrt(1.0 - params.eta);
  Mat v = Mat::identity(4);
  v(1, 1) = c;
  v(1, 2) = s;
  v(2, 1) = -s;
  v(2, 2) = c;
  return DilationUnitary(std::move(v));
}

DilationUnitary dilation_t(const ChannelParamsT& params) {
  if (params.rank() != 1)
    throw std::invalid_argument("dilation_t: only rank-1 zeta spectra are supported");
  const double e1 = params.eta1;
  const double e2 = params.eta2;
  const double e3 = params.eta3();
  const double s1 = std::sqrt(e1);

  // 3x3 block in the basis {|01>, |10>, |Phi_sigma> = |z>|z>}. The corner
  // entry is written with 1 - eta1 = eta2 + eta3 so the eta1 -> 1 limit
  // (where the block must collapse to the identity) stays finite.
  double b22 = 1.0;
  if (e2 + e3 > 0.0) b22 = (e2 + e3 * s1) / (e2 + e3);
  Mat b(3, 3);
  b(0, 0) = (1.0 + s1 - e2) / (1.0 + s1);
  b(0, 1) = std::sqrt(e2);
  b(0, 2) = -std::sqrt(e2 * e3) / (1.0 + s1);
  b(1, 0) = -std::sqrt(e2);
  b(1, 1) = s1;
  b(1, 2) = -std::sqrt(e3);
  b(2, 0) = -std::sqrt(e2 * e3) / (1.0 + s1);
  b(2, 1) = std::sqrt(e3);
  b(2, 2) = b22;

  // Carrier pair: system and environment are both {|0>,|1>,|z>}, joint
  // index a*3 + c. |01> = 1, |10> = 3, |z z> = 8.
  const int sub[3] = {1, 3, 8};
  Mat v = Mat::identity(9);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) v(sub[i], sub[j]) = b(i, j);
  return DilationUnitary(std::move(v));
}

DensityMatrix apply_dilation(const DilationUnitary& v, const DensityMatrix& rho,
                             int env_dim, Keep keep) {
  if (v.dim() != rho.dim() * env_dim)
    throw std::invalid_argument("apply_dilation: dimension mismatch");
  Mat env0(env_dim, env_dim);
  env0(0, 0) = 1.0;
  const Mat joint = v.u * Mat::kron(rho.matrix(), env0) * v.u.adjoint();
  return partial_trace(DensityMatrix(joint), rho.dim(), env_dim, keep);
}

namespace {

// The degradability identities compare states on the environment with
// states on the system carrier; with the Kraus-indexed environment basis
// used by complementary() the swap between the two is the plain index
// identification, so the comparison is entrywise.
double degradability_deviation(const KrausChannel& channel,
                               const KrausChannel& degrading) {
  const KrausChannel comp = complementary(channel);
  LcgStream rng(0x5eed5eedULL);
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const DensityMatrix rho =
        embed(random_density_matrix(2, rng), channel.in_dim());
    const DensityMatrix lhs = apply(comp, rho);
    const DensityMatrix rhs = apply(degrading, apply(channel, rho));
    worst = std::max(worst, frobenius_distance(lhs.matrix(), rhs.matrix()));
  }
  return worst;
}

}  // namespace

DegradabilityReport degradability_check(const ChannelParamsAD& params) {
  if (params.eta < 0.5) return {false, 0.0};
  const double dev = degradability_deviation(
      amplitude_damping(params),
      amplitude_damping(ChannelParamsAD((1.0 - params.eta) / params.eta)));
  return {dev <= 1e-9, dev};
}

DegradabilityReport degradability_check(const ChannelParamsT& params) {
  if (params.rank() != 1)
    throw std::invalid_argument("degradability_check: only rank-1 zeta spectra are supported");
  if (params.eta1 < params.eta2) return {false, 0.0};
  if (params.eta1 == 0.0) return {false, 0.0};  // eta1 = eta2 = 0
  const double dev = degradability_deviation(
      t_channel(params),
      amplitude_damping_on_block(params.eta2 / params.eta1, params.dim()));
  return {dev <= 1e-9, dev};
}

}  // namespace spinchan

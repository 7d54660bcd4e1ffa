// Copyright 2026 the spinchan authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "spinchan/density.hpp"
#include "spinchan/linalg.hpp"

namespace spinchan {

/// Amplitude damping channel parameter: transmissivity eta in [0,1].
struct ChannelParamsAD {
  double eta = 1.0;

  explicit ChannelParamsAD(double eta_);
};

/// Two-parameter channel T_{eta1,eta2}: the |1> population is transmitted
/// faithfully with probability eta1, damped to |0> with probability eta2,
/// and leaked with probability eta3 = 1 - eta1 - eta2 into a fixed state
/// sigma with spectrum `zeta` supported on basis vectors orthogonal to the
/// qubit block. `zeta` must be strictly positive and sum to 1; its length r
/// sets the carrier dimension 2 + r.
struct ChannelParamsT {
  double eta1 = 1.0;
  double eta2 = 0.0;
  std::vector<double> zeta{1.0};

  ChannelParamsT(double eta1_, double eta2_, std::vector<double> zeta_ = {1.0});

  double eta3() const { return 1.0 - eta1 - eta2; }
  int rank() const { return static_cast<int>(zeta.size()); }
  int dim() const { return 2 + rank(); }
};

/// Completely positive trace-preserving map, represented by Kraus operators
/// (each out_dim x in_dim). The constructor checks trace preservation,
/// sum_k A_k^dagger A_k = I, to 1e-10 in Frobenius norm.
class KrausChannel {
 public:
  KrausChannel(int in_dim, int out_dim, std::vector<Mat> ops);

  static KrausChannel identity(int dim);

  int in_dim() const { return in_dim_; }
  int out_dim() const { return out_dim_; }
  const std::vector<Mat>& operators() const { return ops_; }

 private:
  int in_dim_;
  int out_dim_;
  std::vector<Mat> ops_;
};

/// D_eta on a qubit: A0 = |0><0| + sqrt(eta)|1><1|, A1 = sqrt(1-eta)|0><1|.
KrausChannel amplitude_damping(const ChannelParamsAD& params);

/// D_eta acting on the {|0>,|1>} block of a dim-dimensional space, identity
/// on the rest. This is the degrading map of the T channel, and reduces to
/// amplitude_damping at dim == 2.
KrausChannel amplitude_damping_on_block(double eta, int dim);

/// T_{eta1,eta2} as a square channel on its 2+r carrier space:
///   A0     = |0><0| + sqrt(eta1)|1><1| + sum_i |z_i><z_i|
///   A1     = sqrt(eta2)|0><1|
///   A_{1+i} = sqrt(eta3 zeta_i)|z_i><1|
/// with |z_i> the canonical basis vectors 2..r+1. The identity block of A0
/// on the leak sector is the canonical completion: it makes the Kraus set
/// trace preserving on the whole carrier and matches the dilation below,
/// which acts as the identity outside span{|01>,|10>,|Phi_sigma>}. On
/// qubit-block inputs the action is unchanged.
KrausChannel t_channel(const ChannelParamsT& params);

/// rho -> sum_k A_k rho A_k^dagger.
DensityMatrix apply(const KrausChannel& channel, const DensityMatrix& rho);

/// (channel otimes 1_anc) applied to a joint state with the system factor
/// first; joint.dim() must equal channel.in_dim() * anc_dim.
DensityMatrix apply_extended(const KrausChannel& channel,
                             const DensityMatrix& joint, int anc_dim);

/// Kraus set {B_j A_k} of outer after inner.
KrausChannel compose(const KrausChannel& outer, const KrausChannel& inner);

/// Complementary channel rho -> sum_{k,l} Tr(A_l^dagger A_k rho) |k><l|,
/// mapping into a K-dimensional environment whose basis vector |k> is tied
/// to the k-th Kraus operator. For the channels built above this indexing
/// makes the system/environment swap of the degradability identities the
/// plain identification of computational bases.
KrausChannel complementary(const KrausChannel& channel);

/// Unitary matrix, validated to 1e-10 in Frobenius norm.
struct DilationUnitary {
  Mat u;

  explicit DilationUnitary(Mat u_);
  int dim() const { return u.rows(); }
};

/// Stinespring dilation of D_eta: 4x4 unitary on system otimes environment
/// (each a qubit, environment starting in |0>), rotating by angle
/// arccos(sqrt(eta)) inside span{|01>,|10>}.
DilationUnitary dilation_ad(const ChannelParamsAD& params);

/// Stinespring dilation of T_{eta1,eta2} for rank-1 zeta: a 9x9 unitary on
/// the 3x3 carrier pair, acting as a fixed 3x3 block on
/// {|01>, |10>, |Phi_sigma>} and as the identity elsewhere. Throws for
/// rank > 1 (no dilation in closed form is implemented for that case).
DilationUnitary dilation_t(const ChannelParamsT& params);

/// Tr over the environment (Keep::First) or the system (Keep::Second) of
/// V (rho otimes |0><0|_env) V^dagger, with dim(V) = rho.dim() * env_dim.
DensityMatrix apply_dilation(const DilationUnitary& v, const DensityMatrix& rho,
                             int env_dim, Keep keep);

struct DegradabilityReport {
  bool is_degradable = false;
  double max_deviation = 0.0;
};

/// Checks the degrading identity on 20 reproducible pseudo-random qubit
/// inputs: for D_eta with eta >= 1/2, complementary(D_eta) must equal
/// D_{(1-eta)/eta} after D_eta; for T with eta1 >= eta2 (rank-1 zeta),
/// complementary(T) must equal the block damping D_{eta2/eta1} after T.
/// Outside those parameter regions the would-be degrading map is not CPT
/// and the report says not degradable without a numeric check.
DegradabilityReport degradability_check(const ChannelParamsAD& params);
DegradabilityReport degradability_check(const ChannelParamsT& params);

}  // namespace spinchan

// Copyright 2026 the spinchan authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "spinchan/channel.hpp"
#include "spinchan/density.hpp"
#include "spinchan/linalg.hpp"

namespace spinchan {

/// Open chain of n spin-1/2 sites with nearest-neighbor XX(Z) couplings
///   H = -sum_i J_i (sx_i sx_{i+1} + sy_i sy_{i+1} + gamma_z sz_i sz_{i+1})
///       - sum_i B_i sz_i
/// (hbar = 1; sz|up> = +|up>). The sender register A is sites 1..k, the
/// receiver register B is sites n-k+1..n.
struct ChainSpec {
  int n = 2;
  int k = 1;
  double gamma_z = 0.0;
  std::vector<double> couplings;  // J_{i,i+1}, i = 1..n-1
  std::vector<double> fields;     // B_i, i = 1..n

  ChainSpec(int n_, int k_, double gamma_z_, std::vector<double> couplings_,
            std::vector<double> fields_);

  static ChainSpec uniform(int n, int k, double j, double b = 0.0,
                           double gamma_z = 0.0);

  /// Largest coupling; the natural inverse time unit of the chain.
  double j_ref() const;
};

/// Parses the JSON document
///   {"n": int, "k": int, "gamma_z": float,
///    "couplings": {"uniform": J} | {"list": [J_12, J_23, ...]},
///    "fields":    {"uniform": B} | {"list": [B_1, ..., B_n]}}
/// All five keys are required; unknown keys are rejected.
ChainSpec chain_spec_from_json(const std::string& text);

/// The Hamiltonian restricted to the subspace with exactly `sector` (1 or 2)
/// spins up; total magnetization is conserved, so the restriction is exact.
/// The all-down energy is subtracted, making the vacuum amplitude of an
/// encoded state phase-free. Sector-1 basis: site index j = 1..n. Sector-2
/// basis: pairs (j, l) with j > l, ordered (2,1), (3,1), (3,2), (4,1), ...
struct SectorHamiltonian {
  int sector = 1;
  int dim = 0;
  Mat matrix;                                 // real symmetric
  std::vector<std::pair<int, int>> pair_basis;  // sector 2 only, 1-based sites
};

SectorHamiltonian build_sector_hamiltonian(const ChainSpec& spec, int sector);

/// Matrix of transition amplitudes <r| exp(-i H t) |s> on a sector basis.
/// Unitary for every t.
struct TransferAmplitudes {
  int sector = 1;
  double time = 0.0;
  Mat matrix;
};

/// Diagonalizes a sector Hamiltonian once and evaluates exp(-i H t) at any
/// number of times.
class SectorPropagator {
 public:
  explicit SectorPropagator(const SectorHamiltonian& h);

  int sector() const { return sector_; }
  int dim() const { return static_cast<int>(es_.values.size()); }
  TransferAmplitudes at(double t) const;
  std::vector<cxd> propagate(const std::vector<cxd>& psi0, double t) const;

 private:
  int sector_;
  EigenSystem es_;
};

TransferAmplitudes transfer_amplitudes(const SectorHamiltonian& h, double t);

/// Normalized coefficients of the encoded excitation component: c_j over the
/// k sites of A (sector 1), or d_{j,l} over the k(k-1)/2 pairs of A in the
/// sector-2 pair order.
struct InputProfile {
  int sector = 1;
  std::vector<cxd> coefficients;

  InputProfile(int sector_, std::vector<cxd> coefficients_);

  /// Equal-weight profile over the register, 1/sqrt(#basis states of A).
  static InputProfile uniform(const ChainSpec& spec, int sector);
};

/// One-excitation reduction: the effective channel A -> B is amplitude
/// damping with efficiency eta = sum_{j in B} |amplitude_j(t)|^2.
struct OneExcitationReduction {
  ChannelParamsAD params{1.0};
  /// Coefficients of the arrived excitation on B (k entries, normalized);
  /// empty when eta vanishes.
  std::vector<cxd> output_profile;
};

OneExcitationReduction channel_params_one_excitation(const ChainSpec& spec,
                                                     const InputProfile& input,
                                                     double t);

/// Two-excitation reduction: the effective channel is T_{eta1,eta2} with a
/// leak state sigma_B on the one-up states of B.
struct TwoExcitationReduction {
  ChannelParamsT params{1.0, 0.0};
  double eta1 = 0.0;  // both excitations in B
  double eta2 = 0.0;  // both outside B
  double eta3 = 0.0;  // split (summed directly, not via 1 - eta1 - eta2)
  std::vector<cxd> evolved;         // d_{j,l}(t) over the whole sector basis
  std::vector<cxd> output_profile;  // |phi_2'> on B pairs, normalized; empty if eta1 = 0
  Mat sigma_b;                      // k x k on one-up-in-B sites; zero if eta3 = 0
  EigenSystem sigma_eigensystem;    // eigensystem of sigma_b (empty if eta3 = 0)
};

TwoExcitationReduction channel_params_two_excitation(const ChainSpec& spec,
                                                     const InputProfile& input,
                                                     double t);

/// State of register B after transmitting alpha|0_L> + beta|1_L> through the
/// two-excitation encoding, written in the basis
/// {|all-down>_B, |phi_2'>_B, zeta eigenvectors of sigma_B}. Equals the
/// extracted T channel applied to the logical input state.
DensityMatrix reduced_state_two_excitation(const ChainSpec& spec,
                                           const InputProfile& input, double t,
                                           cxd alpha, cxd beta);

struct TimeScanResult {
  double t_star = 0.0;
  double eta_star = 0.0;
};

/// Scans the transfer efficiency (eta in sector 1, eta1 in sector 2) on a
/// uniform grid over [0, t_max] and refines the best point by golden
/// section. Deterministic.
TimeScanResult eta_max_over_time(const ChainSpec& spec,
                                 const InputProfile& input, double t_max,
                                 int steps);

}  // namespace spinchan

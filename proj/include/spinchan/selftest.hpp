// Copyright 2026 the spinchan authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "spinchan/chain.hpp"
#include "spinchan/channel.hpp"
#include "spinchan/density.hpp"

namespace spinchan {

// ---------------------------------------------------------------------------
// Oracles: alternative computation routes used to cross-check the closed
// forms. They deliberately avoid the code paths they validate.
// ---------------------------------------------------------------------------

/// Coherent information S(M(rho)) - S((M otimes 1)(Phi)) evaluated through
/// the density-matrix machinery (purification, extended channel action,
/// spectral entropy) rather than through any closed form.
double oracle_coherent_information(const KrausChannel& channel,
                                   const DensityMatrix& rho);

/// Full 2^n Hamiltonian of the chain, built from Pauli terms on the whole
/// Hilbert space (site i maps to bit i-1; bit set means spin up). Vacuum
/// energy not subtracted.
Mat full_chain_hamiltonian(const ChainSpec& spec);

/// Restriction of a full-space operator to the fixed-magnetization sector
/// with `sector` spins up, with the all-down diagonal energy subtracted.
/// Basis ordering matches build_sector_hamiltonian.
Mat project_full_to_sector(const Mat& full, int n, int sector);

/// Evolves the encoded state alpha|vacuum> + beta|code word> through the
/// full 2^n Hamiltonian and traces out everything but register B. The
/// heavyweight cross-check for the sector reductions (n <= ~10).
DensityMatrix full_state_reduced_b(const ChainSpec& spec,
                                   const InputProfile& input, double t,
                                   cxd alpha, cxd beta);

/// Isometry from the abstract two-excitation output basis
/// {vacuum, phi_2', zeta eigenvectors} into the 2^k space of register B.
Mat b_space_embedding(const TwoExcitationReduction& red, int k);

// ---------------------------------------------------------------------------
// Property suite
// ---------------------------------------------------------------------------

/// One verifiable property: `run` returns the worst observed deviation,
/// which must not exceed `tolerance`.
struct PropertyCheck {
  std::string name;
  double tolerance;
  std::function<double()> run;
};

/// Every module's invariant suite, in a fixed order.
std::vector<PropertyCheck> all_property_checks();

struct VerifyOutcome {
  bool all_passed = false;
  std::string report;
};

/// Runs all property checks and renders a line-per-check report. With
/// `corrupt_tolerances` every tolerance is replaced by an unsatisfiable one;
/// this exists so the failure path (nonzero exit) is itself testable.
VerifyOutcome run_verification(bool corrupt_tolerances = false);

}  // namespace spinchan

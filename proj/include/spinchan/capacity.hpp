// Copyright 2026 the spinchan authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <functional>
#include <utility>
#include <vector>

namespace spinchan {

/// Result of a 1-D capacity maximization: the capacity in bits per channel
/// use, the population achieving it, and how many integrand evaluations the
/// maximizer spent.
struct CapacityResult {
  double value = 0.0;
  double argmax_p = 0.0;
  long evaluations = 0;
};

struct MaximizeResult {
  double argmax = 0.0;
  double value = 0.0;
  long evaluations = 0;
};

/// Deterministic maximization of f over [0,1]: a 2001-point scan followed by
/// golden-section refinement of the winning bracket until its width is at
/// most `tol`. Returns the best point evaluated anywhere (scan included);
/// scan ties keep the earliest point.
MaximizeResult maximize_unit_interval(const std::function<double(double)>& f,
                                      double tol = 1e-10);

/// One symbol of a classical-over-quantum ensemble: used with probability
/// `weight`, carrying the qubit state (p, gamma).
struct EncodingSymbol {
  double weight;
  double p;
  std::complex<double> gamma;
};

/// The d-phase encoding at population p: d equiprobable symbols with maximal
/// coherence |gamma_k|^2 = p(1-p) and phases 2*pi*k/d, k = 1..d. The phases
/// average to zero coherence, which is what makes the ensemble optimal.
struct EncodingProfile {
  int d;
  double p;
  std::vector<EncodingSymbol> symbols;
};

EncodingProfile phase_encoding(int d, double p);

/// Coherent information of D_eta at input (p, |gamma|^2), in closed form:
/// H2(lambda_+(eta)) - H2(lambda_+(1-eta)) with
/// lambda_+(x) = (1 + sqrt((1-2xp)^2 + 4x|gamma|^2))/2.
double coherent_information_ad(double eta, double p, double gamma_sq);

/// Coherent information of T_{eta1,eta2} at input (p, |gamma|^2):
/// (1 - eta3 p) [H2(mu(eta1)) - H2(mu(eta2))] where mu(e) is the rescaled
/// top eigenvalue of the qubit block of the direct (eta1) or
/// complementary (eta2) output. Independent of the zeta spectrum.
double coherent_information_t(double eta1, double eta2, double p,
                              double gamma_sq);

/// Quantum capacity of D_eta. For eta >= 1/2, max_p H2(eta p) - H2((1-eta)p);
/// for eta < 1/2 identically zero (no-cloning), returned without running the
/// maximizer.
CapacityResult quantum_capacity_ad(double eta);

/// Entanglement-assisted classical capacity of D_eta:
/// max_p H2(p) + H2(eta p) - H2((1-eta)p). The entanglement-assisted quantum
/// capacity is value/2 (teleportation/superdense coding), not separately
/// optimized.
CapacityResult ea_capacity_ad(double eta);

/// Holevo information of an ensemble through D_eta, evaluated in closed form
/// from the ensemble averages.
double holevo_chi_ad(double eta, const std::vector<EncodingSymbol>& ensemble);

/// Classical capacity of D_eta over product encodings:
/// max_p H2(eta p) - H2((1 + sqrt(1 - 4 eta(1-eta) p^2))/2). The returned
/// maximum is certified achievable against the phase encodings d = 2..5 at
/// the argmax (throws std::logic_error if the certification fails, which
/// would indicate a numerical defect).
CapacityResult classical_capacity_c1_ad(double eta);

/// Quantum capacity of T_{eta1,eta2}: zero for eta1 <= eta2, otherwise the
/// maximization of the (1 - eta3 p)-weighted H2 difference.
CapacityResult quantum_capacity_t(double eta1, double eta2);

/// Entanglement-assisted classical capacity of T_{eta1,eta2}.
CapacityResult ea_capacity_t(double eta1, double eta2);

/// Lower bound on the product-encoding classical capacity of T_{eta1,eta2},
/// achieved by the phase encodings.
CapacityResult classical_capacity_c1_lower_t(double eta1, double eta2);

/// Entanglement-assisted capacity of the lossy bosonic channel at
/// transmissivity eta and mean photon number p:
/// g(p) + g(eta p) - g((1-eta)p).
double bosonic_ea_capacity(double eta, double p);

/// The unassisted classical capacity is only known to lie in an interval:
/// [C_1, min(1, C_E)]. Returned as (lower, upper).
std::pair<double, double> classical_capacity_interval_ad(double eta);

}  // namespace spinchan

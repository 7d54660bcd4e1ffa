// Copyright 2026 the spinchan authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "spinchan/channel.hpp"
#include "spinchan/density.hpp"
#include "spinchan/entropy.hpp"
#include "spinchan/rng.hpp"

using namespace spinchan;

namespace {

double lambda_plus(double x, double p, double g2) {
  const double d = 1.0 - 2.0 * x * p;
  return 0.5 * (1.0 + std::sqrt(d * d + 4.0 * x * g2));
}

DensityMatrix random_qubit(LcgStream& rng) {
  const double p = rng.uniform();
  const double mag = std::sqrt(p * (1.0 - p)) * rng.uniform();
  const double phi = rng.uniform(0.0, 6.283185307179586477);
  return make_qubit_state({p, {mag * std::cos(phi), mag * std::sin(phi)}});
}

// Purification with the explicit ancilla pair <R0|R1> = gamma / sqrt((1-p)p):
// |Phi> = sqrt(1-p)|00> + gamma/sqrt(1-p) |10> + sqrt(((1-p)p-|g|^2)/(1-p)) |11>.
DensityMatrix reference_purification(double p, cxd gamma) {
  std::vector<cxd> phi(4);
  phi[0] = std::sqrt(1.0 - p);
  phi[2] = gamma / std::sqrt(1.0 - p);
  phi[3] = std::sqrt(((1.0 - p) * p - std::norm(gamma)) / (1.0 - p));
  Mat m(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = phi[i] * std::conj(phi[j]);
  return DensityMatrix(std::move(m));
}

// The joint output of the damping channel on that purification, written out
// entry by entry.
Mat reference_joint_output(double eta, double p, cxd gamma) {
  const double g2 = std::norm(gamma);
  const double q = 1.0 - p;
  const double root = std::sqrt(q * p - g2);
  Mat m(4, 4);
  m(0, 0) = q + (1.0 - eta) * g2 / q;
  m(0, 1) = (1.0 - eta) * gamma * root / q;
  m(0, 2) = std::sqrt(eta) * std::conj(gamma);
  m(0, 3) = std::sqrt(eta) * root;
  m(1, 1) = (1.0 - eta) * (p - g2 / q);
  m(2, 2) = eta * g2 / q;
  m(2, 3) = eta * gamma * root / q;
  m(3, 3) = eta * (p - g2 / q);
  m(1, 0) = std::conj(m(0, 1));
  m(2, 0) = std::conj(m(0, 2));
  m(3, 0) = std::conj(m(0, 3));
  m(3, 2) = std::conj(m(2, 3));
  return m;
}

}  // namespace

TEST_CASE("qubit state construction") {
  const DensityMatrix ground = make_qubit_state({0.0, 0.0});
  CHECK(ground(0, 0) == cxd{1.0});
  CHECK(ground(1, 1) == cxd{0.0});

  const DensityMatrix excited = make_qubit_state({1.0, 0.0});
  CHECK(excited(1, 1) == cxd{1.0});

  // Maximal coherence at p = 1/2 is the pure |+> state.
  const DensityMatrix plus = make_qubit_state({0.5, 0.5});
  const Mat sq = plus.matrix() * plus.matrix();
  CHECK(std::real(sq.trace()) == doctest::Approx(1.0).epsilon(1e-14));

  CHECK_THROWS_AS(make_qubit_state({0.5, 0.6}), std::domain_error);
  CHECK_THROWS_AS(make_qubit_state({1.2, 0.0}), std::domain_error);
}

TEST_CASE("density matrix invariants are enforced") {
  Mat bad_trace = Mat::identity(2);
  CHECK_THROWS_AS(DensityMatrix{bad_trace}, std::invalid_argument);

  Mat not_psd(2, 2);
  not_psd(0, 0) = 1.5;
  not_psd(1, 1) = -0.5;
  CHECK_THROWS_AS(DensityMatrix{not_psd}, std::invalid_argument);

  Mat not_herm(2, 2);
  not_herm(0, 0) = 0.5;
  not_herm(1, 1) = 0.5;
  not_herm(0, 1) = 0.1;
  CHECK_THROWS_AS(DensityMatrix{not_herm}, std::invalid_argument);
}

TEST_CASE("amplitude damping limits") {
  LcgStream rng(101);
  const DensityMatrix rho = random_qubit(rng);

  const DensityMatrix same = apply(amplitude_damping(ChannelParamsAD(1.0)), rho);
  CHECK(frobenius_distance(same.matrix(), rho.matrix()) <= 1e-15);

  const DensityMatrix dead = apply(amplitude_damping(ChannelParamsAD(0.0)), rho);
  CHECK(std::abs(dead(0, 0) - cxd{1.0}) <= 1e-15);

  CHECK_THROWS_AS(ChannelParamsAD(1.5), std::domain_error);
}

TEST_CASE("damping acts as (p, gamma) -> (eta p, sqrt(eta) gamma)") {
  const double eta = 0.36;
  const DensityMatrix out =
      apply(amplitude_damping(ChannelParamsAD(eta)), make_qubit_state({1.0, 0.0}));
  CHECK(std::real(out(1, 1)) == doctest::Approx(0.36).epsilon(1e-15));
  CHECK(std::abs(out(1, 0)) == 0.0);

  LcgStream rng(102);
  for (int i = 0; i < 10; ++i) {
    const double p = rng.uniform();
    const double mag = std::sqrt(p * (1.0 - p)) * rng.uniform();
    const cxd gamma{mag * 0.6, mag * 0.8};
    const double e = rng.uniform();
    const DensityMatrix mapped =
        apply(amplitude_damping(ChannelParamsAD(e)), make_qubit_state({p, gamma}));
    CHECK(std::abs(mapped(0, 0) - cxd{1.0 - e * p}) <= 1e-14);
    CHECK(std::abs(mapped(1, 1) - cxd{e * p}) <= 1e-14);
    CHECK(std::abs(mapped(1, 0) - std::sqrt(e) * gamma) <= 1e-14);
  }
}

TEST_CASE("T channel construction and qubit-block action") {
  // Rank-1 T with eta1 + eta2 = 1 is amplitude damping on the qubit block.
  const ChannelParamsT plain{0.7, 0.3, {1.0}};
  LcgStream rng(103);
  const DensityMatrix rho = random_qubit(rng);
  const DensityMatrix via_t = apply(t_channel(plain), embed(rho, 3));
  const DensityMatrix via_ad = apply(amplitude_damping(ChannelParamsAD(0.7)), rho);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      CHECK(std::abs(via_t(i, j) - via_ad(i, j)) <= 1e-14);
  CHECK(std::abs(via_t(2, 2)) <= 1e-15);

  // eta1 = 1: identity on the qubit block.
  const DensityMatrix kept = apply(t_channel({1.0, 0.0, {1.0}}), embed(rho, 3));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(std::abs(kept(i, j) - rho(i, j)) <= 1e-15);

  // Trace preservation holds for a rank-2 spectrum (checked by the ctor, and
  // explicitly here).
  const KrausChannel tc = t_channel({0.5, 0.2, {0.6, 0.4}});
  Mat s(4, 4);
  for (const Mat& a : tc.operators()) s += a.adjoint() * a;
  CHECK(frobenius_distance(s, Mat::identity(4)) <= 1e-12);

  CHECK_THROWS_AS(ChannelParamsT(0.7, 0.4), std::domain_error);
  CHECK_THROWS_AS(ChannelParamsT(0.5, 0.2, {0.5, 0.4}), std::domain_error);
}

TEST_CASE("T channel output structure on a qubit input") {
  const double eta1 = 0.5, eta2 = 0.2;
  const std::vector<double> zeta{0.6, 0.4};
  const double eta3 = 1.0 - eta1 - eta2;
  LcgStream rng(104);
  const double p = 0.55;
  const cxd gamma{0.2, 0.3};
  const DensityMatrix out =
      apply(t_channel({eta1, eta2, zeta}), embed(make_qubit_state({p, gamma}), 4));

  CHECK(std::abs(out(0, 0) - cxd{1.0 - (1.0 - eta2) * p}) <= 1e-14);
  CHECK(std::abs(out(1, 1) - cxd{eta1 * p}) <= 1e-14);
  CHECK(std::abs(out(1, 0) - std::sqrt(eta1) * gamma) <= 1e-14);
  for (int i = 0; i < 2; ++i)
    CHECK(std::abs(out(2 + i, 2 + i) - cxd{eta3 * p * zeta[i]}) <= 1e-14);
  // No coherence into the leak sector.
  CHECK(std::abs(out(0, 2)) == 0.0);
  CHECK(std::abs(out(1, 3)) == 0.0);
}

TEST_CASE("apply rejects mismatched dimensions") {
  const KrausChannel tc = t_channel({0.5, 0.2, {1.0}});
  CHECK_THROWS_AS(apply(tc, make_qubit_state({0.3, 0.0})), std::invalid_argument);
}

TEST_CASE("partial trace") {
  LcgStream rng(105);
  const DensityMatrix a = random_density_matrix(2, rng);
  const DensityMatrix b = random_density_matrix(3, rng);
  const DensityMatrix ab = DensityMatrix(Mat::kron(a.matrix(), b.matrix()));
  CHECK(frobenius_distance(partial_trace(ab, 2, 3, Keep::First).matrix(),
                           a.matrix()) <= 1e-14);
  CHECK(frobenius_distance(partial_trace(ab, 2, 3, Keep::Second).matrix(),
                           b.matrix()) <= 1e-14);

  // Maximally entangled pair reduces to maximally mixed on either side.
  Mat bell(4, 4);
  for (int i : {0, 3})
    for (int j : {0, 3}) bell(i, j) = 0.5;
  const DensityMatrix pair{std::move(bell)};
  for (Keep keep : {Keep::First, Keep::Second}) {
    const DensityMatrix red = partial_trace(pair, 2, 2, keep);
    CHECK(std::abs(red(0, 0) - cxd{0.5}) <= 1e-15);
    CHECK(std::abs(red(0, 1)) <= 1e-15);
  }

  // Random 6-dimensional joint: the reduction is a valid 3x3 state (the
  // constructor enforces Hermiticity, trace and positivity).
  const DensityMatrix joint = random_density_matrix(6, rng);
  const DensityMatrix red = partial_trace(joint, 2, 3, Keep::Second);
  CHECK(red.dim() == 3);
}

TEST_CASE("purification") {
  LcgStream rng(106);

  // Pure input: ancilla stays in a fixed pure state.
  const DensityMatrix pure = make_qubit_state({0.5, 0.5});
  const DensityMatrix joint = purify(pure);
  const DensityMatrix anc = partial_trace(joint, 2, 2, Keep::Second);
  const Mat anc_sq = anc.matrix() * anc.matrix();
  CHECK(std::real(anc_sq.trace()) == doctest::Approx(1.0).epsilon(1e-12));

  // Maximally mixed input purifies to a maximally entangled state.
  Mat half = Mat::identity(2);
  half *= cxd{0.5};
  const DensityMatrix mixed{std::move(half)};
  const DensityMatrix bell = purify(mixed);
  CHECK(von_neumann_entropy(partial_trace(bell, 2, 2, Keep::First)) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(von_neumann_entropy(bell) == doctest::Approx(0.0).epsilon(1e-10));

  // Round trip for mixed inputs.
  const DensityMatrix rho = make_qubit_state({0.3, 0.1});
  CHECK(frobenius_distance(partial_trace(purify(rho), 2, 2, Keep::First).matrix(),
                           rho.matrix()) <= 1e-12);
  for (int dim : {2, 3, 4})
    for (int i = 0; i < 5; ++i) {
      const DensityMatrix r = random_density_matrix(dim, rng);
      CHECK(frobenius_distance(
                partial_trace(purify(r), dim, dim, Keep::First).matrix(),
                r.matrix()) <= 1e-10);
    }
}

TEST_CASE("von Neumann entropy") {
  CHECK(von_neumann_entropy(make_qubit_state({0.0, 0.0})) == 0.0);

  Mat half = Mat::identity(2);
  half *= cxd{0.5};
  CHECK(von_neumann_entropy(DensityMatrix(std::move(half))) ==
        doctest::Approx(1.0).epsilon(1e-14));

  // Damped-state entropy equals H2 of the top eigenvalue.
  LcgStream rng(107);
  for (int i = 0; i < 10; ++i) {
    const double p = rng.uniform();
    const double mag = std::sqrt(p * (1.0 - p)) * rng.uniform();
    const double eta = rng.uniform();
    const DensityMatrix out = apply(amplitude_damping(ChannelParamsAD(eta)),
                                    make_qubit_state({p, cxd{mag, 0.0}}));
    CHECK(von_neumann_entropy(out) ==
          doctest::Approx(binary_entropy(lambda_plus(eta, p, mag * mag)))
              .epsilon(1e-12));
  }
}

TEST_CASE("extended channel action matches the reference 4x4 output") {
  LcgStream rng(108);
  for (int i = 0; i < 10; ++i) {
    const double p = rng.uniform(0.05, 0.95);
    const double mag = std::sqrt(p * (1.0 - p)) * rng.uniform() * 0.98;
    const double phi = rng.uniform(0.0, 6.283185307179586477);
    const cxd gamma{mag * std::cos(phi), mag * std::sin(phi)};
    const double eta = rng.uniform();

    const DensityMatrix joint = reference_purification(p, gamma);
    CHECK(frobenius_distance(
              partial_trace(joint, 2, 2, Keep::First).matrix(),
              make_qubit_state({p, gamma}).matrix()) <= 1e-13);

    const DensityMatrix out =
        apply_extended(amplitude_damping(ChannelParamsAD(eta)), joint, 2);
    CHECK(frobenius_distance(out.matrix(), reference_joint_output(eta, p, gamma)) <=
          1e-12);

    // Spectrum {lambda+(1-eta), lambda-(1-eta), 0, 0}.
    const EigenSystem es = hermitian_eigensystem(out.matrix());
    const double lp = lambda_plus(1.0 - eta, p, mag * mag);
    CHECK(es.values[0] == doctest::Approx(lp).epsilon(1e-12));
    CHECK(es.values[1] == doctest::Approx(1.0 - lp).epsilon(1e-12));
    CHECK(std::abs(es.values[2]) <= 1e-12);
    CHECK(std::abs(es.values[3]) <= 1e-12);
  }

  // Identity channel leaves any joint state alone.
  const DensityMatrix some = reference_purification(0.4, cxd{0.1, 0.2});
  CHECK(frobenius_distance(
            apply_extended(KrausChannel::identity(2), some, 2).matrix(),
            some.matrix()) <= 1e-15);

  // Half-transmissive channel on the maximally entangled state.
  Mat bell(4, 4);
  for (int i : {0, 3})
    for (int j : {0, 3}) bell(i, j) = 0.5;
  const EigenSystem es = hermitian_eigensystem(
      apply_extended(amplitude_damping(ChannelParamsAD(0.5)), DensityMatrix(bell), 2)
          .matrix());
  const double lp = lambda_plus(0.5, 0.5, 0.0);
  CHECK(es.values[0] == doctest::Approx(lp).epsilon(1e-12));
  CHECK(es.values[1] == doctest::Approx(1.0 - lp).epsilon(1e-12));
  CHECK(std::abs(es.values[2]) <= 1e-12);
  CHECK(std::abs(es.values[3]) <= 1e-12);
}

TEST_CASE("dilation of the damping channel") {
  // eta = 1: no rotation.
  CHECK(frobenius_distance(dilation_ad(ChannelParamsAD(1.0)).u, Mat::identity(4)) ==
        0.0);

  // eta = 1/2: the middle block is the 45-degree rotation.
  const Mat v = dilation_ad(ChannelParamsAD(0.5)).u;
  const double r = std::sqrt(0.5);
  CHECK(std::abs(v(1, 1) - cxd{r}) <= 1e-15);
  CHECK(std::abs(v(1, 2) - cxd{r}) <= 1e-15);
  CHECK(std::abs(v(2, 1) + cxd{r}) <= 1e-15);
  CHECK(std::abs(v(2, 2) - cxd{r}) <= 1e-15);

  LcgStream rng(109);
  for (int i = 0; i <= 10; ++i) {
    const ChannelParamsAD params(i / 10.0);
    const DilationUnitary d = dilation_ad(params);
    CHECK(frobenius_distance(d.u.adjoint() * d.u, Mat::identity(4)) <= 1e-14);

    const DensityMatrix rho = random_qubit(rng);
    CHECK(frobenius_distance(
              apply_dilation(d, rho, 2, Keep::First).matrix(),
              apply(amplitude_damping(params), rho).matrix()) <= 1e-12);
  }
}

TEST_CASE("dilation of the T channel (rank 1)") {
  // eta1 = 1 collapses to the identity.
  CHECK(frobenius_distance(dilation_t({1.0, 0.0, {1.0}}).u, Mat::identity(9)) <=
        1e-15);

  // eta3 = 0 collapses to the damping dilation on the qubit pair block.
  const Mat v = dilation_t({0.6, 0.4, {1.0}}).u;
  const double c = std::sqrt(0.6), s = std::sqrt(0.4);
  CHECK(std::abs(v(1, 1) - cxd{c}) <= 1e-14);
  CHECK(std::abs(v(1, 3) - cxd{s}) <= 1e-14);
  CHECK(std::abs(v(3, 1) + cxd{s}) <= 1e-14);
  CHECK(std::abs(v(3, 3) - cxd{c}) <= 1e-14);
  CHECK(std::abs(v(8, 8) - cxd{1.0}) <= 1e-14);

  LcgStream rng(110);
  for (int i = 0; i < 10; ++i) {
    const double e1 = rng.uniform();
    const double e2 = rng.uniform() * (1.0 - e1);
    const ChannelParamsT params{e1, e2, {1.0}};
    const DilationUnitary d = dilation_t(params);  // ctor checks unitarity to 1e-10
    CHECK(frobenius_distance(d.u.adjoint() * d.u, Mat::identity(9)) <= 1e-12);

    const DensityMatrix rho = random_density_matrix(3, rng);
    CHECK(frobenius_distance(
              apply_dilation(d, rho, 3, Keep::First).matrix(),
              apply(t_channel(params), rho).matrix()) <= 1e-10);
  }

  CHECK_THROWS_AS(dilation_t({0.5, 0.2, {0.6, 0.4}}), std::invalid_argument);
}

TEST_CASE("complementary channels") {
  // Identity channel: the environment learns nothing (1-dim output).
  const KrausChannel comp_id = complementary(KrausChannel::identity(2));
  CHECK(comp_id.out_dim() == 1);
  LcgStream rng(111);
  const DensityMatrix any = random_qubit(rng);
  CHECK(std::abs(apply(comp_id, any)(0, 0) - cxd{1.0}) <= 1e-14);

  // Damping: environment sees the reflected damping channel.
  for (int i = 0; i <= 10; ++i) {
    const double eta = i / 10.0;
    const DensityMatrix rho = random_qubit(rng);
    CHECK(frobenius_distance(
              apply(complementary(amplitude_damping(ChannelParamsAD(eta))), rho)
                  .matrix(),
              apply(amplitude_damping(ChannelParamsAD(1.0 - eta)), rho).matrix()) <=
          1e-12);
  }

  // T with eta1 >= eta2: environment sees the damped direct output.
  for (int i = 0; i < 10; ++i) {
    double e1 = rng.uniform();
    double e2 = rng.uniform() * (1.0 - e1);
    if (e1 < e2) std::swap(e1, e2);
    if (e1 == 0.0) continue;
    const ChannelParamsT params{e1, e2, {1.0}};
    const KrausChannel tc = t_channel(params);
    const DensityMatrix rho = embed(random_qubit(rng), 3);
    CHECK(frobenius_distance(
              apply(complementary(tc), rho).matrix(),
              apply(amplitude_damping_on_block(e2 / e1, 3), apply(tc, rho)).matrix()) <=
          1e-10);
  }
}

TEST_CASE("composition rules") {
  LcgStream rng(112);

  // Damping composes multiplicatively.
  for (int i = 0; i < 20; ++i) {
    const double ea = rng.uniform(), eb = rng.uniform();
    const DensityMatrix rho = random_qubit(rng);
    const DensityMatrix lhs =
        apply(compose(amplitude_damping(ChannelParamsAD(eb)),
                      amplitude_damping(ChannelParamsAD(ea))),
              rho);
    const DensityMatrix rhs = apply(amplitude_damping(ChannelParamsAD(ea * eb)), rho);
    CHECK(frobenius_distance(lhs.matrix(), rhs.matrix()) <= 1e-14);
  }

  // T composes with eta1'' = eta1 eta1', eta2'' = eta2 + eta1 eta2'.
  for (int i = 0; i < 20; ++i) {
    const double a1 = rng.uniform(), a2 = rng.uniform() * (1.0 - a1);
    const double b1 = rng.uniform(), b2 = rng.uniform() * (1.0 - b1);
    const ChannelParamsT ta{a1, a2, {1.0}};
    const ChannelParamsT tb{b1, b2, {1.0}};
    const double c1 = a1 * b1;
    const ChannelParamsT tc{c1, std::min(a2 + a1 * b2, 1.0 - c1), {1.0}};
    const DensityMatrix rho = random_density_matrix(3, rng);
    const DensityMatrix lhs = apply(compose(t_channel(tb), t_channel(ta)), rho);
    const DensityMatrix rhs = apply(t_channel(tc), rho);
    CHECK(frobenius_distance(lhs.matrix(), rhs.matrix()) <= 1e-13);
  }

  // Mixed leak spectra: the composite leak state is the weighted mixture.
  {
    const ChannelParamsT ta{0.6, 0.1, {0.7, 0.3}};
    const ChannelParamsT tb{0.5, 0.3, {0.2, 0.8}};
    const double c1 = ta.eta1 * tb.eta1;
    const double c2 = ta.eta2 + ta.eta1 * tb.eta2;
    const double c3 = 1.0 - c1 - c2;
    std::vector<double> zeta(2);
    for (int i = 0; i < 2; ++i)
      zeta[i] = (ta.eta3() * ta.zeta[i] + ta.eta1 * tb.eta3() * tb.zeta[i]) / c3;
    const DensityMatrix rho = random_density_matrix(4, rng);
    const DensityMatrix lhs = apply(compose(t_channel(tb), t_channel(ta)), rho);
    const DensityMatrix rhs = apply(t_channel({c1, c2, zeta}), rho);
    CHECK(frobenius_distance(lhs.matrix(), rhs.matrix()) <= 1e-13);
  }

  // Identity is neutral.
  const KrausChannel ad = amplitude_damping(ChannelParamsAD(0.37));
  const DensityMatrix rho = random_qubit(rng);
  CHECK(frobenius_distance(
            apply(compose(KrausChannel::identity(2), ad), rho).matrix(),
            apply(ad, rho).matrix()) <= 1e-15);

  CHECK_THROWS_AS(compose(ad, t_channel({0.5, 0.2, {1.0}})), std::invalid_argument);
}

TEST_CASE("degradability report") {
  const DegradabilityReport strong = degradability_check(ChannelParamsAD(0.75));
  CHECK(strong.is_degradable);
  CHECK(strong.max_deviation <= 1e-9);

  const DegradabilityReport border = degradability_check(ChannelParamsAD(0.5));
  CHECK(border.is_degradable);

  const DegradabilityReport weak = degradability_check(ChannelParamsAD(0.3));
  CHECK_FALSE(weak.is_degradable);
  CHECK(weak.max_deviation == 0.0);  // no numeric check run

  const DegradabilityReport t_good = degradability_check(ChannelParamsT{0.6, 0.3, {1.0}});
  CHECK(t_good.is_degradable);
  CHECK(t_good.max_deviation <= 1e-9);

  const DegradabilityReport t_bad = degradability_check(ChannelParamsT{0.3, 0.6, {1.0}});
  CHECK_FALSE(t_bad.is_degradable);
}

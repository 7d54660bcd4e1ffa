// Copyright 2026 the spinchan authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "spinchan/chain.hpp"
#include "spinchan/rng.hpp"
#include "spinchan/selftest.hpp"

using namespace spinchan;

TEST_CASE("chain spec validation") {
  CHECK_THROWS_AS(ChainSpec::uniform(2, 2, 1.0), std::domain_error);  // 2k > n
  CHECK_THROWS_AS(ChainSpec(4, 1, 0.0, {1.0}, {0, 0, 0, 0}), std::domain_error);
  CHECK_THROWS_AS(ChainSpec(4, 1, 0.0, {1, 1, 1}, {0, 0}), std::domain_error);
  CHECK_THROWS_AS(ChainSpec(4, 1, 0.0, {1, -1, 1}, {0, 0, 0, 0}), std::domain_error);
  CHECK(ChainSpec::uniform(10, 3, 2.0).j_ref() == 2.0);
}

TEST_CASE("chain spec JSON parsing") {
  const ChainSpec uniform = chain_spec_from_json(
      R"({"n": 4, "k": 2, "gamma_z": 0.5,
          "couplings": {"uniform": 1.5}, "fields": {"uniform": 0.25}})");
  CHECK(uniform.n == 4);
  CHECK(uniform.k == 2);
  CHECK(uniform.gamma_z == 0.5);
  CHECK(uniform.couplings == std::vector<double>{1.5, 1.5, 1.5});
  CHECK(uniform.fields == std::vector<double>{0.25, 0.25, 0.25, 0.25});

  const ChainSpec listed = chain_spec_from_json(
      R"({"n": 3, "k": 1, "gamma_z": 0,
          "couplings": {"list": [1.0, 2.0]}, "fields": {"list": [0, 0.5, 0]}})");
  CHECK(listed.couplings == std::vector<double>{1.0, 2.0});
  CHECK(listed.fields[1] == 0.5);

  // Unknown and missing keys are rejected, as are malformed documents.
  CHECK_THROWS(chain_spec_from_json(
      R"({"n": 3, "k": 1, "gamma_z": 0, "couplings": {"uniform": 1},
          "fields": {"uniform": 0}, "extra": 1})"));
  CHECK_THROWS(chain_spec_from_json(
      R"({"n": 3, "k": 1, "couplings": {"uniform": 1}, "fields": {"uniform": 0}})"));
  CHECK_THROWS(chain_spec_from_json(
      R"({"n": 3, "k": 1, "gamma_z": 0, "couplings": {"bad": 1},
          "fields": {"uniform": 0}})"));
  CHECK_THROWS(chain_spec_from_json(
      R"({"n": 3, "k": 1, "gamma_z": 0, "couplings": {"list": [1]},
          "fields": {"uniform": 0}})"));
  CHECK_THROWS(chain_spec_from_json("not json"));
}

TEST_CASE("two-site one-excitation Hamiltonian") {
  const ChainSpec spec = ChainSpec::uniform(2, 1, 1.0);
  const SectorHamiltonian h = build_sector_hamiltonian(spec, 1);
  CHECK(h.dim == 2);
  CHECK(std::abs(h.matrix(0, 0)) == 0.0);
  CHECK(std::abs(h.matrix(1, 1)) == 0.0);
  CHECK(std::real(h.matrix(0, 1)) == doctest::Approx(-2.0).epsilon(1e-15));
  CHECK(std::real(h.matrix(1, 0)) == doctest::Approx(-2.0).epsilon(1e-15));
}

TEST_CASE("sector Hamiltonians match the full-space projection") {
  LcgStream rng(301);
  for (int n : {4, 5, 7, 8}) {
    std::vector<double> j(n - 1), b(n);
    for (double& x : j) x = 0.5 + rng.uniform();
    for (double& x : b) x = rng.uniform(-1.0, 1.0);
    const ChainSpec spec(n, n / 2, rng.uniform(-0.7, 0.7), j, b);
    const Mat full = full_chain_hamiltonian(spec);
    for (int sector : {1, 2}) {
      const SectorHamiltonian h = build_sector_hamiltonian(spec, sector);
      CHECK(frobenius_distance(h.matrix, project_full_to_sector(full, n, sector)) <=
            1e-12);
    }
  }
}

TEST_CASE("uniform field shifts the sector diagonal uniformly") {
  const ChainSpec bare = ChainSpec::uniform(5, 2, 1.0, 0.0, 0.3);
  const ChainSpec dressed = ChainSpec::uniform(5, 2, 1.0, 0.8, 0.3);
  for (int sector : {1, 2}) {
    const Mat h0 = build_sector_hamiltonian(bare, sector).matrix;
    const Mat h1 = build_sector_hamiltonian(dressed, sector).matrix;
    const cxd shift = h1(0, 0) - h0(0, 0);
    for (int i = 0; i < h0.rows(); ++i) {
      CHECK(std::abs(h1(i, i) - h0(i, i) - shift) <= 1e-12);
      for (int j = 0; j < h0.cols(); ++j)
        if (i != j) CHECK(std::abs(h1(i, j) - h0(i, j)) == 0.0);
    }
    // Equal diagonal shift leaves every |f|^2 unchanged.
    const Mat f0 = transfer_amplitudes(build_sector_hamiltonian(bare, sector), 1.3).matrix;
    const Mat f1 = transfer_amplitudes(build_sector_hamiltonian(dressed, sector), 1.3).matrix;
    for (int i = 0; i < f0.rows(); ++i)
      for (int j = 0; j < f0.cols(); ++j)
        CHECK(std::abs(f0(i, j)) == doctest::Approx(std::abs(f1(i, j))).epsilon(1e-10));
  }
}

TEST_CASE("transfer amplitudes") {
  const ChainSpec spec = ChainSpec::uniform(2, 1, 1.0);
  const SectorHamiltonian h = build_sector_hamiltonian(spec, 1);

  const TransferAmplitudes idm = transfer_amplitudes(h, 0.0);
  CHECK(frobenius_distance(idm.matrix, Mat::identity(2)) <= 1e-14);

  // |f_{2,1}(t)|^2 = sin^2(2Jt) for the two-site chain.
  for (int i = 0; i <= 20; ++i) {
    const double t = 0.1 * i;
    const Mat f = transfer_amplitudes(h, t).matrix;
    CHECK(std::norm(f(1, 0)) ==
          doctest::Approx(std::pow(std::sin(2.0 * t), 2)).epsilon(1e-12));
  }

  // Unitarity on a larger chain, backwards evolution included.
  const SectorHamiltonian h2 =
      build_sector_hamiltonian(ChainSpec::uniform(6, 2, 1.3, 0.2, 0.4), 2);
  for (double t : {-3.8, 0.7, 4.2}) {
    const Mat f = transfer_amplitudes(h2, t).matrix;
    CHECK(frobenius_distance(f * f.adjoint(), Mat::identity(h2.dim)) <= 1e-10);
  }

  // Time reversal is the adjoint.
  const Mat fwd = transfer_amplitudes(h2, 1.9).matrix;
  const Mat bwd = transfer_amplitudes(h2, -1.9).matrix;
  CHECK(frobenius_distance(bwd, fwd.adjoint()) <= 1e-12);
}

TEST_CASE("mirror symmetry of the uniform chain") {
  const ChainSpec spec = ChainSpec::uniform(6, 2, 1.0);
  const Mat f = transfer_amplitudes(build_sector_hamiltonian(spec, 1), 2.1).matrix;
  for (int j = 0; j < 6; ++j)
    for (int s = 0; s < 6; ++s)
      CHECK(std::abs(f(j, s) - f(5 - j, 5 - s)) <= 1e-10);
}

TEST_CASE("one-excitation channel parameters") {
  const ChainSpec pair = ChainSpec::uniform(2, 1, 1.0);
  const InputProfile in1 = InputProfile::uniform(pair, 1);

  CHECK(channel_params_one_excitation(ChainSpec::uniform(4, 1, 1.0),
                                      InputProfile::uniform(ChainSpec::uniform(4, 1, 1.0), 1),
                                      0.0)
            .params.eta <= 1e-30);

  // Perfect transfer of the two-site chain at t = pi/(4J).
  const double t_star = std::atan(1.0);  // pi/4
  const OneExcitationReduction red = channel_params_one_excitation(pair, in1, t_star);
  CHECK(red.params.eta == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(red.output_profile[0]) == doctest::Approx(1.0).epsilon(1e-12));

  // eta stays a probability at arbitrary times and sizes.
  const ChainSpec big = ChainSpec::uniform(9, 3, 1.0, 0.1, 0.2);
  const InputProfile in_big = InputProfile::uniform(big, 1);
  LcgStream rng(302);
  for (int i = 0; i < 10; ++i) {
    const double eta =
        channel_params_one_excitation(big, in_big, rng.uniform(0.0, 20.0)).params.eta;
    CHECK(eta >= 0.0);
    CHECK(eta <= 1.0);
  }
}

TEST_CASE("two-excitation channel parameters") {
  const ChainSpec spec = ChainSpec::uniform(6, 2, 1.0);
  const InputProfile input = InputProfile::uniform(spec, 2);

  // Both excitations start in A, which lies outside B.
  const TwoExcitationReduction at0 = channel_params_two_excitation(spec, input, 0.0);
  CHECK(at0.eta1 <= 1e-30);
  CHECK(at0.eta2 == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(at0.eta3 <= 1e-14);

  LcgStream rng(303);
  for (int i = 0; i < 8; ++i) {
    const TwoExcitationReduction red =
        channel_params_two_excitation(spec, input, rng.uniform(0.0, 10.0));
    CHECK(red.eta1 + red.eta2 + red.eta3 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(red.eta1 >= 0.0);
    CHECK(red.eta2 >= 0.0);
    CHECK(red.eta3 >= -1e-15);
    // Rank of the leak state is at most k.
    CHECK(red.params.rank() <= spec.k);
    double zsum = 0.0;
    for (double z : red.params.zeta) zsum += z;
    CHECK(zsum == doctest::Approx(1.0).epsilon(1e-12));
  }

  // Smallest valid register: n = 4, k = 2, leak rank at most 2.
  const ChainSpec small = ChainSpec::uniform(4, 2, 1.0);
  const TwoExcitationReduction tight =
      channel_params_two_excitation(small, InputProfile::uniform(small, 2), 1.1);
  CHECK(tight.params.rank() <= 2);
  double tsum = 0.0;
  for (double z : tight.params.zeta) tsum += z;
  CHECK(tsum == doctest::Approx(1.0).epsilon(1e-12));

  // k = 1 has no two-excitation code words.
  const ChainSpec thin = ChainSpec::uniform(4, 1, 1.0);
  CHECK_THROWS_AS(InputProfile::uniform(thin, 2), std::domain_error);
}

TEST_CASE("reduced state matches the full-state evolution") {
  LcgStream rng(304);
  for (int n : {4, 6}) {
    const ChainSpec spec = ChainSpec::uniform(n, 2, 1.0);
    const InputProfile input = InputProfile::uniform(spec, 2);
    for (int i = 0; i < 4; ++i) {
      const double t = rng.uniform(0.2, 8.0);
      const double w = rng.uniform(0.05, 0.95);
      const cxd alpha = std::sqrt(1.0 - w);
      const cxd beta = std::sqrt(w) * std::polar(1.0, rng.uniform(0.0, 6.28));

      const DensityMatrix oracle = full_state_reduced_b(spec, input, t, alpha, beta);
      const TwoExcitationReduction red = channel_params_two_excitation(spec, input, t);
      const Mat u = b_space_embedding(red, spec.k);
      const Mat model =
          u * reduced_state_two_excitation(spec, input, t, alpha, beta).matrix() *
          u.adjoint();
      CHECK(frobenius_distance(oracle.matrix(), model) <= 1e-10);
    }
  }

  // beta = 0: the all-down input is stationary.
  const ChainSpec spec = ChainSpec::uniform(4, 2, 1.0);
  const InputProfile input = InputProfile::uniform(spec, 2);
  const DensityMatrix vac = reduced_state_two_excitation(spec, input, 1.7, 1.0, 0.0);
  CHECK(std::abs(vac(0, 0) - cxd{1.0}) <= 1e-14);
}

TEST_CASE("leak state is orthogonal to the code words") {
  const ChainSpec spec = ChainSpec::uniform(7, 3, 1.0);
  const InputProfile input = InputProfile::uniform(spec, 2);
  const TwoExcitationReduction red = channel_params_two_excitation(spec, input, 2.7);
  REQUIRE(red.eta3 > 1e-6);
  const Mat u = b_space_embedding(red, spec.k);
  const Mat overlap = u.adjoint() * u;
  // Columns: vacuum, phi2', zeta vectors. All mutually orthonormal.
  CHECK(frobenius_distance(overlap, Mat::identity(2 + red.params.rank())) <= 1e-10);
}

TEST_CASE("transfer-time optimization") {
  const ChainSpec pair = ChainSpec::uniform(2, 1, 1.0);
  const InputProfile in1 = InputProfile::uniform(pair, 1);
  const TimeScanResult best = eta_max_over_time(pair, in1, 2.0, 200);
  CHECK(best.eta_star == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(best.t_star == doctest::Approx(std::atan(1.0)).epsilon(1e-4));

  // Dispersion on a longer chain keeps the single-site maximum below 1.
  const ChainSpec longer = ChainSpec::uniform(4, 1, 1.0);
  const TimeScanResult disp =
      eta_max_over_time(longer, InputProfile::uniform(longer, 1), 12.0, 400);
  CHECK(disp.eta_star <= 1.0 - 1e-6);
  CHECK(disp.eta_star > 0.5);

  // A tiny window reports the (near-zero) short-time transfer.
  const TimeScanResult early = eta_max_over_time(pair, in1, 1e-3, 2);
  CHECK(early.eta_star <= 1e-5);

  CHECK_THROWS_AS(eta_max_over_time(pair, in1, -1.0, 10), std::domain_error);
  CHECK_THROWS_AS(eta_max_over_time(pair, in1, 1.0, 1), std::domain_error);
}

TEST_CASE("input profile validation") {
  CHECK_THROWS_AS(InputProfile(1, {cxd{0.5, 0.0}}), std::domain_error);
  CHECK_THROWS_AS(InputProfile(3, {cxd{1.0, 0.0}}), std::domain_error);
  const InputProfile ok(1, {cxd{std::sqrt(0.5), 0.0}, cxd{0.0, std::sqrt(0.5)}});
  CHECK(ok.coefficients.size() == 2);
}

// Copyright 2026 the spinchan authors
// SPDX-License-Identifier: Apache-2.0

#include "spinchan/chain.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <set>
#include <stdexcept>
#include <thread>

#include <json.hpp>

namespace spinchan {

namespace {
constexpr double kNormTol = 1e-12;
constexpr double kSpectrumCut = 1e-12;  // sigma_B eigenvalues below this are numerical zeros
}  // namespace

ChainSpec::ChainSpec(int n_, int k_, double gamma_z_,
                     std::vector<double> couplings_, std::vector<double> fields_)
    : n(n_), k(k_), gamma_z(gamma_z_), couplings(std::move(couplings_)),
      fields(std::move(fields_)) {
  if (n < 2) throw std::domain_error("ChainSpec: need at least two spins");
  if (k < 1 || 2 * k > n)
    throw std::domain_error("ChainSpec: registers must satisfy 1 <= k <= n/2");
  if (static_cast<int>(couplings.size()) != n - 1)
    throw std::domain_error("ChainSpec: expected n-1 couplings");
  if (static_cast<int>(fields.size()) != n)
    throw std::domain_error("ChainSpec: expected n fields");
  for (double j : couplings)
    if (j < 0.0) throw std::domain_error("ChainSpec: negative coupling");
}

ChainSpec ChainSpec::uniform(int n, int k, double j, double b, double gamma_z) {
  return ChainSpec(n, k, gamma_z, std::vector<double>(n - 1, j),
                   std::vector<double>(n, b));
}

double ChainSpec::j_ref() const {
  return *std::max_element(couplings.begin(), couplings.end());
}

ChainSpec chain_spec_from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  if (!j.is_object()) throw std::invalid_argument("chain spec: not a JSON object");
  static const std::set<std::string> allowed{"n", "k", "gamma_z", "couplings", "fields"};
  for (const auto& item : j.items())
    if (!allowed.count(item.key()))
      throw std::invalid_argument("chain spec: unknown key '" + item.key() + "'");
  for (const std::string& key : allowed)
    if (!j.contains(key))
      throw std::invalid_argument("chain spec: missing key '" + key + "'");

  const int n = j.at("n").get<int>();

  auto parse_table = [&](const char* key, int count) {
    const nlohmann::json& tab = j.at(key);
    if (!tab.is_object() || tab.size() != 1 ||
        (!tab.contains("uniform") && !tab.contains("list")))
      throw std::invalid_argument(std::string("chain spec: '") + key +
                                  "' must be {\"uniform\": x} or {\"list\": [...]}");
    if (tab.contains("uniform"))
      return std::vector<double>(count, tab.at("uniform").get<double>());
    auto list = tab.at("list").get<std::vector<double>>();
    if (static_cast<int>(list.size()) != count)
      throw std::invalid_argument(std::string("chain spec: '") + key +
                                  "' list has the wrong length");
    return list;
  };

  return ChainSpec(n, j.at("k").get<int>(), j.at("gamma_z").get<double>(),
                   parse_table("couplings", n - 1), parse_table("fields", n));
}

namespace {

// Diagonal matrix element of the chain Hamiltonian for a spin configuration
// given as the set of up sites, minus the all-down energy.
double diagonal_energy(const ChainSpec& spec, const std::vector<int>& up) {
  auto sz = [&](int site) {
    return std::find(up.begin(), up.end(), site) != up.end() ? 1.0 : -1.0;
  };
  double e = 0.0;
  double e0 = 0.0;
  for (int b = 1; b < spec.n; ++b) {
    e -= spec.couplings[b - 1] * spec.gamma_z * sz(b) * sz(b + 1);
    e0 -= spec.couplings[b - 1] * spec.gamma_z;
  }
  for (int i = 1; i <= spec.n; ++i) {
    e -= spec.fields[i - 1] * sz(i);
    e0 += spec.fields[i - 1];
  }
  return e - e0;
}

int pair_index(int j, int l) {  // j > l, both 1-based
  return (j - 1) * (j - 2) / 2 + (l - 1);
}

std::vector<std::pair<int, int>> make_pair_basis(int n) {
  std::vector<std::pair<int, int>> basis;
  basis.reserve(n * (n - 1) / 2);
  for (int j = 2; j <= n; ++j)
    for (int l = 1; l < j; ++l) basis.emplace_back(j, l);
  return basis;
}

}  // namespace

SectorHamiltonian build_sector_hamiltonian(const ChainSpec& spec, int sector) {
  if (sector != 1 && sector != 2)
    throw std::domain_error("build_sector_hamiltonian: sector must be 1 or 2");

  SectorHamiltonian h;
  h.sector = sector;

  if (sector == 1) {
    h.dim = spec.n;
    h.matrix = Mat(h.dim, h.dim);
    for (int j = 1; j <= spec.n; ++j)
      h.matrix(j - 1, j - 1) = diagonal_energy(spec, {j});
    // XX hopping across each bond: matrix element -2J.
    for (int b = 1; b < spec.n; ++b) {
      h.matrix(b - 1, b) = -2.0 * spec.couplings[b - 1];
      h.matrix(b, b - 1) = -2.0 * spec.couplings[b - 1];
    }
    return h;
  }

  h.pair_basis = make_pair_basis(spec.n);
  h.dim = static_cast<int>(h.pair_basis.size());
  h.matrix = Mat(h.dim, h.dim);
  for (int s = 0; s < h.dim; ++s) {
    const auto [j, l] = h.pair_basis[s];
    h.matrix(s, s) = diagonal_energy(spec, {j, l});
    // Hop either excitation across an adjacent bond, hard-core constrained.
    for (int site : {j, l}) {
      const int other = site == j ? l : j;
      for (int dest : {site - 1, site + 1}) {
        if (dest < 1 || dest > spec.n || dest == other) continue;
        const int t = pair_index(std::max(dest, other), std::min(dest, other));
        h.matrix(t, s) = -2.0 * spec.couplings[std::min(site, dest) - 1];
      }
    }
  }
  return h;
}

SectorPropagator::SectorPropagator(const SectorHamiltonian& h)
    : sector_(h.sector), es_(hermitian_eigensystem(h.matrix)) {}

TransferAmplitudes SectorPropagator::at(double t) const {
  const int d = dim();
  TransferAmplitudes f;
  f.sector = sector_;
  f.time = t;
  f.matrix = Mat(d, d);
  // exp(-iHt) = V exp(-i Lambda t) V^dagger
  for (int m = 0; m < d; ++m) {
    const cxd ph = std::polar(1.0, -es_.values[m] * t);
    for (int r = 0; r < d; ++r) {
      const cxd w = ph * es_.vectors(r, m);
      for (int s = 0; s < d; ++s)
        f.matrix(r, s) += w * std::conj(es_.vectors(s, m));
    }
  }
  return f;
}

std::vector<cxd> SectorPropagator::propagate(const std::vector<cxd>& psi0,
                                             double t) const {
  const int d = dim();
  if (static_cast<int>(psi0.size()) != d)
    throw std::invalid_argument("SectorPropagator: state dimension mismatch");
  std::vector<cxd> w(d);
  for (int m = 0; m < d; ++m) {
    cxd s = 0.0;
    for (int r = 0; r < d; ++r) s += std::conj(es_.vectors(r, m)) * psi0[r];
    w[m] = std::polar(1.0, -es_.values[m] * t) * s;
  }
  std::vector<cxd> out(d);
  for (int r = 0; r < d; ++r) {
    cxd s = 0.0;
    for (int m = 0; m < d; ++m) s += es_.vectors(r, m) * w[m];
    out[r] = s;
  }
  return out;
}

TransferAmplitudes transfer_amplitudes(const SectorHamiltonian& h, double t) {
  return SectorPropagator(h).at(t);
}

InputProfile::InputProfile(int sector_, std::vector<cxd> coefficients_)
    : sector(sector_), coefficients(std::move(coefficients_)) {
  if (sector != 1 && sector != 2)
    throw std::domain_error("InputProfile: sector must be 1 or 2");
  if (coefficients.empty())
    throw std::domain_error("InputProfile: empty coefficient list");
  double norm = 0.0;
  for (const cxd& c : coefficients) norm += std::norm(c);
  if (std::abs(norm - 1.0) > kNormTol)
    throw std::domain_error("InputProfile: coefficients not normalized");
}

InputProfile InputProfile::uniform(const ChainSpec& spec, int sector) {
  const int count = sector == 1 ? spec.k : spec.k * (spec.k - 1) / 2;
  if (count < 1)
    throw std::domain_error("InputProfile: register too small for this sector");
  return InputProfile(sector,
                      std::vector<cxd>(count, 1.0 / std::sqrt(double(count))));
}

namespace {

std::vector<cxd> embed_profile(const InputProfile& input, int expected, int dim) {
  if (static_cast<int>(input.coefficients.size()) != expected)
    throw std::invalid_argument("input profile has the wrong length for this register");
  std::vector<cxd> psi(dim);
  // A occupies the leading sites, so its basis states lead the sector order.
  std::copy(input.coefficients.begin(), input.coefficients.end(), psi.begin());
  return psi;
}

OneExcitationReduction reduce_one(const ChainSpec& spec,
                                  const SectorPropagator& prop,
                                  const InputProfile& input, double t) {
  const std::vector<cxd> psi =
      prop.propagate(embed_profile(input, spec.k, prop.dim()), t);
  double eta = 0.0;
  for (int j = spec.n - spec.k; j < spec.n; ++j) eta += std::norm(psi[j]);
  eta = std::min(eta, 1.0);

  OneExcitationReduction red{ChannelParamsAD(eta), {}};
  if (eta > 0.0) {
    red.output_profile.resize(spec.k);
    for (int j = 0; j < spec.k; ++j)
      red.output_profile[j] = psi[spec.n - spec.k + j] / std::sqrt(eta);
  }
  return red;
}

TwoExcitationReduction reduce_two(const ChainSpec& spec,
                                  const SectorPropagator& prop,
                                  const InputProfile& input, double t) {
  if (spec.k < 2)
    throw std::domain_error("two-excitation encoding needs k >= 2");
  const auto basis = make_pair_basis(spec.n);
  const std::vector<cxd> d = prop.propagate(
      embed_profile(input, spec.k * (spec.k - 1) / 2, prop.dim()), t);

  TwoExcitationReduction red;
  red.evolved = d;
  const int b_lo = spec.n - spec.k + 1;  // first site of register B
  for (std::size_t s = 0; s < basis.size(); ++s) {
    const auto [j, l] = basis[s];
    const double w = std::norm(d[s]);
    if (l >= b_lo)
      red.eta1 += w;  // both in B (j > l)
    else if (j < b_lo)
      red.eta2 += w;  // both outside B
    else
      red.eta3 += w;  // split
  }

  if (red.eta1 > 0.0) {
    red.output_profile.resize(spec.k * (spec.k - 1) / 2);
    int idx = 0;
    const double s1 = std::sqrt(red.eta1);
    for (int j = b_lo + 1; j <= spec.n; ++j)
      for (int l = b_lo; l < j; ++l)
        red.output_profile[idx++] = d[pair_index(j, l)] / s1;
  }

  std::vector<double> zeta{1.0};
  if (red.eta3 > 1e-14) {
    // sigma_B on the one-up-in-B basis, from the split-pair amplitudes.
    red.sigma_b = Mat(spec.k, spec.k);
    for (int l = 1; l < b_lo; ++l)
      for (int j = b_lo; j <= spec.n; ++j)
        for (int jp = b_lo; jp <= spec.n; ++jp)
          red.sigma_b(j - b_lo, jp - b_lo) +=
              d[pair_index(j, l)] * std::conj(d[pair_index(jp, l)]) / red.eta3;
    red.sigma_eigensystem = hermitian_eigensystem(red.sigma_b);
    zeta.clear();
    double sum = 0.0;
    for (double z : red.sigma_eigensystem.values)
      if (z > kSpectrumCut) {
        zeta.push_back(z);
        sum += z;
      }
    for (double& z : zeta) z /= sum;
  }

  const double e1 = std::min(red.eta1, 1.0);
  const double e2 = std::min(red.eta2, 1.0 - e1);
  red.params = ChannelParamsT(e1, e2, std::move(zeta));
  return red;
}

}  // namespace

OneExcitationReduction channel_params_one_excitation(const ChainSpec& spec,
                                                     const InputProfile& input,
                                                     double t) {
  if (input.sector != 1)
    throw std::invalid_argument("channel_params_one_excitation: sector-1 profile required");
  return reduce_one(spec, SectorPropagator(build_sector_hamiltonian(spec, 1)),
                    input, t);
}

TwoExcitationReduction channel_params_two_excitation(const ChainSpec& spec,
                                                     const InputProfile& input,
                                                     double t) {
  if (input.sector != 2)
    throw std::invalid_argument("channel_params_two_excitation: sector-2 profile required");
  return reduce_two(spec, SectorPropagator(build_sector_hamiltonian(spec, 2)),
                    input, t);
}

DensityMatrix reduced_state_two_excitation(const ChainSpec& spec,
                                           const InputProfile& input, double t,
                                           cxd alpha, cxd beta) {
  if (std::abs(std::norm(alpha) + std::norm(beta) - 1.0) > kNormTol)
    throw std::domain_error("reduced_state_two_excitation: |alpha|^2 + |beta|^2 must be 1");
  const TwoExcitationReduction red = channel_params_two_excitation(spec, input, t);
  const QubitParams logical{std::norm(beta), std::conj(alpha) * beta};
  return apply(t_channel(red.params),
               embed(make_qubit_state(logical), red.params.dim()));
}

TimeScanResult eta_max_over_time(const ChainSpec& spec,
                                 const InputProfile& input, double t_max,
                                 int steps) {
  if (t_max <= 0.0) throw std::domain_error("eta_max_over_time: t_max must be positive");
  if (steps < 2) throw std::domain_error("eta_max_over_time: need at least two steps");

  const SectorPropagator prop(
      build_sector_hamiltonian(spec, input.sector));
  auto eta_at = [&](double t) {
    return input.sector == 1 ? reduce_one(spec, prop, input, t).params.eta
                             : reduce_two(spec, prop, input, t).eta1;
  };

  // Grid points are independent; scan them on a thread pool, pick the best
  // in grid order.
  std::vector<double> grid(steps);
  {
    const unsigned workers = std::min<unsigned>(
        std::max(std::thread::hardware_concurrency(), 1u),
        static_cast<unsigned>(steps));
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (int i = next.fetch_add(1); i < steps; i = next.fetch_add(1))
          grid[i] = eta_at(t_max * i / (steps - 1));
      });
    for (std::thread& th : pool) th.join();
  }

  TimeScanResult best{0.0, -1.0};
  int ibest = 0;
  for (int i = 0; i < steps; ++i) {
    if (grid[i] > best.eta_star) {
      best = {t_max * i / (steps - 1), grid[i]};
      ibest = i;
    }
  }

  double a = t_max * (ibest > 0 ? ibest - 1 : 0) / (steps - 1);
  double b = t_max * (ibest < steps - 1 ? ibest + 1 : steps - 1) / (steps - 1);
  constexpr double inv_phi = 0.6180339887498948482;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = eta_at(c);
  double fd = eta_at(d);
  auto consider = [&](double t, double e) {
    if (e > best.eta_star) best = {t, e};
  };
  consider(c, fc);
  consider(d, fd);
  while (b - a > 1e-10 * t_max) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = eta_at(c);
      consider(c, fc);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = eta_at(d);
      consider(d, fd);
    }
  }
  return best;
}

}  // namespace spinchan

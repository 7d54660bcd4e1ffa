// Copyright 2026 the spinchan authors
// SPDX-License-Identifier: Apache-2.0

#include "spinchan/sweep.hpp"

#include <atomic>
#include <cstdio>
#include <fstream>
#include <functional>
#include <stdexcept>
#include <thread>

#include "spinchan/capacity.hpp"

namespace spinchan {

std::string format_g10(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::vector<double> linear_grid(double lo, double hi, double step) {
  if (step <= 0.0) throw std::domain_error("linear_grid: step must be positive");
  if (lo > hi) throw std::domain_error("linear_grid: min exceeds max");
  std::vector<double> g;
  for (int i = 0;; ++i) {
    const double v = lo + i * step;
    if (v > hi + step * 1e-9) break;
    g.push_back(std::min(v, hi));
  }
  return g;
}

namespace {

// Rows are independent; evaluate them on a small thread pool and emit in
// grid order.
std::vector<std::string> evaluate_rows(
    int count, const std::function<std::string(int)>& row_fn) {
  std::vector<std::string> rows(count);
  const unsigned hw = std::thread::hardware_concurrency();
  const unsigned workers =
      std::min<unsigned>(std::max(hw, 1u), static_cast<unsigned>(count));
  if (workers <= 1) {
    for (int i = 0; i < count; ++i) rows[i] = row_fn(i);
    return rows;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1))
        rows[i] = row_fn(i);
    });
  for (std::thread& th : pool) th.join();
  return rows;
}

std::string join_csv(const std::string& header,
                     const std::vector<std::string>& rows) {
  std::string out = header;
  out += '\n';
  for (const std::string& r : rows) {
    out += r;
    out += '\n';
  }
  return out;
}

}  // namespace

std::string ad_sweep_csv(double eta_min, double eta_max, double eta_step) {
  const std::vector<double> grid = linear_grid(eta_min, eta_max, eta_step);
  if (grid.empty() || grid.front() < 0.0 || grid.back() > 1.0)
    throw std::domain_error("ad_sweep_csv: eta grid outside [0,1]");

  auto row = [&](int i) {
    const double eta = grid[i];
    const CapacityResult q = quantum_capacity_ad(eta);
    const CapacityResult ce = ea_capacity_ad(eta);
    const CapacityResult c1 = classical_capacity_c1_ad(eta);
    std::string r = format_g10(eta);
    r += ',' + format_g10(q.value);
    r += ',' + format_g10(ce.value);
    r += ',' + format_g10(ce.value / 2.0);
    r += ',' + format_g10(c1.value);
    r += ',';
    if (eta >= 0.5) r += format_g10(q.argmax_p);  // undefined below eta = 1/2
    r += ',' + format_g10(ce.argmax_p);
    r += ',' + format_g10(c1.argmax_p);
    return r;
  };
  return join_csv("eta,Q,C_E,Q_E,C1,p_Q,p_CE,p_C1",
                  evaluate_rows(static_cast<int>(grid.size()), row));
}

std::string t_sweep_csv(const std::vector<double>& eta1_list, double eta2_step) {
  std::vector<std::pair<double, double>> points;
  for (double eta1 : eta1_list) {
    if (eta1 < 0.0 || eta1 > 1.0)
      throw std::domain_error("t_sweep_csv: eta1 outside [0,1]");
    for (double eta2 : linear_grid(0.0, 1.0 - eta1, eta2_step))
      points.emplace_back(eta1, eta2);
  }

  auto row = [&](int i) {
    const auto [eta1, eta2] = points[i];
    std::string r = format_g10(eta1);
    r += ',' + format_g10(eta2);
    r += ',' + format_g10(quantum_capacity_t(eta1, eta2).value);
    r += ',' + format_g10(ea_capacity_t(eta1, eta2).value);
    r += ',' + format_g10(classical_capacity_c1_lower_t(eta1, eta2).value);
    r += ',' + format_g10(quantum_capacity_ad(1.0 - eta2).value);
    r += ',' + format_g10(ea_capacity_ad(1.0 - eta2).value);
    return r;
  };
  return join_csv("eta1,eta2,Q,C_E,C1_lower,ad_upper_Q,ad_upper_CE",
                  evaluate_rows(static_cast<int>(points.size()), row));
}

std::string chain_csv(const ChainEvalRequest& req) {
  double t = req.time;
  if (req.optimize_time) {
    if (req.spec.j_ref() <= 0.0)
      throw std::domain_error("chain_csv: cannot optimize over a chain with no couplings");
    // Window generous enough to cover the ballistic arrival time ~ n/(4J).
    const double t_max = 10.0 * req.spec.n / req.spec.j_ref();
    t = eta_max_over_time(req.spec, req.profile, t_max, 2000).t_star;
  }

  std::string head = "n,k,t,";
  std::string r = std::to_string(req.spec.n) + ',' + std::to_string(req.spec.k) +
                  ',' + format_g10(t);
  if (req.profile.sector == 1) {
    const double eta =
        channel_params_one_excitation(req.spec, req.profile, t).params.eta;
    head += "eta,Q,C_E,C1";
    r += ',' + format_g10(eta);
    r += ',' + format_g10(quantum_capacity_ad(eta).value);
    r += ',' + format_g10(ea_capacity_ad(eta).value);
    r += ',' + format_g10(classical_capacity_c1_ad(eta).value);
  } else {
    const TwoExcitationReduction red =
        channel_params_two_excitation(req.spec, req.profile, t);
    const double e1 = red.params.eta1;
    const double e2 = red.params.eta2;
    head += "eta1,eta2,eta3,Q,C_E,C1_lower";
    r += ',' + format_g10(e1);
    r += ',' + format_g10(e2);
    r += ',' + format_g10(red.params.eta3());
    r += ',' + format_g10(quantum_capacity_t(e1, e2).value);
    r += ',' + format_g10(ea_capacity_t(e1, e2).value);
    r += ',' + format_g10(classical_capacity_c1_lower_t(e1, e2).value);
  }
  return join_csv(head, {r});
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace spinchan

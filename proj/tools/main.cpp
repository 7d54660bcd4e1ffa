// Copyright 2026 the spinchan authors
// SPDX-License-Identifier: Apache-2.0

#include <complex>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spinchan/chain.hpp"
#include "spinchan/selftest.hpp"
#include "spinchan/sweep.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open spec file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// "uniform", or a comma-separated real coefficient list (normalized here).
spinchan::InputProfile parse_profile(const std::string& text,
                                     const spinchan::ChainSpec& spec,
                                     int sector) {
  if (text == "uniform") return spinchan::InputProfile::uniform(spec, sector);
  std::vector<spinchan::cxd> coeffs;
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    std::size_t used = 0;
    const double v = std::stod(tok, &used);
    if (used != tok.size()) throw std::runtime_error("bad profile entry: " + tok);
    coeffs.emplace_back(v, 0.0);
  }
  double norm = 0.0;
  for (const auto& c : coeffs) norm += std::norm(c);
  if (norm <= 0.0) throw std::runtime_error("profile must not be all zero");
  for (auto& c : coeffs) c /= std::sqrt(norm);
  return spinchan::InputProfile(sector, std::move(coeffs));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"effective-channel capacities of excitation-conserving spin chains"};
  app.require_subcommand(1);

  // ad-sweep ---------------------------------------------------------------
  double eta_min = 0.0, eta_max = 1.0, eta_step = 0.01;
  std::string ad_out = "ad_capacities.csv";
  CLI::App* ad = app.add_subcommand(
      "ad-sweep", "amplitude damping capacities Q, C_E, Q_E, C1 over an eta grid");
  ad->add_option("--eta-min", eta_min, "grid start")->capture_default_str();
  ad->add_option("--eta-max", eta_max, "grid end")->capture_default_str();
  ad->add_option("--eta-step", eta_step, "grid step")->capture_default_str();
  ad->add_option("--out", ad_out, "output CSV path")->capture_default_str();

  // t-sweep ----------------------------------------------------------------
  std::vector<double> eta1_list{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  double eta2_step = 0.01;
  std::string t_out = "t_capacities.csv";
  CLI::App* ts = app.add_subcommand(
      "t-sweep", "T-channel capacities over eta2 in [0, 1-eta1] for each eta1");
  ts->add_option("--eta1", eta1_list,
                 "eta1 values (repeatable; default 0.1..0.9)");
  ts->add_option("--eta2-step", eta2_step, "eta2 grid step")->capture_default_str();
  ts->add_option("--out", t_out, "output CSV path")->capture_default_str();

  // chain ------------------------------------------------------------------
  std::string spec_path, profile_text = "uniform", time_text = "0";
  std::string chain_out = "chain.csv";
  int sector = 1;
  CLI::App* ch = app.add_subcommand(
      "chain", "extract the effective channel of a chain and its capacities");
  ch->add_option("--spec", spec_path, "chain spec JSON path")->required();
  ch->add_option("--profile", profile_text,
                 "'uniform' or comma-separated input coefficients")
      ->capture_default_str();
  ch->add_option("--time", time_text, "evolution time, or 'optimize'")
      ->capture_default_str();
  ch->add_option("--sector", sector, "excitation sector (1 or 2)")
      ->check(CLI::IsMember({1, 2}))
      ->capture_default_str();
  ch->add_option("--out", chain_out, "output CSV path")->capture_default_str();

  // verify -----------------------------------------------------------------
  CLI::App* vf = app.add_subcommand("verify", "run the library's property suites");
  bool inject_failure = false;
  vf->add_flag("--inject-failure", inject_failure,
               "corrupt all tolerances (test harness for the failure path)")
      ->group("");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*ad) {
      spinchan::write_text_file(ad_out,
                                spinchan::ad_sweep_csv(eta_min, eta_max, eta_step));
      std::cout << "wrote " << ad_out << "\n";
    } else if (*ts) {
      spinchan::write_text_file(t_out,
                                spinchan::t_sweep_csv(eta1_list, eta2_step));
      std::cout << "wrote " << t_out << "\n";
    } else if (*ch) {
      const spinchan::ChainSpec spec =
          spinchan::chain_spec_from_json(read_file(spec_path));
      spinchan::ChainEvalRequest req{spec, parse_profile(profile_text, spec, sector)};
      if (time_text == "optimize")
        req.optimize_time = true;
      else
        req.time = std::stod(time_text);
      spinchan::write_text_file(chain_out, spinchan::chain_csv(req));
      std::cout << "wrote " << chain_out << "\n";
    } else if (*vf) {
      const spinchan::VerifyOutcome outcome =
          spinchan::run_verification(inject_failure);
      std::cout << outcome.report;
      return outcome.all_passed ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

// Copyright 2026 the spinchan authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "spinchan/chain.hpp"

namespace spinchan {

/// Shortest decimal form at up to 10 significant digits ("%.10g").
std::string format_g10(double v);

/// lo, lo+step, ... clamped to hi (hi is always the last point; a single
/// point when lo == hi). step must be positive and lo <= hi.
std::vector<double> linear_grid(double lo, double hi, double step);

/// CSV with header eta,Q,C_E,Q_E,C1,p_Q,p_CE,p_C1: the amplitude damping
/// capacities over an eta grid. p_Q is left empty below eta = 1/2, where the
/// quantum capacity is identically zero and its argmax undefined.
std::string ad_sweep_csv(double eta_min, double eta_max, double eta_step);

/// CSV with header eta1,eta2,Q,C_E,C1_lower,ad_upper_Q,ad_upper_CE: the
/// T-channel capacities over eta2 in [0, 1-eta1] for each requested eta1,
/// next to the amplitude-damping reference curves at efficiency 1-eta2
/// (upper bounds for the corresponding T capacities).
std::string t_sweep_csv(const std::vector<double>& eta1_list, double eta2_step);

struct ChainEvalRequest {
  ChainSpec spec;
  InputProfile profile;
  bool optimize_time = false;  // when set, `time` is ignored
  double time = 0.0;
};

/// Single-row CSV for a chain evaluation: extracts the effective channel at
/// the requested (or efficiency-maximizing) time and appends its capacities.
/// Sector 1 header: n,k,t,eta,Q,C_E,C1; sector 2 header:
/// n,k,t,eta1,eta2,eta3,Q,C_E,C1_lower.
std::string chain_csv(const ChainEvalRequest& req);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace spinchan

/*
 * SPDX-FileCopyrightText: Copyright (c) 2026 The owcnc Authors. All rights reserved.
 * SPDX-License-Identifier: Apache-2.0
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "owcnc/montecarlo.hpp"
#include "owcnc/noma.hpp"
#include "owcnc/outage.hpp"
#include "owcnc/scenario.hpp"

namespace owcnc::sweep {

using outage::Scheme;

inline constexpr std::size_t kSchemeCount = 4;

inline constexpr std::size_t index_of(Scheme s) { return static_cast<std::size_t>(s); }

// One alpha grid point.
struct SweepRecord {
  double alpha = 0.0;
  // Closed-form total success in the configured formula mode, and in the
  // other mode for the literal-vs-corrected audit.
  std::array<double, kSchemeCount> analytic{};
  std::array<double, kSchemeCount> analytic_other_mode{};
  // Empty when the sweep ran with trials == 0.
  std::array<std::optional<mc::EstimateResult>, kSchemeCount> empirical{};
  double sumrate_noma_g1 = 0.0;
  double sumrate_noma_g2 = 0.0;
  double sumrate_oma_g1 = 0.0;
  double sumrate_oma_g2 = 0.0;
  // Users with zero channel gain or an infeasible outage intensity under any
  // scheme, ascending.
  std::vector<int> infeasible_users;
  bool superposition_ok = true;
};

struct SweepSummary {
  double argmax_alpha_rlnc_noma = 0.0;
  double max_success_rlnc_noma = 0.0;
  int mc_pass = 0;
  int mc_fail = 0;
  double max_mode_deviation = 0.0;
};

struct SweepResult {
  std::string profile;
  outage::FormulaMode mode = outage::FormulaMode::Corrected;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<SweepRecord> records;  // ascending alpha
  std::vector<noma::Warning> warnings;
  SweepSummary summary;
};

// Reference alpha for the RLNC-NOMA optimum, printed next to the computed argmax.
inline constexpr double kReportedBestAlpha = 0.33;

// Channel gains of the scenario users, in users() order.
std::vector<double> channel_gains(const scenario::ScenarioConfig& cfg,
                                  const std::vector<channel::UserTerminal>& users);

// Users with groups reassigned by gain when cfg.grouping == Sorted.
std::vector<channel::UserTerminal> scenario_users(const scenario::ScenarioConfig& cfg);

// Runs the alpha sweep. `workers` only affects speed (0 = all cores).
// Throws ConfigError if cfg is invalid.
SweepResult run_sweep(const scenario::ScenarioConfig& cfg, unsigned workers = 1);

// Fixed CSV schema, one header line plus one row per record.
inline constexpr std::array<const char*, 18> kCsvColumns = {
    "alpha",          "p_noma",          "p_oma",           "p_rlnc_noma",    "p_rlnc_oma",
    "mc_noma",        "mc_noma_se",      "mc_oma",          "mc_oma_se",      "mc_rlnc_noma",
    "mc_rlnc_noma_se", "mc_rlnc_oma",    "mc_rlnc_oma_se",  "sumrate_noma_g1", "sumrate_noma_g2",
    "sumrate_oma_g1", "sumrate_oma_g2",  "infeasible_users"};

std::string to_csv(const SweepResult& result);

// Writes to_csv(result) to `path`. Throws IoError naming the path.
void emit_csv(const SweepResult& result, const std::string& path);

// Single-line JSON run summary.
std::string summary_json(const SweepResult& result);

}  // namespace owcnc::sweep

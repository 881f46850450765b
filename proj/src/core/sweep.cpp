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

#include "owcnc/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>

#include <json.hpp>

#include "owcnc/errors.hpp"
#include "owcnc/keyed_rng.hpp"

namespace owcnc::sweep {

std::vector<double> channel_gains(const scenario::ScenarioConfig& cfg,
                                  const std::vector<channel::UserTerminal>& users) {
  std::vector<double> gains;
  gains.reserve(users.size());
  for (const auto& u : users) gains.push_back(channel::los_gain(cfg.ap, u).h);
  return gains;
}

std::vector<channel::UserTerminal> scenario_users(const scenario::ScenarioConfig& cfg) {
  auto users = cfg.resolved_users();
  if (cfg.grouping == scenario::Grouping::Sorted) {
    std::map<int, double> by_id;
    const auto gains = channel_gains(cfg, users);
    for (std::size_t i = 0; i < users.size(); ++i) by_id[users[i].id] = gains[i];
    const auto groups = noma::assign_groups(by_id, 2);
    for (auto& u : users) u.group = groups.at(u.id);
  }
  return users;
}

namespace {

std::uint64_t point_seed(std::uint64_t seed, std::size_t alpha_index, Scheme s) {
  return KeyedRng::derive(seed, alpha_index, index_of(s), 0x5eed)();
}

}  // namespace

SweepResult run_sweep(const scenario::ScenarioConfig& cfg, unsigned workers) {
  scenario::validate(cfg);

  const auto users = scenario_users(cfg);
  const auto gains = channel_gains(cfg, users);
  const outage::CaptureConfig capture{cfg.delta_over_b, cfg.bandwidth_hz, 2};
  const outage::OutageParams params{cfg.v_max, cfg.tau, cfg.f};
  const channel::NoiseModel noise{cfg.n0_w_per_hz, cfg.bandwidth_hz};
  const auto other_mode = cfg.formula_mode == outage::FormulaMode::Corrected
                              ? outage::FormulaMode::Literal
                              : outage::FormulaMode::Corrected;

  SweepResult result;
  result.profile = cfg.profile;
  result.mode = cfg.formula_mode;
  result.trials = cfg.trials;
  result.seed = cfg.seed;

  const auto grid = cfg.alpha_grid();
  for (std::size_t ai = 0; ai < grid.size(); ++ai) {
    SweepRecord rec;
    rec.alpha = grid[ai];
    const auto alloc = noma::allocate_power(rec.alpha, cfg.ap.max_optical_power_w,
                                            [&](const noma::Warning& w) { result.warnings.push_back(w); });

    std::set<int> infeasible;
    for (std::size_t i = 0; i < users.size(); ++i)
      if (!(gains[i] > 0.0)) infeasible.insert(users[i].id);

    for (Scheme s : outage::kAllSchemes) {
      const auto rep =
          outage::evaluate(s, users, gains, alloc, capture, cfg.n0_w_per_hz, params, cfg.formula_mode);
      rec.analytic[index_of(s)] = rep.total_success;
      for (const auto& [id, eps] : rep.epsilon)
        if (!eps.feasible) infeasible.insert(id);

      try {
        rec.analytic_other_mode[index_of(s)] =
            outage::evaluate(s, users, gains, alloc, capture, cfg.n0_w_per_hz, params, other_mode)
                .total_success;
      } catch (const DomainError&) {
        rec.analytic_other_mode[index_of(s)] = std::nan("");
      }

      if (cfg.trials > 0) {
        mc::TrialConfig tc;
        tc.scheme = s;
        for (const auto& u : users) tc.attempt_failure.push_back(rep.attempt_failure.at(u.id));
        tc.f = cfg.f;
        tc.v_max = cfg.v_max;
        tc.tau = cfg.tau;
        tc.trials = cfg.trials;
        tc.seed = point_seed(cfg.seed, ai, s);
        tc.payload_len = cfg.payload_len;
        tc.workers = workers;
        const auto est = mc::simulate(tc);
        if (mc::compare(rep.total_success, est).pass) ++result.summary.mc_pass;
        else ++result.summary.mc_fail;
        rec.empirical[index_of(s)] = est;
      }
    }
    rec.infeasible_users.assign(infeasible.begin(), infeasible.end());

    const auto noma_rates = noma::sum_rates(alloc, users, gains, noise, noma::Access::Noma);
    const auto oma_rates = noma::sum_rates(alloc, users, gains, noise, noma::Access::Oma);
    rec.sumrate_noma_g1 = noma_rates.group_sum_rate.at(1);
    rec.sumrate_noma_g2 = noma_rates.group_sum_rate.at(2);
    rec.sumrate_oma_g1 = oma_rates.group_sum_rate.at(1);
    rec.sumrate_oma_g2 = oma_rates.group_sum_rate.at(2);

    auto constraint = noma::default_superposition(alloc);
    if (cfg.a_max > 0.0) {
      constraint.a_max = cfg.a_max;
      constraint.i_dc = cfg.i_dc > 0.0 ? cfg.i_dc : cfg.a_max / 2.0;
    } else if (cfg.i_dc > 0.0) {
      constraint.i_dc = cfg.i_dc;
    }
    const auto check = noma::validate_superposition(constraint);
    rec.superposition_ok = check.ok();
    if (!check.ok()) {
      char buf[160];
      std::snprintf(buf, sizeof buf, "alpha=%g non-negativity slack %g, eye-safety slack %g", rec.alpha,
                    check.non_negativity_slack, check.eye_safety_slack);
      result.warnings.push_back({"superposition", buf});
    }

    result.records.push_back(std::move(rec));
  }

  auto& sum = result.summary;
  sum.max_success_rlnc_noma = -1.0;
  for (const auto& rec : result.records) {
    const double p = rec.analytic[index_of(Scheme::RlncNoma)];
    if (p > sum.max_success_rlnc_noma) {
      sum.max_success_rlnc_noma = p;
      sum.argmax_alpha_rlnc_noma = rec.alpha;
    }
    for (std::size_t s = 0; s < kSchemeCount; ++s) {
      const double d = std::abs(rec.analytic[s] - rec.analytic_other_mode[s]);
      if (std::isfinite(d)) sum.max_mode_deviation = std::max(sum.max_mode_deviation, d);
    }
  }
  if (result.records.empty()) sum.max_success_rlnc_noma = 0.0;
  return result;
}

namespace {

void put(std::string& out, double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  out += buf;
}

}  // namespace

std::string to_csv(const SweepResult& result) {
  std::string out;
  for (std::size_t i = 0; i < kCsvColumns.size(); ++i) {
    if (i) out += ',';
    out += kCsvColumns[i];
  }
  out += '\n';
  for (const auto& r : result.records) {
    put(out, r.alpha);
    for (double p : r.analytic) {
      out += ',';
      put(out, p);
    }
    for (const auto& e : r.empirical) {
      out += ',';
      if (e) put(out, e->p_hat);
      out += ',';
      if (e) put(out, e->std_error);
    }
    for (double v : {r.sumrate_noma_g1, r.sumrate_noma_g2, r.sumrate_oma_g1, r.sumrate_oma_g2}) {
      out += ',';
      put(out, v);
    }
    out += ',';
    for (std::size_t i = 0; i < r.infeasible_users.size(); ++i) {
      if (i) out += ';';
      out += std::to_string(r.infeasible_users[i]);
    }
    out += '\n';
  }
  return out;
}

void emit_csv(const SweepResult& result, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(path, "cannot open for writing");
  const auto text = to_csv(result);
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.close();
  if (!out) throw IoError(path, "write failed");
}

std::string summary_json(const SweepResult& result) {
  const auto& s = result.summary;
  std::size_t infeasible_rows = 0;
  for (const auto& r : result.records)
    if (!r.infeasible_users.empty()) ++infeasible_rows;

  nlohmann::ordered_json j;
  j["profile"] = result.profile;
  j["formula_mode"] = std::string(outage::to_string(result.mode));
  j["rows"] = result.records.size();
  j["trials"] = result.trials;
  j["seed"] = result.seed;
  j["argmax_alpha_rlnc_noma"] = s.argmax_alpha_rlnc_noma;
  j["max_success_rlnc_noma"] = s.max_success_rlnc_noma;
  j["reported_best_alpha_rlnc_noma"] = kReportedBestAlpha;
  j["mc_comparisons"] = {{"pass", s.mc_pass}, {"fail", s.mc_fail}};
  j["max_mode_deviation"] = s.max_mode_deviation;
  j["infeasible_rows"] = infeasible_rows;
  j["warnings"] = result.warnings.size();
  return j.dump();
}

}  // namespace owcnc::sweep

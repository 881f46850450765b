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

#include "owcnc/outage.hpp"

#include <algorithm>
#include <cmath>

#include "owcnc/errors.hpp"
#include "owcnc/rlnc.hpp"

namespace owcnc::outage {

std::string_view to_string(Scheme s) {
  switch (s) {
    case Scheme::Noma: return "noma";
    case Scheme::Oma: return "oma";
    case Scheme::RlncNoma: return "rlnc_noma";
    case Scheme::RlncOma: return "rlnc_oma";
  }
  return "?";
}

std::string_view to_string(FormulaMode m) {
  return m == FormulaMode::Literal ? "literal" : "corrected";
}

std::optional<FormulaMode> parse_formula_mode(std::string_view text) {
  if (text == "literal") return FormulaMode::Literal;
  if (text == "corrected") return FormulaMode::Corrected;
  return std::nullopt;
}

double outage_threshold(const CaptureConfig& cfg, Access access) {
  const double bits = access == Access::Noma ? cfg.delta_over_b : cfg.g_count * cfg.delta_over_b;
  return std::exp2(bits) - 1.0;
}

std::optional<double> channel_gain_demand(const UserTerminal& user, double h, double sigma2,
                                          double t) {
  if (!(h > 0.0)) return std::nullopt;
  const double r = user.responsivity_a_per_w;
  return t * sigma2 / (user.mu * r * r * h * h);
}

Epsilon epsilon_for(const UserTerminal& user, double h, const PowerAllocation& alloc,
                    Access access, const CaptureConfig& cfg, double n0_w_per_hz,
                    FormulaMode mode) {
  const double t_noma = outage_threshold(cfg, Access::Noma);
  const double sigma2_full = n0_w_per_hz * cfg.bandwidth_hz;

  if (access == Access::Noma) {
    const auto g = channel_gain_demand(user, h, sigma2_full, t_noma);
    if (!g) return Epsilon::infeasible();
    if (user.group == 1) return {*g / alloc.p1, true};
    const double headroom = alloc.p2 - alloc.p1 * t_noma;
    if (!(headroom > 0.0)) return Epsilon::infeasible();
    return {*g / headroom, true};
  }

  const double pg = user.group == 1 ? alloc.p1 : alloc.p2;
  if (mode == FormulaMode::Literal) {
    const auto g = channel_gain_demand(user, h, sigma2_full, t_noma);
    if (!g) return Epsilon::infeasible();
    return {(cfg.bandwidth_hz / 2.0) * *g / pg, true};
  }
  const double sigma2_sub = n0_w_per_hz * cfg.bandwidth_hz / cfg.g_count;
  const auto g = channel_gain_demand(user, h, sigma2_sub, outage_threshold(cfg, Access::Oma));
  if (!g) return Epsilon::infeasible();
  return {*g / pg, true};
}

double packet_failure(double eps, int v_max) {
  if (std::isinf(eps)) return 1.0;
  double term = 1.0;  // eps^(v-1)/(v-1)! at v = 1
  double sum = 0.0;
  for (int v = 1; v <= v_max; ++v) {
    sum += term;
    term *= eps / v;
  }
  return std::clamp(1.0 - std::exp(-eps) * sum, 0.0, 1.0);
}

double packet_failure(const Epsilon& eps, int v_max) {
  return eps.feasible ? packet_failure(eps.value, v_max) : 1.0;
}

double retransmission_failure(const Epsilon& eps, int v_max, FormulaMode mode) {
  if (mode == FormulaMode::Literal) return packet_failure(eps, v_max);
  return std::pow(packet_failure(eps, 1), v_max);
}

namespace {

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double c = 1.0;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

}  // namespace

double success_noma(std::span<const double> failures, int f) {
  double p = 1.0;
  for (double d : failures) p *= std::pow(1.0 - std::clamp(d, 0.0, 1.0), f);
  return p;
}

double rlnc_user_success(double attempt_failure, int f, int tau, FormulaMode mode) {
  const double d = attempt_failure;
  double tail = 0.0;
  if (mode == FormulaMode::Corrected) {
    if (tau < f)
      throw DomainError("tau=" + std::to_string(tau) + " coded transmissions cannot deliver f=" +
                        std::to_string(f) + " packets");
    for (int i = 0; i < f; ++i)
      tail += binomial(tau, i) * std::pow(1.0 - d, i) * std::pow(d, tau - i);
  } else {
    for (int i = 0; i < f; ++i)
      tail += binomial(f - 1, i) * std::pow(d, tau - i) * std::pow(1.0 - d, i);
  }
  const double s = 1.0 - tail;
  if (std::isnan(s)) return 0.0;
  return std::clamp(s, 0.0, 1.0);
}

double rlnc_decode_success(double attempt_failure, int f, int tau) {
  if (f < 1 || tau < 0) throw DomainError("need f >= 1 and tau >= 0");
  const double d = std::clamp(attempt_failure, 0.0, 1.0);
  double s = 0.0;
  for (int k = f; k <= tau; ++k)
    s += binomial(tau, k) * std::pow(1.0 - d, k) * std::pow(d, tau - k) *
         rlnc::full_rank_probability(static_cast<std::size_t>(f), static_cast<std::size_t>(k));
  return std::clamp(s, 0.0, 1.0);
}

double success_rlnc(std::span<const double> attempt_failures, int f, int tau, FormulaMode mode) {
  double p = 1.0;
  for (double d : attempt_failures) p *= rlnc_user_success(d, f, tau, mode);
  return p;
}

SuccessReport evaluate(Scheme scheme, std::span<const UserTerminal> users,
                       std::span<const double> gains, const PowerAllocation& alloc,
                       const CaptureConfig& cfg, double n0_w_per_hz, const OutageParams& params,
                       FormulaMode mode) {
  if (users.size() != gains.size()) throw DomainError("one gain per user required");
  SuccessReport rep;
  rep.scheme = scheme;
  rep.mode = mode;
  std::vector<double> failures;
  failures.reserve(users.size());
  for (std::size_t i = 0; i < users.size(); ++i) {
    const auto& u = users[i];
    const Epsilon eps = epsilon_for(u, gains[i], alloc, access_of(scheme), cfg, n0_w_per_hz, mode);
    const double attempt = packet_failure(eps, 1);
    const double failure =
        is_rlnc(scheme) ? attempt : retransmission_failure(eps, params.v_max, mode);
    rep.epsilon[u.id] = eps;
    rep.attempt_failure[u.id] = attempt;
    rep.per_user_failure[u.id] = failure;
    failures.push_back(failure);
  }
  rep.total_success = is_rlnc(scheme) ? success_rlnc(failures, params.f, params.tau, mode)
                                      : success_noma(failures, params.f);
  return rep;
}

}  // namespace owcnc::outage

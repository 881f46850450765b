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

#include "owcnc/noma.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "owcnc/errors.hpp"

namespace owcnc::noma {

PowerAllocation allocate_power(double alpha, double p_total, const WarningSink& sink) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw DomainError("power coefficient alpha must lie in (0, 1), got " + std::to_string(alpha));
  if (!(p_total > 0.0)) throw DomainError("total power must be positive");

  PowerAllocation a;
  a.alpha = alpha;
  a.p_total = p_total;
  a.p1 = alpha * p_total;
  a.p2 = p_total - a.p1;
  if (alpha >= 0.5 && sink) {
    std::ostringstream msg;
    msg << "alpha=" << alpha << " gives P1=" << a.p1 << " >= P2=" << a.p2
        << "; weak group no longer receives the larger power";
    sink(Warning{"noma_ordering", msg.str()});
  }
  return a;
}

SuperpositionReport validate_superposition(const SuperpositionConstraint& c) {
  double sum = 0.0;
  for (double a : c.amplitudes) sum += a;
  SuperpositionReport r;
  r.non_negativity_slack = c.i_dc - sum;
  r.eye_safety_slack = (c.a_max - c.i_dc) - sum;
  r.non_negativity_ok = r.non_negativity_slack >= 0.0;
  r.eye_safety_ok = r.eye_safety_slack >= 0.0;
  return r;
}

SuperpositionConstraint default_superposition(const PowerAllocation& alloc) {
  SuperpositionConstraint c;
  c.a_max = 2.0 * std::sqrt(2.0 * alloc.p_total);
  c.i_dc = c.a_max / 2.0;
  c.amplitudes = {std::sqrt(alloc.p1), std::sqrt(alloc.p2)};
  return c;
}

std::map<int, int> assign_groups(const std::map<int, double>& gains, int g_count) {
  if (g_count < 1) throw ConfigError("groups", 0, "group count must be at least 1");
  const auto n = static_cast<int>(gains.size());
  if (n % g_count != 0)
    throw ConfigError("groups", 0,
                      std::to_string(n) + " users cannot be split into " +
                          std::to_string(g_count) + " equal groups");

  std::vector<std::pair<int, double>> order(gains.begin(), gains.end());
  std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second < b.second;
    return a.first < b.first;
  });

  const int block = n / g_count;
  std::map<int, int> out;
  for (int i = 0; i < n; ++i) out[order[static_cast<std::size_t>(i)].first] = g_count - i / block;
  return out;
}

namespace {

double shannon(double bandwidth_hz, double snr) {
  return snr > 0.0 ? bandwidth_hz * std::log2(1.0 + snr) : 0.0;
}

}  // namespace

double rate_noma_strong(const UserTerminal& user, double h, double p1, double sigma2,
                        double bandwidth_hz) {
  const double r2h2 = user.responsivity_a_per_w * user.responsivity_a_per_w * h * h;
  return shannon(bandwidth_hz, user.mu * r2h2 * p1 / sigma2);
}

double rate_noma_weak(const UserTerminal& user, double h, double p1, double p2, double sigma2,
                      double bandwidth_hz) {
  const double r2h2 = user.responsivity_a_per_w * user.responsivity_a_per_w * h * h;
  return shannon(bandwidth_hz, user.mu * r2h2 * p2 / (r2h2 * p1 + sigma2));
}

double rate_oma(const UserTerminal& user, double h, double p_g, double n0_w_per_hz,
                double bandwidth_hz, int g_count) {
  const double sub_band = bandwidth_hz / g_count;
  return rate_noma_strong(user, h, p_g, n0_w_per_hz * sub_band, sub_band);
}

double RateReport::total() const {
  double t = 0.0;
  for (const auto& [g, r] : group_sum_rate) t += r;
  return t;
}

RateReport sum_rates(const PowerAllocation& alloc, std::span<const UserTerminal> users,
                     std::span<const double> gains, const channel::NoiseModel& noise,
                     Access access) {
  if (users.size() != gains.size()) throw DomainError("one gain per user required");
  RateReport rep;
  rep.access = access;
  rep.group_sum_rate[1] = 0.0;
  rep.group_sum_rate[2] = 0.0;
  const double sigma2 = noise.variance();
  for (std::size_t i = 0; i < users.size(); ++i) {
    const auto& u = users[i];
    if (u.group != 1 && u.group != 2)
      throw DomainError("user " + std::to_string(u.id) + " has group " +
                        std::to_string(u.group) + "; expected 1 or 2");
    double r = 0.0;
    if (access == Access::Noma) {
      r = u.group == 1 ? rate_noma_strong(u, gains[i], alloc.p1, sigma2, noise.bandwidth_hz)
                       : rate_noma_weak(u, gains[i], alloc.p1, alloc.p2, sigma2, noise.bandwidth_hz);
    } else {
      const double pg = u.group == 1 ? alloc.p1 : alloc.p2;
      r = rate_oma(u, gains[i], pg, noise.n0_w_per_hz, noise.bandwidth_hz, 2);
    }
    rep.per_user_rate[u.id] = r;
    rep.group_sum_rate[u.group] += r;
  }
  return rep;
}

}  // namespace owcnc::noma

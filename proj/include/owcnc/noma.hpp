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

#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "owcnc/channel.hpp"

namespace owcnc::noma {

using channel::UserTerminal;

struct Warning {
  std::string code;
  std::string message;
};
using WarningSink = std::function<void(const Warning&)>;

// Fixed power split between the strong group (P1 = alpha * Pt) and the weak
// group (P2 = Pt - P1).
struct PowerAllocation {
  double alpha = 0.0;
  double p_total = 0.0;
  double p1 = 0.0;
  double p2 = 0.0;

  // NOMA needs the weak group to get more power than the strong group.
  bool ordering_violated() const { return !(p2 > p1); }
};

// Throws DomainError unless 0 < alpha < 1 and p_total > 0. Reports a
// "noma_ordering" warning through `sink` when alpha >= 0.5.
PowerAllocation allocate_power(double alpha, double p_total, const WarningSink& sink = {});

// Non-negativity (sum sqrt(P_k) <= I_dc) and eye-safety
// (sum sqrt(P_k) <= A - I_dc) limits on the superposed drive signal.
struct SuperpositionConstraint {
  double i_dc = 0.0;
  double a_max = 0.0;
  std::vector<double> amplitudes;  // sqrt(P_k)
};

struct SuperpositionReport {
  bool non_negativity_ok = false;
  double non_negativity_slack = 0.0;
  bool eye_safety_ok = false;
  double eye_safety_slack = 0.0;

  bool ok() const { return non_negativity_ok && eye_safety_ok; }
};

SuperpositionReport validate_superposition(const SuperpositionConstraint& c);

// Default drive limits for a total power budget: A = 2 sqrt(2 Pt) and
// I_dc = A / 2, which admits any two-level split of Pt.
SuperpositionConstraint default_superposition(const PowerAllocation& alloc);

// Sorts users by gain (ties by id) and cuts the ascending order into g_count
// equal blocks. The highest-gain block becomes group 1 (strong) and the
// lowest-gain block group g_count (weak). Throws ConfigError when g_count does
// not divide the user count.
std::map<int, int> assign_groups(const std::map<int, double>& gains, int g_count);

// Strong-group user after SIC: B log2(1 + mu R^2 h^2 P1 / sigma^2).
double rate_noma_strong(const UserTerminal& user, double h, double p1, double sigma2,
                        double bandwidth_hz);

// Weak-group user treating the strong group's signal as noise:
// B log2(1 + mu R^2 h^2 P2 / (R^2 h^2 P1 + sigma^2)).
double rate_noma_weak(const UserTerminal& user, double h, double p1, double p2, double sigma2,
                      double bandwidth_hz);

// Exclusive sub-band B/G with noise N0 B/G:
// (B/G) log2(1 + mu R^2 h^2 Pg / (N0 B/G)).
double rate_oma(const UserTerminal& user, double h, double p_g, double n0_w_per_hz,
                double bandwidth_hz, int g_count);

enum class Access { Noma, Oma };

struct RateReport {
  Access access = Access::Noma;
  std::map<int, double> per_user_rate;
  std::map<int, double> group_sum_rate;

  double total() const;
};

// Per-group sum rates for a two-group layout (group 1 strong, group 2 weak).
// `gains[i]` is the LoS gain of `users[i]`. Throws DomainError for sizes that
// disagree or a group index outside {1, 2}.
RateReport sum_rates(const PowerAllocation& alloc, std::span<const UserTerminal> users,
                     std::span<const double> gains, const channel::NoiseModel& noise,
                     Access access);

}  // namespace owcnc::noma

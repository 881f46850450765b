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

#include <map>
#include <optional>
#include <span>
#include <string_view>

#include "owcnc/channel.hpp"
#include "owcnc/noma.hpp"

namespace owcnc::outage {

using channel::UserTerminal;
using noma::Access;
using noma::PowerAllocation;

// Literal evaluates the reference closed forms verbatim (including the
// OMA (B/2) multiplier, the C(f-1, i) frame coefficient and the Poisson-tail
// retransmission law). Corrected replaces those with self-consistent
// Bernoulli/binomial counterparts that the Monte-Carlo simulator shares.
enum class FormulaMode { Literal, Corrected };

enum class Scheme { Noma, Oma, RlncNoma, RlncOma };

inline constexpr Scheme kAllSchemes[] = {Scheme::Noma, Scheme::Oma, Scheme::RlncNoma,
                                         Scheme::RlncOma};

std::string_view to_string(Scheme s);
std::string_view to_string(FormulaMode m);
std::optional<FormulaMode> parse_formula_mode(std::string_view text);

inline Access access_of(Scheme s) {
  return (s == Scheme::Noma || s == Scheme::RlncNoma) ? Access::Noma : Access::Oma;
}
inline bool is_rlnc(Scheme s) { return s == Scheme::RlncNoma || s == Scheme::RlncOma; }

// Minimum spectral efficiency a packet needs to be captured.
struct CaptureConfig {
  double delta_over_b = 0.5;  // bits/s/Hz
  double bandwidth_hz = 2e7;
  int g_count = 2;
};

// SINR threshold: 2^(delta/B) - 1 for NOMA, 2^(G delta/B) - 1 for OMA where
// each group only has B/G to reach the same throughput.
double outage_threshold(const CaptureConfig& cfg, Access access);

// Outage intensity of one user. An infeasible value stands for an unbounded
// gain demand (zero channel gain, or no SINR headroom for the weak group) and
// always maps to certain failure.
struct Epsilon {
  double value = 0.0;
  bool feasible = true;

  static Epsilon infeasible() { return {0.0, false}; }
};

// Channel-gain demand t sigma^2 / (mu R^2 h^2). nullopt when h == 0.
std::optional<double> channel_gain_demand(const UserTerminal& user, double h, double sigma2,
                                          double t);

// NOMA strong: G/P1. NOMA weak: G/(P2 - P1 t), infeasible when P2 <= P1 t.
// OMA corrected: G_o/P_g with G_o built from the OMA threshold on noise N0 B/G.
// OMA literal: (B/2) G/P_g with G from the NOMA threshold on full-band noise.
Epsilon epsilon_for(const UserTerminal& user, double h, const PowerAllocation& alloc,
                    Access access, const CaptureConfig& cfg, double n0_w_per_hz,
                    FormulaMode mode);

// 1 - exp(-eps) sum_{v=1}^{V} eps^(v-1)/(v-1)!, clamped to [0, 1].
double packet_failure(double eps, int v_max);
double packet_failure(const Epsilon& eps, int v_max);

// Per-packet failure after up to v_max transmissions. Literal: the Poisson
// tail above. Corrected: v_max independent attempts, each failing with
// packet_failure(eps, 1).
double retransmission_failure(const Epsilon& eps, int v_max, FormulaMode mode);

// prod_k (1 - delta_k)^f.
double success_noma(std::span<const double> failures, int f);

// Probability that one user collects enough coded packets. Corrected: at
// least f of tau Bernoulli receptions succeed. Literal: the reference form
// with C(f-1, i), clamped to [0, 1]. Throws DomainError for tau < f in
// corrected mode.
double rlnc_user_success(double attempt_failure, int f, int tau, FormulaMode mode);

// Like the corrected form, but each reception pattern with k >= f arrivals
// only decodes if the k random coefficient vectors span GF(256)^f:
// sum_k C(tau,k) (1-d)^k d^(tau-k) full_rank_probability(f, k).
// This is what the real codec achieves; the binomial form above assumes any f
// arrivals decode.
double rlnc_decode_success(double attempt_failure, int f, int tau);

// Product of rlnc_user_success over users.
double success_rlnc(std::span<const double> attempt_failures, int f, int tau, FormulaMode mode);

struct OutageParams {
  int v_max = 2;
  int tau = 4;
  int f = 3;
};

struct SuccessReport {
  Scheme scheme = Scheme::Noma;
  FormulaMode mode = FormulaMode::Corrected;
  std::map<int, Epsilon> epsilon;
  // Per-transmission failure packet_failure(eps, 1); what the simulator draws.
  std::map<int, double> attempt_failure;
  // Failure entering the closed form: per-packet failure for plain schemes,
  // per-attempt failure for RLNC.
  std::map<int, double> per_user_failure;
  double total_success = 0.0;
};

// Evaluates one scheme for a two-group layout. `gains[i]` belongs to
// `users[i]`.
SuccessReport evaluate(Scheme scheme, std::span<const UserTerminal> users,
                       std::span<const double> gains, const PowerAllocation& alloc,
                       const CaptureConfig& cfg, double n0_w_per_hz, const OutageParams& params,
                       FormulaMode mode);

}  // namespace owcnc::outage

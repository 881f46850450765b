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

#include <cstddef>
#include <cstdint>
#include <vector>

#include "owcnc/outage.hpp"
#include "owcnc/rlnc.hpp"

namespace owcnc::mc {

using outage::Scheme;

struct TrialConfig {
  Scheme scheme = Scheme::Noma;
  // Probability that a single transmission to user i is lost.
  std::vector<double> attempt_failure;
  int f = 3;
  int v_max = 2;
  int tau = 4;
  std::uint64_t trials = 10000;
  std::uint64_t seed = 1;
  std::size_t payload_len = rlnc::kDefaultPayloadLen;
  // 0 picks std::thread::hardware_concurrency(). Results do not depend on it.
  unsigned workers = 1;
};

struct EstimateResult {
  double p_hat = 0.0;
  double std_error = 0.0;
  std::uint64_t successes = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;

  friend bool operator==(const EstimateResult&, const EstimateResult&) = default;
};

// Plain repetition: each of f packets must get through within v_max
// independent attempts, for every user. Throws DomainError for an RLNC
// scheme, trials == 0 or a probability outside [0, 1].
EstimateResult simulate_plain(const TrialConfig& cfg);

// Coded delivery: per trial and user a fresh random generation is encoded
// into tau packets with the GF(2^8) codec, the surviving packets are fed to
// an incremental decoder, and the user succeeds iff the decoder reaches full
// rank and returns the source payloads byte-exact.
EstimateResult simulate_rlnc(const TrialConfig& cfg);

// Dispatches on cfg.scheme.
EstimateResult simulate(const TrialConfig& cfg);

struct Verdict {
  bool pass = false;
  double z = 0.0;
};

// PASS iff |analytic - p_hat| <= 3 * max(stderr, 1/trials).
Verdict compare(double analytic, const EstimateResult& empirical);

}  // namespace owcnc::mc

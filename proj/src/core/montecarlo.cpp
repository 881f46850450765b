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

#include "owcnc/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <thread>

#include "owcnc/errors.hpp"
#include "owcnc/keyed_rng.hpp"

namespace owcnc::mc {

namespace {

enum Stream : std::uint64_t { kAttempts = 1, kArrivals = 2, kCoefficients = 3, kPayload = 4 };

void validate(const TrialConfig& cfg) {
  if (cfg.trials == 0) throw DomainError("trial count must be at least 1");
  if (cfg.f < 1 || cfg.v_max < 1 || cfg.tau < 1)
    throw DomainError("f, v_max and tau must be at least 1");
  for (double q : cfg.attempt_failure)
    if (!(q >= 0.0 && q <= 1.0)) throw DomainError("attempt failure probabilities must lie in [0, 1]");
}

// Runs `trial(i)` for i in [0, trials) split across workers and sums the
// successes. Each trial keys its own random streams, so the split does not
// affect the outcome.
std::uint64_t run_trials(const TrialConfig& cfg, const std::function<bool(std::uint64_t)>& trial) {
  unsigned workers = cfg.workers == 0 ? std::max(1U, std::thread::hardware_concurrency()) : cfg.workers;
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, cfg.trials));
  if (workers <= 1) {
    std::uint64_t ok = 0;
    for (std::uint64_t i = 0; i < cfg.trials; ++i) ok += trial(i) ? 1 : 0;
    return ok;
  }
  std::vector<std::uint64_t> counts(workers, 0);
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    const std::uint64_t chunk = (cfg.trials + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        const std::uint64_t begin = w * chunk;
        const std::uint64_t end = std::min(cfg.trials, begin + chunk);
        std::uint64_t ok = 0;
        for (std::uint64_t i = begin; i < end; ++i) ok += trial(i) ? 1 : 0;
        counts[w] = ok;
      });
    }
  }
  std::uint64_t total = 0;
  for (auto c : counts) total += c;
  return total;
}

EstimateResult finish(const TrialConfig& cfg, std::uint64_t successes) {
  EstimateResult r;
  r.successes = successes;
  r.trials = cfg.trials;
  r.seed = cfg.seed;
  r.p_hat = static_cast<double>(successes) / static_cast<double>(cfg.trials);
  r.std_error = std::sqrt(r.p_hat * (1.0 - r.p_hat) / static_cast<double>(cfg.trials));
  return r;
}

}  // namespace

EstimateResult simulate_plain(const TrialConfig& cfg) {
  if (outage::is_rlnc(cfg.scheme)) throw DomainError("simulate_plain needs the NOMA or OMA scheme");
  validate(cfg);
  const auto trial = [&](std::uint64_t t) {
    for (std::size_t u = 0; u < cfg.attempt_failure.size(); ++u) {
      auto rng = KeyedRng::derive(cfg.seed, t, u, kAttempts);
      const double q = cfg.attempt_failure[u];
      for (int packet = 0; packet < cfg.f; ++packet) {
        bool delivered = false;
        for (int a = 0; a < cfg.v_max && !delivered; ++a) delivered = !rng.bernoulli(q);
        if (!delivered) return false;
      }
    }
    return true;
  };
  return finish(cfg, run_trials(cfg, trial));
}

EstimateResult simulate_rlnc(const TrialConfig& cfg) {
  if (!outage::is_rlnc(cfg.scheme)) throw DomainError("simulate_rlnc needs an RLNC scheme");
  validate(cfg);
  if (cfg.payload_len == 0) throw DomainError("payload length must be at least 1");
  const auto f = static_cast<std::size_t>(cfg.f);
  const auto tau = static_cast<std::size_t>(cfg.tau);

  const auto trial = [&](std::uint64_t t) {
    std::vector<char> arrived(tau);
    for (std::size_t u = 0; u < cfg.attempt_failure.size(); ++u) {
      auto arrivals = KeyedRng::derive(cfg.seed, t, u, kArrivals);
      std::size_t received = 0;
      for (std::size_t k = 0; k < tau; ++k) {
        arrived[k] = arrivals.bernoulli(cfg.attempt_failure[u]) ? 0 : 1;
        received += static_cast<std::size_t>(arrived[k]);
      }
      if (received < f) return false;

      auto coeff_rng = KeyedRng::derive(cfg.seed, t, u, kCoefficients);
      auto payload_rng = KeyedRng::derive(cfg.seed, t, u, kPayload);
      const auto gen = rlnc::Generation::random(f, cfg.payload_len, payload_rng);

      // Every coded packet is produced; lost ones never reach the decoder.
      rlnc::DecoderState decoder(f, cfg.payload_len);
      for (std::size_t k = 0; k < tau; ++k) {
        const auto pkt = rlnc::encode(gen, coeff_rng);
        if (arrived[k]) decoder.absorb(pkt);
      }
      if (!decoder.complete() || decoder.decode() != gen) return false;
    }
    return true;
  };
  return finish(cfg, run_trials(cfg, trial));
}

EstimateResult simulate(const TrialConfig& cfg) {
  return outage::is_rlnc(cfg.scheme) ? simulate_rlnc(cfg) : simulate_plain(cfg);
}

Verdict compare(double analytic, const EstimateResult& empirical) {
  const double floor = empirical.trials > 0 ? 1.0 / static_cast<double>(empirical.trials) : 1.0;
  const double se = std::max(empirical.std_error, floor);
  const double diff = empirical.p_hat - analytic;
  return {std::abs(diff) <= 3.0 * se, diff / se};
}

}  // namespace owcnc::mc

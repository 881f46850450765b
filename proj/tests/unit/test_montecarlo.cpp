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

#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "owcnc/errors.hpp"
#include "owcnc/montecarlo.hpp"
#include "owcnc/outage.hpp"

using namespace owcnc;
using namespace owcnc::mc;

namespace {

// P(k uniform vectors in GF(256)^f span the space), written as the count of
// ordered bases extended one vector at a time.
double spans(int f, int k) {
  if (k < f) return 0.0;
  double p = 1.0;
  for (int i = 0; i < f; ++i) p *= 1.0 - std::pow(256.0, i - k);
  return p;
}

// Exact coded-delivery success of one user: sum over the 2^tau arrival
// patterns of P(pattern) * P(arrived vectors span).
double coded_oracle(double q, int f, int tau) {
  double total = 0.0;
  for (unsigned mask = 0; mask < (1U << tau); ++mask) {
    const int k = std::popcount(mask);
    total += std::pow(1.0 - q, k) * std::pow(q, tau - k) * spans(f, k);
  }
  return total;
}

bool within(double analytic, const EstimateResult& r) { return compare(analytic, r).pass; }

}  // namespace

TEST_CASE("plain delivery") {
  TrialConfig cfg;
  cfg.scheme = Scheme::Noma;
  cfg.trials = 2000;

  cfg.attempt_failure = {0.0, 0.0, 0.0};
  auto r = simulate_plain(cfg);
  CHECK(r.p_hat == 1.0);
  CHECK(r.std_error == 0.0);
  CHECK(r.successes == 2000);

  cfg.attempt_failure = {1.0, 0.0};
  CHECK(simulate_plain(cfg).p_hat == 0.0);

  SUBCASE("two attempts at one packet") {
    cfg.trials = 100000;
    cfg.f = 1;
    cfg.v_max = 2;
    for (double q : {0.1, 0.4, 0.75}) {
      cfg.attempt_failure = {q};
      cfg.seed = 17;
      CHECK(within(1.0 - q * q, simulate_plain(cfg)));
    }
  }
  SUBCASE("several users and packets") {
    cfg.trials = 100000;
    cfg.attempt_failure = {0.2, 0.35, 0.05};
    cfg.f = 3;
    cfg.v_max = 2;
    double expect = 1.0;
    for (double q : cfg.attempt_failure) expect *= std::pow(1.0 - q * q, 3);
    CHECK(within(expect, simulate(cfg)));
  }
  SUBCASE("converges with more trials") {
    cfg.f = 2;
    cfg.v_max = 2;
    cfg.attempt_failure = {0.3, 0.3};
    const double expect = std::pow(1.0 - 0.09, 4);
    cfg.trials = 10000;
    const auto small = simulate_plain(cfg);
    cfg.trials = 1000000;
    const auto large = simulate_plain(cfg);
    CHECK(large.std_error < small.std_error);
    CHECK(std::abs(large.p_hat - expect) <= 3 * large.std_error);
  }
  SUBCASE("rejects bad input") {
    cfg.trials = 0;
    CHECK_THROWS_AS(simulate_plain(cfg), DomainError);
    cfg.trials = 10;
    cfg.attempt_failure = {1.5};
    CHECK_THROWS_AS(simulate_plain(cfg), DomainError);
    cfg.attempt_failure = {0.5};
    cfg.scheme = Scheme::RlncNoma;
    CHECK_THROWS_AS(simulate_plain(cfg), DomainError);
  }
}

TEST_CASE("coded delivery") {
  TrialConfig cfg;
  cfg.scheme = Scheme::RlncNoma;
  cfg.trials = 100000;
  cfg.payload_len = 8;

  SUBCASE("lossless: only linear dependence fails") {
    cfg.attempt_failure = {0.0, 0.0};
    const auto r = simulate_rlnc(cfg);
    CHECK(within(std::pow(spans(3, 4), 2), r));
    CHECK(r.p_hat >= 0.9998);
  }
  SUBCASE("single user, q = 1/2, f = 2, tau = 4") {
    cfg.attempt_failure = {0.5};
    cfg.f = 2;
    cfg.tau = 4;
    const double expect = coded_oracle(0.5, 2, 4);
    CHECK(expect == doctest::Approx(0.68602562321780169528).epsilon(1e-14));
    // the rank correction is visible but tiny
    CHECK(expect < 11.0 / 16.0);
    CHECK(outage::rlnc_decode_success(0.5, 2, 4) == doctest::Approx(expect).epsilon(1e-14));
    CHECK(within(expect, simulate_rlnc(cfg)));
  }
  SUBCASE("matches the enumeration across losses") {
    cfg.trials = 40000;
    for (double q : {0.05, 0.3, 0.6}) {
      CHECK(outage::rlnc_decode_success(q, 3, 4) == doctest::Approx(coded_oracle(q, 3, 4)).epsilon(1e-14));
      cfg.attempt_failure = {q, q / 2};
      cfg.seed = static_cast<std::uint64_t>(q * 1000);
      CHECK(within(coded_oracle(q, 3, 4) * coded_oracle(q / 2, 3, 4), simulate(cfg)));
    }
  }
  SUBCASE("tau below f never decodes") {
    cfg.trials = 500;
    cfg.tau = 2;
    cfg.attempt_failure = {0.0};
    CHECK(simulate_rlnc(cfg).p_hat == 0.0);
    TrialConfig plain = cfg;
    plain.scheme = Scheme::Noma;
    CHECK(simulate_rlnc(cfg).p_hat <= simulate_plain(plain).p_hat);
  }
  SUBCASE("total loss") {
    cfg.trials = 100;
    cfg.attempt_failure = {1.0};
    CHECK(simulate_rlnc(cfg).p_hat == 0.0);
  }
  SUBCASE("rejects plain schemes") {
    cfg.scheme = Scheme::Oma;
    CHECK_THROWS_AS(simulate_rlnc(cfg), DomainError);
  }
}

TEST_CASE("results do not depend on the worker count") {
  for (auto scheme : outage::kAllSchemes) {
    TrialConfig cfg;
    cfg.scheme = scheme;
    cfg.attempt_failure = {0.2, 0.1, 0.3};
    cfg.trials = 5001;
    cfg.seed = 99;
    cfg.payload_len = 4;
    cfg.workers = 1;
    const auto base = simulate(cfg);
    CHECK(simulate(cfg) == base);
    for (unsigned w : {2U, 3U, 8U, 0U}) {
      cfg.workers = w;
      CHECK(simulate(cfg) == base);
    }
    cfg.seed = 100;
    CHECK(simulate(cfg).successes != base.successes);
  }
}

TEST_CASE("compare") {
  EstimateResult exact{1.0, 0.0, 100, 100, 1};
  auto v = compare(1.0, exact);
  CHECK(v.pass);
  CHECK(v.z == 0.0);

  EstimateResult half{0.505, 0.005, 5050, 10000, 1};
  CHECK(compare(0.5, half).pass);
  half.p_hat = 0.495;
  CHECK(compare(0.5, half).pass);

  EstimateResult off{0.5, 0.005, 5000, 10000, 1};
  v = compare(0.9, off);
  CHECK_FALSE(v.pass);
  CHECK(std::abs(v.z) == doctest::Approx(80.0));

  // zero-width interval is floored at 1/trials
  EstimateResult none{0.0, 0.0, 0, 1000, 1};
  CHECK(compare(0.002, none).pass);
  CHECK_FALSE(compare(0.004, none).pass);
}

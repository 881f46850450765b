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

// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "owcnc/gf256.hpp"
#include "owcnc/keyed_rng.hpp"
#include "owcnc/montecarlo.hpp"
#include "owcnc/noma.hpp"
#include "owcnc/outage.hpp"
#include "owcnc/rlnc.hpp"
#include "owcnc/scenario.hpp"
#include "owcnc/sweep.hpp"

using namespace owcnc;
using outage::Scheme;
using sweep::index_of;

namespace {

int g_failed = 0;

void verdict(int id, const char* name, bool pass, const std::string& detail) {
  std::printf("[%s] %d %s: %s\n", pass ? "PASS" : "FAIL", id, name, detail.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failed;
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Acceptance grid: paper-adjusted profile, alpha 0.05..0.45 in steps of 0.05.
scenario::ScenarioConfig acceptance_config(std::uint64_t trials, outage::FormulaMode mode) {
  auto cfg = scenario::defaults_for(scenario::kProfilePaperAdjusted);
  cfg.alpha_start = 0.05;
  cfg.alpha_stop = 0.45;
  cfg.alpha_steps = 9;
  cfg.trials = trials;
  cfg.formula_mode = mode;
  return cfg;
}

void field_correctness() {
  using gf256::FieldElement;
  const Stopwatch sw;
  long bad = 0;
  for (unsigned a = 0; a < 256; ++a)
    for (unsigned b = 0; b < 256; ++b)
      bad += gf256::gf_mul(FieldElement(a), FieldElement(b)) != gf256::gf_mul(FieldElement(b), FieldElement(a));
  for (unsigned a = 1; a < 256; ++a) {
    const FieldElement x(static_cast<std::uint8_t>(a));
    bad += gf256::gf_mul(x, gf256::gf_inv(x)) != FieldElement{1};
  }
  KeyedRng rng(0xacce55);
  for (int i = 0; i < 10000; ++i) {
    const FieldElement a{rng.next_byte()}, b{rng.next_byte()}, c{rng.next_byte()};
    bad += (a * b) * c != a * (b * c);
    bad += a * (b + c) != a * b + a * c;
  }
  const double t = sw.seconds();
  verdict(1, "field correctness", bad == 0 && t < 1.0,
          fmt("%ld violations over 65536 pairs, 255 inverses, 10^4 triples; %.3f s (limit 1 s)", bad, t));
}

void codec_oracle() {
  const Stopwatch sw;
  mc::TrialConfig cfg;
  cfg.scheme = Scheme::RlncNoma;
  cfg.attempt_failure = {0.0};
  cfg.f = 3;
  cfg.tau = 4;
  cfg.trials = 100000;
  cfg.seed = 2;
  const auto r = mc::simulate_rlnc(cfg);
  const double p = rlnc::full_rank_probability(3, 4);
  const bool close = mc::compare(p, r).pass;
  const double t = sw.seconds();
  verdict(2, "codec oracle", r.p_hat >= 0.9998 && close && t < 10.0,
          fmt("p_hat %.6f (%llu/%llu) vs full-rank %.7f, stderr %.2e, %s 3se; %.2f s (limit 10 s)", r.p_hat,
              static_cast<unsigned long long>(r.successes), static_cast<unsigned long long>(r.trials), p,
              r.std_error, close ? "within" : "outside", t));
}

// Closed-form RLNC success that also charges for rank-deficient coefficient
// matrices, for the informational comparison in criterion 3.
double rank_aware_rlnc(const scenario::ScenarioConfig& cfg, Scheme s, double alpha) {
  const auto users = sweep::scenario_users(cfg);
  const auto gains = sweep::channel_gains(cfg, users);
  const auto rep = outage::evaluate(s, users, gains, noma::allocate_power(alpha, cfg.ap.max_optical_power_w),
                                    {cfg.delta_over_b, cfg.bandwidth_hz, 2}, cfg.n0_w_per_hz,
                                    {cfg.v_max, cfg.tau, cfg.f}, cfg.formula_mode);
  double p = 1.0;
  for (const auto& [id, q] : rep.attempt_failure) p *= outage::rlnc_decode_success(q, cfg.f, cfg.tau);
  return p;
}

void analytic_vs_mc(const scenario::ScenarioConfig& cfg, const sweep::SweepResult& res, double seconds) {
  int pass = 0, total = 0, rank_pass = 0, rank_total = 0;
  std::string misses;
  for (const auto& rec : res.records)
    for (Scheme s : outage::kAllSchemes) {
      const auto& e = rec.empirical[index_of(s)];
      if (!e) continue;
      ++total;
      const auto v = mc::compare(rec.analytic[index_of(s)], *e);
      if (v.pass) ++pass;
      else misses += fmt(" %s@%.2f(z=%.2f)", std::string(outage::to_string(s)).c_str(), rec.alpha, v.z);
      if (outage::is_rlnc(s)) {
        ++rank_total;
        rank_pass += mc::compare(rank_aware_rlnc(cfg, s, rec.alpha), *e).pass;
      }
    }
  verdict(3, "analytic vs Monte-Carlo", total == 36 && pass >= 34 && seconds < 120.0,
          fmt("%d/%d within 3se (need 34/36)%s; %.1f s single-threaded (limit 120 s) | informational: "
              "RLNC vs rank-aware closed form %d/%d within 3se",
              pass, total, misses.empty() ? "" : (";" + misses).c_str(), seconds, rank_pass, rank_total));
}

void coding_gain(const sweep::SweepResult& res, const sweep::SweepResult& literal) {
  auto check = [](const sweep::SweepResult& r, std::string& worst) {
    int ok = 0;
    double worst_gap = 0.0;
    for (const auto& rec : r.records) {
      const double gap = rec.analytic[index_of(Scheme::RlncNoma)] - rec.analytic[index_of(Scheme::Noma)];
      if (gap >= 0.0) ++ok;
      if (gap < worst_gap) {
        worst_gap = gap;
        worst = fmt("alpha %.2f: rlnc_noma %.6f < noma %.6f", rec.alpha, rec.analytic[index_of(Scheme::RlncNoma)],
                    rec.analytic[index_of(Scheme::Noma)]);
      }
    }
    return ok;
  };
  std::string worst, worst_literal;
  const int ok = check(res, worst);
  const int ok_literal = check(literal, worst_literal);
  const auto n = static_cast<int>(res.records.size());
  verdict(4, "coding gain RLNC-NOMA >= NOMA", ok == n,
          fmt("corrected: %d/%d grid points hold%s%s | literal (informational): %d/%d", ok, n,
              worst.empty() ? "" : "; worst ", worst.c_str(), ok_literal, n));
}

void peak_location(const sweep::SweepResult& res) {
  const double a = res.summary.argmax_alpha_rlnc_noma;
  verdict(5, "RLNC-NOMA peak location", a >= 0.20 - 1e-12 && a <= 0.45 + 1e-12,
          fmt("argmax alpha %.2f (success %.6f), required in [0.20, 0.45]; reference %.2f", a,
              res.summary.max_success_rlnc_noma, sweep::kReportedBestAlpha));
}

void sum_rate_trends(const sweep::SweepResult& res) {
  bool g1_up = true, g2_down = true, noma_wins = true;
  std::string detail;
  for (std::size_t i = 0; i < res.records.size(); ++i) {
    const auto& r = res.records[i];
    if (i > 0) {
      const auto& p = res.records[i - 1];
      g1_up = g1_up && r.sumrate_noma_g1 > p.sumrate_noma_g1;
      g2_down = g2_down && r.sumrate_noma_g2 < p.sumrate_noma_g2;
    }
    if (r.alpha >= 0.10 - 1e-12) {
      const double noma = r.sumrate_noma_g1 + r.sumrate_noma_g2;
      const double oma = r.sumrate_oma_g1 + r.sumrate_oma_g2;
      if (!(noma >= oma)) {
        noma_wins = false;
        detail += fmt(" alpha %.2f NOMA %.4g < OMA %.4g;", r.alpha, noma, oma);
      }
    }
  }
  const auto& first = res.records.front();
  const auto& last = res.records.back();
  verdict(6, "sum-rate trends", g1_up && g2_down && noma_wins,
          fmt("group 1 %s (%.4g -> %.4g), group 2 %s (%.4g -> %.4g), NOMA >= OMA on [0.10, 0.45]: %s%s",
              g1_up ? "strictly increasing" : "NOT increasing", first.sumrate_noma_g1, last.sumrate_noma_g1,
              g2_down ? "strictly decreasing" : "NOT decreasing", first.sumrate_noma_g2, last.sumrate_noma_g2,
              noma_wins ? "yes" : "no", detail.c_str()));
}

void spot_values() {
  const double pf = outage::packet_failure(1.0, 2);
  const double pf_expect = 1.0 - 2.0 / std::exp(1.0);
  const std::vector<double> half{0.5, 0.5};
  const double sn = outage::success_noma(half, 1);
  const double sr = outage::rlnc_user_success(0.5, 2, 4, outage::FormulaMode::Corrected);
  const bool pass = std::abs(pf - pf_expect) < 1e-12 && sn == 0.25 && sr == 11.0 / 16.0;
  verdict(7, "closed-form spot values", pass,
          fmt("packet_failure(1,2)=%.15f (1-2/e=%.15f); success_noma=%.17g; rlnc per user=%.17g (11/16)", pf,
              pf_expect, sn, sr));
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void determinism() {
  auto cfg = acceptance_config(5000, outage::FormulaMode::Corrected);
  cfg.seed = 20240601;
  const auto dir = std::filesystem::temp_directory_path() / "owcnc_acceptance";
  std::filesystem::create_directories(dir);
  const auto a = dir / "run_a.csv", b = dir / "run_b.csv", c = dir / "run_c.csv";
  sweep::emit_csv(sweep::run_sweep(cfg, 1), a.string());
  sweep::emit_csv(sweep::run_sweep(cfg, 1), b.string());
  sweep::emit_csv(sweep::run_sweep(cfg, 4), c.string());
  const auto sa = slurp(a), sb = slurp(b), sc = slurp(c);
  std::filesystem::remove_all(dir);
  verdict(8, "determinism", !sa.empty() && sa == sb && sa == sc,
          fmt("two runs with 1 worker %s, 1 vs 4 workers %s (%zu bytes)", sa == sb ? "identical" : "DIFFER",
              sa == sc ? "identical" : "DIFFER", sa.size()));
}

void mode_audit() {
  auto cfg = scenario::defaults_for(scenario::kProfilePaperAdjusted);
  cfg.formula_mode = outage::FormulaMode::Literal;
  cfg.trials = 0;
  const auto res = sweep::run_sweep(cfg);
  bool clamped = true;
  for (const auto& r : res.records)
    for (std::size_t s = 0; s < sweep::kSchemeCount; ++s)
      for (double p : {r.analytic[s], r.analytic_other_mode[s]})
        clamped = clamped && p >= 0.0 && p <= 1.0;
  verdict(9, "literal vs corrected audit", res.records.size() == 19 && clamped,
          fmt("literal sweep over %zu grid points, outputs within [0,1]: %s; max mode deviation %.6f",
              res.records.size(), clamped ? "yes" : "no", res.summary.max_mode_deviation));
}

}  // namespace

int main() {
  field_correctness();
  codec_oracle();

  const auto cfg = acceptance_config(100000, outage::FormulaMode::Corrected);
  const Stopwatch sw;
  const auto corrected = sweep::run_sweep(cfg, 1);
  analytic_vs_mc(cfg, corrected, sw.seconds());

  const auto literal = sweep::run_sweep(acceptance_config(0, outage::FormulaMode::Literal), 1);
  coding_gain(corrected, literal);
  peak_location(corrected);
  sum_rate_trends(corrected);
  spot_values();
  determinism();
  mode_audit();

  std::printf("%d of 9 criteria failed\n", g_failed);
  return g_failed ? 1 : 0;
}

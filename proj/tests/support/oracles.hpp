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

// Independent reference computations for tests. Nothing here calls into the
// library; each routine takes a different route to the same quantity.

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <vector>

namespace oracle {

// GF(2^8) through discrete logarithms with generator 0x03 under 0x11B.
class LogTables {
 public:
  LogTables() {
    unsigned x = 1;
    for (unsigned i = 0; i < 255; ++i) {
      exp_[i] = static_cast<std::uint8_t>(x);
      log_[x] = static_cast<std::uint8_t>(i);
      // x *= 3, i.e. x ^ xtime(x)
      unsigned xt = x << 1;
      if (xt & 0x100U) xt ^= 0x11BU;
      x ^= xt;
    }
  }

  std::uint8_t mul(std::uint8_t a, std::uint8_t b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[(log_[a] + log_[b]) % 255];
  }

  // Brute-force search, not the log identity.
  std::uint8_t inv(std::uint8_t a) const {
    for (unsigned b = 1; b < 256; ++b)
      if (mul(a, static_cast<std::uint8_t>(b)) == 1) return static_cast<std::uint8_t>(b);
    return 0;
  }

 private:
  std::array<std::uint8_t, 255> exp_{};
  std::array<std::uint8_t, 256> log_{};
};

inline const LogTables& gf() {
  static const LogTables t;
  return t;
}

using Matrix = std::vector<std::vector<std::uint8_t>>;

// Dense row reduction over GF(2^8) on a copy.
inline std::size_t rank(Matrix m) {
  const auto& g = gf();
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    const auto inv = g.inv(m[r][c]);
    for (auto& v : m[r]) v = g.mul(v, inv);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const auto f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] ^= g.mul(f, m[r][j]);
    }
    ++r;
  }
  return r;
}

// Leibniz expansion; signs vanish in characteristic 2.
inline std::uint8_t determinant(const Matrix& m) {
  const auto& g = gf();
  std::vector<std::size_t> perm(m.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::uint8_t det = 0;
  do {
    std::uint8_t term = 1;
    for (std::size_t i = 0; i < m.size(); ++i) term = g.mul(term, m[i][perm[i]]);
    det ^= term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

// P(at least `need` of `n` independent attempts succeed) by enumerating all
// 2^n outcome patterns.
inline double at_least_by_enumeration(int n, int need, double p_success) {
  double total = 0.0;
  for (unsigned mask = 0; mask < (1U << n); ++mask) {
    const int k = std::popcount(mask);
    if (k < need) continue;
    total += std::pow(p_success, k) * std::pow(1.0 - p_success, n - k);
  }
  return total;
}

// LoS gain computed from the angle first: m from ln(1/2)/ln(cos phi_half),
// angle from atan2(horizontal, vertical).
inline double los_gain(double ap_x, double ap_y, double ap_z, double x, double y, double z,
                       double semi_angle_deg, double fov_deg, double area) {
  const double horizontal = std::hypot(x - ap_x, y - ap_y);
  const double vertical = ap_z - z;
  const double angle = std::atan2(horizontal, vertical);
  if (angle * 180.0 / std::numbers::pi > fov_deg) return 0.0;
  const double m = std::log(0.5) / std::log(std::cos(semi_angle_deg * std::numbers::pi / 180.0));
  const double d2 = horizontal * horizontal + vertical * vertical;
  return (m + 1.0) * area / (2.0 * std::numbers::pi * d2) * std::pow(std::cos(angle), m + 1.0);
}

}  // namespace oracle

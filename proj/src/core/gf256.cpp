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

#include "owcnc/gf256.hpp"

#include <cassert>

#include "owcnc/errors.hpp"

namespace owcnc::gf256 {

namespace {

MulTable build_mul_table() {
  MulTable t{};
  for (unsigned a = 0; a < 256; ++a)
    for (unsigned b = 0; b < 256; ++b)
      t[a][b] = mul_slow(static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b));
  return t;
}

std::array<std::uint8_t, 256> build_inv_table(const MulTable& mul) {
  std::array<std::uint8_t, 256> inv{};
  for (unsigned a = 1; a < 256; ++a)
    for (unsigned b = 1; b < 256; ++b)
      if (mul[a][b] == 1) {
        inv[a] = static_cast<std::uint8_t>(b);
        break;
      }
  return inv;
}

const std::array<std::uint8_t, 256>& inv_table() {
  static const auto table = build_inv_table(mul_table());
  return table;
}

}  // namespace

const MulTable& mul_table() {
  static const MulTable table = build_mul_table();
  return table;
}

FieldElement gf_inv(FieldElement a) {
  if (a.is_zero()) throw DomainError("no inverse of zero");
  return FieldElement{inv_table()[a.value]};
}

void axpy(std::span<std::uint8_t> dst, std::span<const std::uint8_t> src, FieldElement coeff) {
  assert(dst.size() == src.size());
  if (coeff.is_zero()) return;
  if (coeff.value == 1) {
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] ^= src[i];
    return;
  }
  const auto& row = mul_table()[coeff.value];
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] ^= row[src[i]];
}

void scale(std::span<std::uint8_t> row, FieldElement coeff) {
  if (coeff.value == 1) return;
  const auto& m = mul_table()[coeff.value];
  for (auto& b : row) b = m[b];
}

}  // namespace owcnc::gf256

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

#include <array>
#include <cstdint>
#include <span>

namespace owcnc::gf256 {

// Reduction polynomial x^8 + x^4 + x^3 + x + 1.
inline constexpr unsigned kReductionPolynomial = 0x11B;

// One element of GF(2^8). Addition is XOR, multiplication is carry-less
// polynomial multiplication reduced modulo kReductionPolynomial.
struct FieldElement {
  std::uint8_t value = 0;

  constexpr FieldElement() = default;
  constexpr explicit FieldElement(std::uint8_t v) : value(v) {}

  constexpr bool is_zero() const { return value == 0; }
  friend constexpr bool operator==(FieldElement, FieldElement) = default;
};

// Reference multiplication by shift-and-reduce; used to build the lookup
// table and available for constant evaluation.
constexpr std::uint8_t mul_slow(std::uint8_t a, std::uint8_t b) {
  unsigned acc = 0;
  unsigned x = a;
  for (unsigned y = b; y != 0; y >>= 1) {
    if (y & 1U) acc ^= x;
    x <<= 1;
    if (x & 0x100U) x ^= kReductionPolynomial;
  }
  return static_cast<std::uint8_t>(acc);
}

// Full 256x256 product table; row `a` holds a*b for every b.
using MulTable = std::array<std::array<std::uint8_t, 256>, 256>;
const MulTable& mul_table();

inline FieldElement gf_add(FieldElement a, FieldElement b) {
  return FieldElement{static_cast<std::uint8_t>(a.value ^ b.value)};
}

inline FieldElement gf_mul(FieldElement a, FieldElement b) {
  return FieldElement{mul_table()[a.value][b.value]};
}

// Throws DomainError("no inverse of zero") for a == 0.
FieldElement gf_inv(FieldElement a);

inline FieldElement operator+(FieldElement a, FieldElement b) { return gf_add(a, b); }
inline FieldElement operator*(FieldElement a, FieldElement b) { return gf_mul(a, b); }

// dst[i] ^= coeff * src[i]. Spans must have equal length.
void axpy(std::span<std::uint8_t> dst, std::span<const std::uint8_t> src, FieldElement coeff);

// row[i] = coeff * row[i].
void scale(std::span<std::uint8_t> row, FieldElement coeff);

}  // namespace owcnc::gf256

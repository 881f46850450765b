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
#include <span>
#include <string>
#include <vector>

#include "owcnc/gf256.hpp"
#include "owcnc/keyed_rng.hpp"

namespace owcnc::rlnc {

using gf256::FieldElement;

inline constexpr std::size_t kDefaultPayloadLen = 64;

// A frame of f equally sized source packets.
class Generation {
 public:
  // Throws StructuralError unless f >= 1, payload_len >= 1 and every payload
  // has length payload_len.
  explicit Generation(std::vector<std::vector<std::uint8_t>> payloads);
  Generation(std::size_t f, std::size_t payload_len, std::vector<std::uint8_t> flat);

  static Generation random(std::size_t f, std::size_t payload_len, KeyedRng& rng);

  std::size_t size() const { return f_; }
  std::size_t payload_len() const { return len_; }
  std::span<const std::uint8_t> payload(std::size_t i) const {
    return {data_.data() + i * len_, len_};
  }
  std::span<const std::uint8_t> flat() const { return data_; }

  friend bool operator==(const Generation&, const Generation&) = default;

 private:
  std::size_t f_;
  std::size_t len_;
  std::vector<std::uint8_t> data_;
};

struct CodedPacket {
  std::vector<FieldElement> coeffs;
  std::vector<std::uint8_t> payload;

  friend bool operator==(const CodedPacket&, const CodedPacket&) = default;
};

// Linear combination of the generation with caller-chosen coefficients.
// Throws StructuralError if coeffs.size() != gen.size().
CodedPacket combine(const Generation& gen, std::span<const FieldElement> coeffs);

// Draws gen.size() coefficients uniformly from all 256 field values (zero
// included) and combines.
CodedPacket encode(const Generation& gen, KeyedRng& rng);

// Incremental Gauss-Jordan decoder. Rows are kept in reduced row-echelon
// form, each row storing [coeffs | payload]. Slot p holds the row whose pivot
// is column p, so a full-rank state is the identity matrix.
class DecoderState {
 public:
  DecoderState(std::size_t f, std::size_t payload_len);

  // Returns true iff the packet was innovative (rank grew by one).
  // Throws StructuralError on coefficient or payload length mismatch.
  bool absorb(const CodedPacket& pkt);

  std::size_t rank() const { return rank_; }
  std::size_t generation_size() const { return f_; }
  std::size_t payload_len() const { return len_; }
  bool complete() const { return rank() == f_; }

  // Throws InsufficientRankError when rank() < f.
  Generation decode() const;

  // One line per stored row: "pivot=<col> <coeff hex> | <payload hex>".
  std::string to_hex() const;

  bool has_pivot(std::size_t col) const { return occupied_[col] != 0; }
  std::span<const std::uint8_t> row(std::size_t pivot) const {
    return {rows_.data() + pivot * width(), width()};
  }

 private:
  std::size_t width() const { return f_ + len_; }
  std::span<std::uint8_t> slot(std::size_t pivot) {
    return {rows_.data() + pivot * width(), width()};
  }

  std::size_t f_;
  std::size_t len_;
  std::size_t rank_ = 0;
  std::vector<std::uint8_t> rows_;
  std::vector<std::uint8_t> occupied_;
  std::vector<std::uint8_t> scratch_;
};

// Probability that tau uniformly random coefficient vectors over GF(256)
// span an f-dimensional space: prod_{i=0}^{f-1} (1 - 256^(i - tau)).
// Returns 0 when tau < f.
double full_rank_probability(std::size_t f, std::size_t tau);

}  // namespace owcnc::rlnc

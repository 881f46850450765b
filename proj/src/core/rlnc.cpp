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

#include "owcnc/rlnc.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "owcnc/errors.hpp"

namespace owcnc::rlnc {

Generation::Generation(std::vector<std::vector<std::uint8_t>> payloads) {
  if (payloads.empty()) throw StructuralError("generation needs at least one packet");
  f_ = payloads.size();
  len_ = payloads.front().size();
  if (len_ == 0) throw StructuralError("payload length must be at least 1");
  data_.reserve(f_ * len_);
  for (const auto& p : payloads) {
    if (p.size() != len_) throw StructuralError("payloads in a generation must share one length");
    data_.insert(data_.end(), p.begin(), p.end());
  }
}

Generation::Generation(std::size_t f, std::size_t payload_len, std::vector<std::uint8_t> flat)
    : f_(f), len_(payload_len), data_(std::move(flat)) {
  if (f_ == 0) throw StructuralError("generation needs at least one packet");
  if (len_ == 0) throw StructuralError("payload length must be at least 1");
  if (data_.size() != f_ * len_) throw StructuralError("flat payload buffer has wrong size");
}

Generation Generation::random(std::size_t f, std::size_t payload_len, KeyedRng& rng) {
  std::vector<std::uint8_t> flat(f * payload_len);
  for (auto& b : flat) b = rng.next_byte();
  return Generation(f, payload_len, std::move(flat));
}

CodedPacket combine(const Generation& gen, std::span<const FieldElement> coeffs) {
  if (coeffs.size() != gen.size())
    throw StructuralError("coefficient vector length " + std::to_string(coeffs.size()) +
                          " does not match generation size " + std::to_string(gen.size()));
  CodedPacket pkt;
  pkt.coeffs.assign(coeffs.begin(), coeffs.end());
  pkt.payload.assign(gen.payload_len(), 0);
  for (std::size_t i = 0; i < gen.size(); ++i) gf256::axpy(pkt.payload, gen.payload(i), coeffs[i]);
  return pkt;
}

CodedPacket encode(const Generation& gen, KeyedRng& rng) {
  std::vector<FieldElement> coeffs(gen.size());
  for (auto& c : coeffs) c = FieldElement{rng.next_byte()};
  return combine(gen, coeffs);
}

DecoderState::DecoderState(std::size_t f, std::size_t payload_len)
    : f_(f), len_(payload_len), rows_(f * (f + payload_len), 0), occupied_(f, 0) {
  if (f_ == 0) throw StructuralError("generation needs at least one packet");
  if (len_ == 0) throw StructuralError("payload length must be at least 1");
}

bool DecoderState::absorb(const CodedPacket& pkt) {
  if (pkt.coeffs.size() != f_)
    throw StructuralError("coefficient vector length " + std::to_string(pkt.coeffs.size()) +
                          " does not match generation size " + std::to_string(f_));
  if (pkt.payload.size() != len_)
    throw StructuralError("payload length " + std::to_string(pkt.payload.size()) +
                          " does not match decoder payload length " + std::to_string(len_));
  if (complete()) return false;

  scratch_.resize(width());
  for (std::size_t i = 0; i < f_; ++i) scratch_[i] = pkt.coeffs[i].value;
  std::copy(pkt.payload.begin(), pkt.payload.end(), scratch_.begin() + static_cast<std::ptrdiff_t>(f_));

  // Forward reduction against existing pivots.
  for (std::size_t p = 0; p < f_; ++p) {
    if (!occupied_[p] || scratch_[p] == 0) continue;
    gf256::axpy(scratch_, row(p), FieldElement{scratch_[p]});
  }

  std::size_t pivot = f_;
  for (std::size_t i = 0; i < f_; ++i)
    if (scratch_[i] != 0) {
      pivot = i;
      break;
    }
  if (pivot == f_) return false;

  gf256::scale(scratch_, gf256::gf_inv(FieldElement{scratch_[pivot]}));

  // Back substitution keeps every other row clear in the new pivot column.
  for (std::size_t p = 0; p < f_; ++p) {
    if (!occupied_[p]) continue;
    auto r = slot(p);
    if (r[pivot] != 0) gf256::axpy(r, scratch_, FieldElement{r[pivot]});
  }

  std::copy(scratch_.begin(), scratch_.end(), slot(pivot).begin());
  occupied_[pivot] = 1;
  ++rank_;
  return true;
}

Generation DecoderState::decode() const {
  if (!complete()) throw InsufficientRankError(rank_, f_);
  std::vector<std::uint8_t> flat;
  flat.reserve(f_ * len_);
  for (std::size_t p = 0; p < f_; ++p) {
    auto r = row(p);
    flat.insert(flat.end(), r.begin() + static_cast<std::ptrdiff_t>(f_), r.end());
  }
  return Generation(f_, len_, std::move(flat));
}

std::string DecoderState::to_hex() const {
  std::string out;
  char buf[4];
  for (std::size_t p = 0; p < f_; ++p) {
    if (!occupied_[p]) continue;
    out += "pivot=" + std::to_string(p);
    auto r = row(p);
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i < f_) out += ' ';
      else if (i == f_) out += " | ";
      std::snprintf(buf, sizeof buf, "%02x", r[i]);
      out += buf;
    }
    out += '\n';
  }
  return out;
}

double full_rank_probability(std::size_t f, std::size_t tau) {
  if (tau < f) return 0.0;
  double p = 1.0;
  for (std::size_t i = 0; i < f; ++i)
    p *= 1.0 - std::pow(256.0, static_cast<double>(i) - static_cast<double>(tau));
  return p;
}

}  // namespace owcnc::rlnc

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

#include <cstdint>
#include <limits>

namespace owcnc {

// Counter-based generator: output n is a fixed bijective mix of (key, n), so
// a stream is fully determined by its key and draws from different keys never
// interact. Keys are derived from a run seed plus structural coordinates
// (trial, user, stream), which makes simulation output independent of the
// order in which trials are executed.
class KeyedRng {
 public:
  using result_type = std::uint64_t;

  explicit KeyedRng(std::uint64_t key) : key_(key) {}

  static KeyedRng derive(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0,
                         std::uint64_t c = 0) {
    std::uint64_t k = mix(seed ^ 0x6a09e667f3bcc909ULL);
    k = mix(k ^ a);
    k = mix(k ^ (b + 0x3c6ef372fe94f82bULL));
    k = mix(k ^ (c + 0xa54ff53a5f1d36f1ULL));
    return KeyedRng(k);
  }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() { return mix(key_ + (++counter_) * kGamma); }

  // Uniform on [0, 1) with 53 bits of resolution.
  double uniform01() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform01() < p; }

  std::uint8_t next_byte() {
    if (buffered_ == 0) {
      buffer_ = (*this)();
      buffered_ = 8;
    }
    auto b = static_cast<std::uint8_t>(buffer_);
    buffer_ >>= 8;
    --buffered_;
    return b;
  }

  // splitmix64 finaliser.
  static constexpr std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  std::uint64_t buffer_ = 0;
  unsigned buffered_ = 0;
};

}  // namespace owcnc

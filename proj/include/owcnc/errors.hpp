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
#include <stdexcept>
#include <string>

namespace owcnc {

// Input outside a function's mathematical domain (negative power, angle out
// of range, inverse of zero, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Shape mismatch between objects that must agree (coefficient vector length
// vs. generation size, ragged payloads).
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Decoding attempted before the decoder holds f independent rows.
class InsufficientRankError : public std::runtime_error {
 public:
  InsufficientRankError(std::size_t rank, std::size_t needed)
      : std::runtime_error("insufficient degrees of freedom: rank " + std::to_string(rank) +
                           " of " + std::to_string(needed)),
        rank_(rank),
        needed_(needed) {}

  std::size_t rank() const noexcept { return rank_; }
  std::size_t needed() const noexcept { return needed_; }

 private:
  std::size_t rank_;
  std::size_t needed_;
};

// Scenario configuration problem. `line` is 0 when the error did not come
// from a file (e.g. a command-line override).
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string key, std::size_t line, const std::string& what)
      : std::runtime_error(format(key, line, what)), key_(std::move(key)), line_(line), detail_(what) {}

  const std::string& key() const noexcept { return key_; }
  std::size_t line() const noexcept { return line_; }
  // The message without the line/key prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  static std::string format(const std::string& key, std::size_t line, const std::string& what) {
    std::string out;
    if (line > 0) out += "line " + std::to_string(line) + ": ";
    if (!key.empty()) out += "key '" + key + "': ";
    return out + what;
  }

  std::string key_;
  std::size_t line_;
  std::string detail_;
};

class IoError : public std::runtime_error {
 public:
  IoError(const std::string& path, const std::string& what)
      : std::runtime_error(path + ": " + what), path_(path) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace owcnc

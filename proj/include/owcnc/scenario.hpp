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
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "owcnc/channel.hpp"
#include "owcnc/outage.hpp"

namespace owcnc::scenario {

inline constexpr std::string_view kProfileTable1 = "table1";
inline constexpr std::string_view kProfilePaperAdjusted = "paper-adjusted";

struct UserSpec {
  int id = 0;
  channel::Vec3 position{};
  int group = 1;
  // Unset fields fall back to the scenario-wide receiver defaults.
  std::optional<double> fov_deg;
  std::optional<double> pd_area_m2;
  std::optional<double> responsivity_a_per_w;
  std::optional<double> mu;

  friend bool operator==(const UserSpec&, const UserSpec&) = default;
};

enum class Grouping { Fixed, Sorted };

// Everything one sweep needs. Defaults are the reference system parameters;
// see apply_profile() for the profiles.
struct ScenarioConfig {
  std::string profile{kProfileTable1};
  channel::Vec3 room{5.0, 5.0, 3.0};
  double cell_size_m = 3.6;  // informational
  channel::AccessPoint ap{};

  double fov_deg = 35.0;
  double pd_area_m2 = 1e-4;
  double responsivity_a_per_w = 0.4;
  double mu = 1.0;
  std::vector<UserSpec> users;

  double n0_w_per_hz = 1e-21;
  double bandwidth_hz = 2e7;
  double delta_over_b = 0.5;
  int f = 3;
  int v_max = 2;
  int tau = 4;

  double alpha_start = 0.05;
  double alpha_stop = 0.95;
  int alpha_steps = 19;

  std::uint64_t trials = 10000;
  std::uint64_t seed = 1;
  std::size_t payload_len = 64;
  outage::FormulaMode formula_mode = outage::FormulaMode::Corrected;
  Grouping grouping = Grouping::Fixed;

  // Drive-current limits for the superposition check; 0 derives them from the
  // LED power.
  double i_dc = 0.0;
  double a_max = 0.0;

  // Users with every receiver field filled in.
  std::vector<channel::UserTerminal> resolved_users() const;
  std::vector<double> alpha_grid() const;

  friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;
};

// The ten receivers of the reference layout: five near users in group 1 and
// five far users in group 2, ids 1..10.
std::vector<UserSpec> table1_users();

// Built-in defaults for a profile. "table1" keeps the reference 35 degree
// field of view; "paper-adjusted" widens it to 60 degrees so that every
// reference user position is actually inside the receiver FoV.
// Throws ConfigError for an unknown profile name.
ScenarioConfig defaults_for(std::string_view profile);

// Parses flat `key = value` text. `#` starts a comment. The `profile` key,
// if present, selects the base defaults before any other key applies; an
// explicit `profile_override` wins over it. Any `user.N.*` key replaces the
// built-in user list. Throws ConfigError with key name and line number.
ScenarioConfig parse_config(std::string_view text,
                            std::optional<std::string_view> profile_override = std::nullopt);

// Reads a UTF-8 file and parses it. Throws IoError if unreadable.
ScenarioConfig load_config(const std::string& path,
                           std::optional<std::string_view> profile_override = std::nullopt);

// Applies one `key = value` setting (command-line overrides use this with
// line 0). `profile` is not accepted here; use defaults_for().
void apply_setting(ScenarioConfig& cfg, std::string_view key, std::string_view value,
                   std::size_t line = 0);

// Cross-field validation. Throws ConfigError.
void validate(const ScenarioConfig& cfg);

// Text that parse_config() turns back into an equal ScenarioConfig.
std::string dump_config(const ScenarioConfig& cfg);

}  // namespace owcnc::scenario

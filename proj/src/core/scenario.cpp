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

#include "owcnc/scenario.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "owcnc/errors.hpp"

namespace owcnc::scenario {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void malformed(std::string_view key, std::size_t line, std::string_view value,
                            std::string_view expected) {
  throw ConfigError(std::string(key), line,
                    "malformed value '" + std::string(value) + "', expected " +
                        std::string(expected));
}

double parse_double(std::string_view key, std::string_view value, std::size_t line) {
  value = trim(value);
  double out = 0.0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size() || !std::isfinite(out))
    malformed(key, line, value, "a number");
  return out;
}

template <class Int>
Int parse_int(std::string_view key, std::string_view value, std::size_t line) {
  value = trim(value);
  Int out{};
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size())
    malformed(key, line, value, "an integer");
  return out;
}

channel::Vec3 parse_vec3(std::string_view key, std::string_view value, std::size_t line) {
  double xyz[3];
  std::size_t start = 0;
  for (int i = 0; i < 3; ++i) {
    const auto comma = value.find(',', start);
    const bool last = i == 2;
    if (last != (comma == std::string_view::npos)) malformed(key, line, value, "x,y,z");
    xyz[i] = parse_double(key, value.substr(start, last ? std::string_view::npos : comma - start),
                          line);
    start = comma + 1;
  }
  return {xyz[0], xyz[1], xyz[2]};
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt(const channel::Vec3& v) { return fmt(v.x) + "," + fmt(v.y) + "," + fmt(v.z); }

UserSpec& user_slot(ScenarioConfig& cfg, int id) {
  for (auto& u : cfg.users)
    if (u.id == id) return u;
  UserSpec u;
  u.id = id;
  // keep users ordered by id
  auto it = cfg.users.begin();
  while (it != cfg.users.end() && it->id < id) ++it;
  return *cfg.users.insert(it, u);
}

// Splits "user.<N>.<field>"; returns false if `key` is not a user key.
bool split_user_key(std::string_view key, std::size_t line, int& id, std::string_view& field) {
  constexpr std::string_view prefix = "user.";
  if (key.substr(0, prefix.size()) != prefix) return false;
  const auto rest = key.substr(prefix.size());
  const auto dot = rest.find('.');
  if (dot == std::string_view::npos) throw ConfigError(std::string(key), line, "expected user.<N>.<field>");
  id = parse_int<int>(key, rest.substr(0, dot), line);
  if (id < 1) throw ConfigError(std::string(key), line, "user index must be at least 1");
  field = rest.substr(dot + 1);
  return true;
}

void check(bool ok, const std::string& key, const std::string& what) {
  if (!ok) throw ConfigError(key, 0, what);
}

void check_fov(double v, const std::string& key) {
  check(v > 0.0 && v <= 90.0, key, "field of view must lie in (0, 90] degrees, got " + fmt(v));
}

void check_positive(double v, const std::string& key) {
  check(v > 0.0, key, "must be positive, got " + fmt(v));
}

}  // namespace

std::vector<UserSpec> table1_users() {
  const double z = 0.85;
  const channel::Vec3 near[] = {{1.5, 2.5, z}, {2.0, 2.5, z}, {2.5, 2.5, z}, {3.0, 2.5, z}, {3.5, 2.5, z}};
  const channel::Vec3 far[] = {{2.5, 3.0, z}, {3.0, 3.0, z}, {3.5, 3.0, z}, {4.0, 3.0, z}, {4.5, 3.0, z}};
  std::vector<UserSpec> users;
  int id = 1;
  for (const auto& p : near) users.push_back(UserSpec{id++, p, 1, {}, {}, {}, {}});
  for (const auto& p : far) users.push_back(UserSpec{id++, p, 2, {}, {}, {}, {}});
  return users;
}

ScenarioConfig defaults_for(std::string_view profile) {
  ScenarioConfig cfg;
  cfg.users = table1_users();
  if (profile == kProfileTable1) {
    cfg.profile = std::string(kProfileTable1);
  } else if (profile == kProfilePaperAdjusted) {
    cfg.profile = std::string(kProfilePaperAdjusted);
    cfg.fov_deg = 60.0;
  } else {
    throw ConfigError("profile", 0,
                      "unknown profile '" + std::string(profile) + "', expected table1 or paper-adjusted");
  }
  return cfg;
}

std::vector<channel::UserTerminal> ScenarioConfig::resolved_users() const {
  std::vector<channel::UserTerminal> out;
  out.reserve(users.size());
  for (const auto& u : users) {
    channel::UserTerminal t;
    t.id = u.id;
    t.position = u.position;
    t.group = u.group;
    t.fov_deg = u.fov_deg.value_or(fov_deg);
    t.pd_area_m2 = u.pd_area_m2.value_or(pd_area_m2);
    t.responsivity_a_per_w = u.responsivity_a_per_w.value_or(responsivity_a_per_w);
    t.mu = u.mu.value_or(mu);
    out.push_back(t);
  }
  return out;
}

std::vector<double> ScenarioConfig::alpha_grid() const {
  std::vector<double> grid;
  if (alpha_steps < 1) return grid;
  if (alpha_steps == 1) return {alpha_start};
  // Interior points are snapped to 12 decimals so a decimal grid hits its
  // nominal values exactly (0.05 + 9 * 0.05 would otherwise fall short of 0.5).
  const double step = (alpha_stop - alpha_start) / (alpha_steps - 1);
  grid.push_back(alpha_start);
  for (int i = 1; i + 1 < alpha_steps; ++i)
    grid.push_back(std::round((alpha_start + i * step) * 1e12) / 1e12);
  grid.push_back(alpha_stop);
  return grid;
}

void apply_setting(ScenarioConfig& cfg, std::string_view key, std::string_view value,
                   std::size_t line) {
  value = trim(value);
  const std::string k(key);
  int uid = 0;
  std::string_view field;
  if (split_user_key(key, line, uid, field)) {
    auto& u = user_slot(cfg, uid);
    if (field == "pos") u.position = parse_vec3(key, value, line);
    else if (field == "group") u.group = parse_int<int>(key, value, line);
    else if (field == "fov") u.fov_deg = parse_double(key, value, line);
    else if (field == "pd_area") u.pd_area_m2 = parse_double(key, value, line);
    else if (field == "responsivity") u.responsivity_a_per_w = parse_double(key, value, line);
    else if (field == "mu") u.mu = parse_double(key, value, line);
    else throw ConfigError(k, line, "unknown user field '" + std::string(field) + "'");
    return;
  }

  if (k == "room") cfg.room = parse_vec3(key, value, line);
  else if (k == "cell_size") cfg.cell_size_m = parse_double(key, value, line);
  else if (k == "ap.pos") cfg.ap.position = parse_vec3(key, value, line);
  else if (k == "ap.semi_angle") cfg.ap.semi_angle_half_power_deg = parse_double(key, value, line);
  else if (k == "ap.power") cfg.ap.max_optical_power_w = parse_double(key, value, line);
  else if (k == "fov") cfg.fov_deg = parse_double(key, value, line);
  else if (k == "pd_area") cfg.pd_area_m2 = parse_double(key, value, line);
  else if (k == "responsivity") cfg.responsivity_a_per_w = parse_double(key, value, line);
  else if (k == "mu") cfg.mu = parse_double(key, value, line);
  else if (k == "n0") cfg.n0_w_per_hz = parse_double(key, value, line);
  else if (k == "bandwidth") cfg.bandwidth_hz = parse_double(key, value, line);
  else if (k == "delta_over_b") cfg.delta_over_b = parse_double(key, value, line);
  else if (k == "f") cfg.f = parse_int<int>(key, value, line);
  else if (k == "v_max") cfg.v_max = parse_int<int>(key, value, line);
  else if (k == "tau") cfg.tau = parse_int<int>(key, value, line);
  else if (k == "alpha_start") cfg.alpha_start = parse_double(key, value, line);
  else if (k == "alpha_stop") cfg.alpha_stop = parse_double(key, value, line);
  else if (k == "alpha_steps") cfg.alpha_steps = parse_int<int>(key, value, line);
  else if (k == "trials") cfg.trials = parse_int<std::uint64_t>(key, value, line);
  else if (k == "seed") cfg.seed = parse_int<std::uint64_t>(key, value, line);
  else if (k == "payload_len") cfg.payload_len = parse_int<std::size_t>(key, value, line);
  else if (k == "i_dc") cfg.i_dc = parse_double(key, value, line);
  else if (k == "a_max") cfg.a_max = parse_double(key, value, line);
  else if (k == "formula_mode") {
    const auto m = outage::parse_formula_mode(value);
    if (!m) malformed(key, line, value, "literal or corrected");
    cfg.formula_mode = *m;
  } else if (k == "grouping") {
    if (value == "fixed") cfg.grouping = Grouping::Fixed;
    else if (value == "sorted") cfg.grouping = Grouping::Sorted;
    else malformed(key, line, value, "fixed or sorted");
  } else if (k == "profile") {
    throw ConfigError(k, line, "profile must be chosen before other settings");
  } else {
    throw ConfigError(k, line, "unknown key");
  }
}

void validate(const ScenarioConfig& cfg) {
  check(cfg.room.x > 0 && cfg.room.y > 0 && cfg.room.z > 0, "room", "room dimensions must be positive");
  check_positive(cfg.cell_size_m, "cell_size");
  check(cfg.ap.semi_angle_half_power_deg > 0.0 && cfg.ap.semi_angle_half_power_deg < 90.0,
        "ap.semi_angle", "half-power semi-angle must lie in (0, 90) degrees, got " +
                             fmt(cfg.ap.semi_angle_half_power_deg));
  check_positive(cfg.ap.max_optical_power_w, "ap.power");
  check_fov(cfg.fov_deg, "fov");
  check_positive(cfg.pd_area_m2, "pd_area");
  check_positive(cfg.responsivity_a_per_w, "responsivity");
  check_positive(cfg.mu, "mu");

  check(!cfg.users.empty(), "user", "at least one user is required");
  for (const auto& u : cfg.users) {
    const std::string p = "user." + std::to_string(u.id) + ".";
    check(u.group == 1 || u.group == 2, p + "group", "group must be 1 or 2, got " + std::to_string(u.group));
    check(u.position.z < cfg.ap.position.z, p + "pos", "user must be below the access point");
    if (u.fov_deg) check_fov(*u.fov_deg, p + "fov");
    if (u.pd_area_m2) check_positive(*u.pd_area_m2, p + "pd_area");
    if (u.responsivity_a_per_w) check_positive(*u.responsivity_a_per_w, p + "responsivity");
    if (u.mu) check_positive(*u.mu, p + "mu");
  }

  check_positive(cfg.n0_w_per_hz, "n0");
  check_positive(cfg.bandwidth_hz, "bandwidth");
  check_positive(cfg.delta_over_b, "delta_over_b");
  check(cfg.f >= 1, "f", "frame size must be at least 1");
  check(cfg.v_max >= 1, "v_max", "must be at least 1");
  check(cfg.tau >= 1, "tau", "must be at least 1");
  check(cfg.formula_mode == outage::FormulaMode::Literal || cfg.tau >= cfg.f, "tau",
        "corrected formulas need tau >= f");
  check(cfg.alpha_steps >= 1, "alpha_steps", "must be at least 1");
  check(cfg.alpha_start > 0.0 && cfg.alpha_start < 1.0, "alpha_start", "must lie in (0, 1)");
  check(cfg.alpha_stop > 0.0 && cfg.alpha_stop < 1.0, "alpha_stop", "must lie in (0, 1)");
  check(cfg.alpha_start <= cfg.alpha_stop, "alpha_stop", "must not be below alpha_start");
  check(cfg.payload_len >= 1, "payload_len", "must be at least 1");
  check(cfg.i_dc >= 0.0, "i_dc", "must not be negative");
  check(cfg.a_max >= 0.0, "a_max", "must not be negative");
}

ScenarioConfig parse_config(std::string_view text, std::optional<std::string_view> profile_override) {
  struct Entry {
    std::string key;
    std::string value;
    std::size_t line;
  };
  std::vector<Entry> entries;
  std::optional<Entry> profile_entry;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    auto line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError(std::string(trim(line)), line_no, "expected 'key = value'");
    Entry e{std::string(trim(line.substr(0, eq))), std::string(trim(line.substr(eq + 1))), line_no};
    if (e.key.empty()) throw ConfigError("", line_no, "missing key before '='");
    if (e.key == "profile") profile_entry = e;
    else entries.push_back(std::move(e));
  }

  ScenarioConfig cfg;
  if (profile_override) {
    cfg = defaults_for(*profile_override);
  } else if (profile_entry) {
    try {
      cfg = defaults_for(profile_entry->value);
    } catch (const ConfigError&) {
      throw ConfigError("profile", profile_entry->line,
                        "unknown profile '" + profile_entry->value + "', expected table1 or paper-adjusted");
    }
  } else {
    cfg = defaults_for(kProfileTable1);
  }

  std::map<std::string, std::size_t> lines;
  std::map<int, std::set<std::string>> user_fields;
  bool custom_users = false;
  for (const auto& e : entries) {
    int uid = 0;
    std::string_view field;
    if (split_user_key(e.key, e.line, uid, field)) {
      if (!custom_users) {
        cfg.users.clear();
        custom_users = true;
      }
      user_fields[uid].insert(std::string(field));
    }
    apply_setting(cfg, e.key, e.value, e.line);
    lines[e.key] = e.line;
  }
  for (const auto& [uid, fields] : user_fields)
    for (const char* required : {"pos", "group"})
      if (!fields.count(required)) {
        const std::string key = "user." + std::to_string(uid) + "." + required;
        const std::string any = "user." + std::to_string(uid) + "." + *fields.begin();
        throw ConfigError(key, lines[any], "missing required user setting");
      }

  try {
    validate(cfg);
  } catch (const ConfigError& e) {
    const auto it = lines.find(e.key());
    if (it == lines.end()) throw;
    throw ConfigError(e.key(), it->second, e.detail());
  }
  return cfg;
}

ScenarioConfig load_config(const std::string& path, std::optional<std::string_view> profile_override) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path, "cannot open config file");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError(path, "read error");
  return parse_config(buf.str(), profile_override);
}

std::string dump_config(const ScenarioConfig& cfg) {
  std::ostringstream o;
  o << "profile = " << cfg.profile << '\n'
    << "room = " << fmt(cfg.room) << '\n'
    << "cell_size = " << fmt(cfg.cell_size_m) << '\n'
    << "ap.pos = " << fmt(cfg.ap.position) << '\n'
    << "ap.semi_angle = " << fmt(cfg.ap.semi_angle_half_power_deg) << '\n'
    << "ap.power = " << fmt(cfg.ap.max_optical_power_w) << '\n'
    << "fov = " << fmt(cfg.fov_deg) << '\n'
    << "pd_area = " << fmt(cfg.pd_area_m2) << '\n'
    << "responsivity = " << fmt(cfg.responsivity_a_per_w) << '\n'
    << "mu = " << fmt(cfg.mu) << '\n';
  for (const auto& u : cfg.users) {
    const std::string p = "user." + std::to_string(u.id) + ".";
    o << p << "pos = " << fmt(u.position) << '\n' << p << "group = " << u.group << '\n';
    if (u.fov_deg) o << p << "fov = " << fmt(*u.fov_deg) << '\n';
    if (u.pd_area_m2) o << p << "pd_area = " << fmt(*u.pd_area_m2) << '\n';
    if (u.responsivity_a_per_w) o << p << "responsivity = " << fmt(*u.responsivity_a_per_w) << '\n';
    if (u.mu) o << p << "mu = " << fmt(*u.mu) << '\n';
  }
  o << "n0 = " << fmt(cfg.n0_w_per_hz) << '\n'
    << "bandwidth = " << fmt(cfg.bandwidth_hz) << '\n'
    << "delta_over_b = " << fmt(cfg.delta_over_b) << '\n'
    << "f = " << cfg.f << '\n'
    << "v_max = " << cfg.v_max << '\n'
    << "tau = " << cfg.tau << '\n'
    << "alpha_start = " << fmt(cfg.alpha_start) << '\n'
    << "alpha_stop = " << fmt(cfg.alpha_stop) << '\n'
    << "alpha_steps = " << cfg.alpha_steps << '\n'
    << "trials = " << cfg.trials << '\n'
    << "seed = " << cfg.seed << '\n'
    << "payload_len = " << cfg.payload_len << '\n'
    << "formula_mode = " << outage::to_string(cfg.formula_mode) << '\n'
    << "grouping = " << (cfg.grouping == Grouping::Fixed ? "fixed" : "sorted") << '\n'
    << "i_dc = " << fmt(cfg.i_dc) << '\n'
    << "a_max = " << fmt(cfg.a_max) << '\n';
  return o.str();
}

}  // namespace owcnc::scenario

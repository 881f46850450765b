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

#include "owcnc/channel.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "owcnc/errors.hpp"

namespace owcnc::channel {

namespace {

constexpr double deg2rad(double deg) { return deg * std::numbers::pi / 180.0; }
constexpr double rad2deg(double rad) { return rad * 180.0 / std::numbers::pi; }

}  // namespace

double lambert_index(double semi_angle_half_power_deg) {
  if (!(semi_angle_half_power_deg > 0.0 && semi_angle_half_power_deg < 90.0))
    throw DomainError("half-power semi-angle must lie in (0, 90) degrees, got " +
                      std::to_string(semi_angle_half_power_deg));
  return -1.0 / std::log2(std::cos(deg2rad(semi_angle_half_power_deg)));
}

ChannelGain los_gain(const AccessPoint& ap, const UserTerminal& user) {
  const double dx = user.position.x - ap.position.x;
  const double dy = user.position.y - ap.position.y;
  const double dz = ap.position.z - user.position.z;
  const double d = std::sqrt(dx * dx + dy * dy + dz * dz);
  if (d == 0.0) throw DomainError("user " + std::to_string(user.id) + " coincides with the AP");
  if (!(dz > 0.0))
    throw DomainError("user " + std::to_string(user.id) + " is not below the AP plane");

  const double m = lambert_index(ap.semi_angle_half_power_deg);
  const double cos_angle = dz / d;
  const double angle = rad2deg(std::acos(cos_angle));

  ChannelGain g;
  g.distance_m = d;
  g.irradiance_angle_deg = angle;
  g.incidence_angle_deg = angle;
  g.in_fov = angle <= user.fov_deg;
  if (g.in_fov) {
    g.h = (m + 1.0) * user.pd_area_m2 / (2.0 * std::numbers::pi * d * d) *
          std::pow(cos_angle, m) * cos_angle;
  }
  return g;
}

double noise_variance(double n0_w_per_hz, double bandwidth_hz) {
  if (!(n0_w_per_hz > 0.0)) throw DomainError("noise spectral density must be positive");
  if (!(bandwidth_hz > 0.0)) throw DomainError("bandwidth must be positive");
  return n0_w_per_hz * bandwidth_hz;
}

}  // namespace owcnc::channel

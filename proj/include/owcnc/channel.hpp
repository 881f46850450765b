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

namespace owcnc::channel {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  friend bool operator==(const Vec3&, const Vec3&) = default;
};

// Ceiling LED transmitter.
struct AccessPoint {
  Vec3 position{2.5, 2.5, 3.0};
  double semi_angle_half_power_deg = 60.0;
  double max_optical_power_w = 1.0;
  friend bool operator==(const AccessPoint&, const AccessPoint&) = default;
};

// Receiver with its photodiode normal pointing straight up.
struct UserTerminal {
  int id = 0;
  Vec3 position{};
  double fov_deg = 35.0;
  double pd_area_m2 = 1e-4;
  double responsivity_a_per_w = 0.4;
  double mu = 1.0;
  int group = 1;
};

struct ChannelGain {
  double h = 0.0;
  double distance_m = 0.0;
  double irradiance_angle_deg = 0.0;
  double incidence_angle_deg = 0.0;
  bool in_fov = false;
};

struct NoiseModel {
  double n0_w_per_hz = 1e-21;
  double bandwidth_hz = 2e7;

  double variance() const { return n0_w_per_hz * bandwidth_hz; }
};

// Lambertian order m = -1 / log2(cos(phi_half)). Throws DomainError unless
// 0 < phi_half < 90 degrees.
double lambert_index(double semi_angle_half_power_deg);

// Line-of-sight DC gain
//   h = (m+1) A / (2 pi d^2) cos^m(phi) cos(psi)   for psi <= FoV, else 0.
// With an upward-facing receiver and a downward-facing LED, irradiance angle
// phi and incidence angle psi coincide.
// Throws DomainError if the user is not strictly below the AP.
ChannelGain los_gain(const AccessPoint& ap, const UserTerminal& user);

// sigma^2 = N0 * B. Throws DomainError on non-positive input.
double noise_variance(double n0_w_per_hz, double bandwidth_hz);

}  // namespace owcnc::channel

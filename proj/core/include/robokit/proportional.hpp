// Copyright 2026 The Robokit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <string_view>

#include "robokit/motion.hpp"
#include "robokit/pose2d.hpp"

namespace robokit {

enum class PropPhase { kAlign, kDrive, kFinalRotate, kDone };

std::string_view to_string(PropPhase phase);

struct ProportionalGains {
  double k_lin = 1.0;                   // 1/s
  double k_ang = 2.0;                   // 1/s
  double bearing_threshold = 0.0349066; // rad (2 deg)
  double distance_threshold = 0.005;    // m
  double heading_threshold = 0.00872665;// rad (0.5 deg)

  void validate() const;
};

struct ProportionalOutput {
  ControlCommand cmd;
  PropPhase next = PropPhase::kAlign;
};

/// One step of the rotate / drive / rotate position controller. The
/// returned command is clamped to the velocity limits and rate-limited
/// against `previous` so successive commands respect the acceleration
/// limits.
ProportionalOutput proportional_step(const Pose2D& state, const Pose2D& goal,
                                     PropPhase phase,
                                     const ProportionalGains& gains,
                                     const BaseLimits& limits,
                                     const ControlCommand& previous, double dt);

/// Feedback law used to track a reference trajectory: feedforward plus
/// along-track and heading corrections.
ControlCommand proportional_track_step(const Pose2D& state,
                                       const Pose2D& reference,
                                       const ControlCommand& reference_control,
                                       const ProportionalGains& gains,
                                       const BaseLimits& limits);

}  // namespace robokit

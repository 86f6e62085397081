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
#include "robokit/proportional.hpp"

#include <cmath>

#include "robokit/errors.hpp"

namespace robokit {

std::string_view to_string(PropPhase phase) {
  switch (phase) {
    case PropPhase::kAlign: return "align";
    case PropPhase::kDrive: return "drive";
    case PropPhase::kFinalRotate: return "final_rotate";
    case PropPhase::kDone: return "done";
  }
  return "unknown";
}

void ProportionalGains::validate() const {
  if (!(k_lin > 0.0)) throw ValidationError("k_lin", "must be positive");
  if (!(k_ang > 0.0)) throw ValidationError("k_ang", "must be positive");
  if (!(bearing_threshold > 0.0)) {
    throw ValidationError("bearing_threshold", "must be positive");
  }
  if (!(distance_threshold > 0.0)) {
    throw ValidationError("distance_threshold", "must be positive");
  }
  if (!(heading_threshold > 0.0)) {
    throw ValidationError("heading_threshold", "must be positive");
  }
}

ProportionalOutput proportional_step(const Pose2D& state, const Pose2D& goal,
                                     PropPhase phase,
                                     const ProportionalGains& gains,
                                     const BaseLimits& limits,
                                     const ControlCommand& previous, double dt) {
  const double dx = goal.x - state.x;
  const double dy = goal.y - state.y;
  const double distance = std::hypot(dx, dy);
  const double bearing_error =
      distance > 0.0 ? wrap_angle(std::atan2(dy, dx) - state.theta) : 0.0;

  if ((phase == PropPhase::kAlign || phase == PropPhase::kDrive) &&
      distance < gains.distance_threshold) {
    phase = PropPhase::kFinalRotate;
  }
  if (phase == PropPhase::kAlign &&
      std::abs(bearing_error) < gains.bearing_threshold) {
    phase = PropPhase::kDrive;
  }
  if (phase == PropPhase::kFinalRotate &&
      std::abs(wrap_angle(goal.theta - state.theta)) < gains.heading_threshold) {
    phase = PropPhase::kDone;
  }

  ControlCommand raw;
  switch (phase) {
    case PropPhase::kAlign:
      raw.w = gains.k_ang * bearing_error;
      break;
    case PropPhase::kDrive: {
      // Past the goal the robot backs up instead of turning around.
      double steer = bearing_error;
      if (std::abs(steer) > 0.5 * std::numbers::pi) {
        steer = wrap_angle(steer - std::numbers::pi);
      }
      raw.v = gains.k_lin * distance * std::cos(bearing_error);
      raw.w = gains.k_ang * steer;
      break;
    }
    case PropPhase::kFinalRotate:
      raw.w = gains.k_ang * wrap_angle(goal.theta - state.theta);
      break;
    case PropPhase::kDone:
      break;
  }
  return {limit_command(raw, previous, limits, dt), phase};
}

ControlCommand proportional_track_step(const Pose2D& state,
                                       const Pose2D& reference,
                                       const ControlCommand& reference_control,
                                       const ProportionalGains& gains,
                                       const BaseLimits& limits) {
  const double c = std::cos(reference.theta);
  const double s = std::sin(reference.theta);
  const double along = c * (reference.x - state.x) + s * (reference.y - state.y);
  const double heading = wrap_angle(reference.theta - state.theta);
  return clamp_velocity({reference_control.v + gains.k_lin * along,
                         reference_control.w + gains.k_ang * heading},
                        limits);
}

}  // namespace robokit

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

#include <string>
#include <vector>

#include "robokit/motion.hpp"
#include "robokit/pose2d.hpp"

namespace robokit {

/// Reference states sampled every dt with the feedforward command that
/// carries each state to the next; controls.size() == states.size() - 1
/// (both empty for an empty trajectory).
struct TimedTrajectory {
  double dt = 0.05;
  std::vector<Pose2D> states;
  std::vector<ControlCommand> controls;

  std::size_t horizon() const { return controls.size(); }
  bool empty() const { return states.empty(); }
  double duration() const { return dt * static_cast<double>(controls.size()); }
};

/// Largest pose discrepancy between each stored state and the integration
/// of its predecessor under the stored control (position m + heading rad).
double max_consistency_error(const TimedTrajectory& traj);

/// Step-averaged speeds of a rest-to-rest trapezoidal profile covering
/// `distance` (>= 0); the sum times dt equals the distance.
std::vector<double> trapezoid_profile(double distance, double max_speed,
                                      double max_accel, double dt);

/// On-spot rotation to the bearing, straight drive, final on-spot rotation.
TimedTrajectory generate_sharp_trajectory(const Pose2D& start, const Pose2D& goal,
                                          const BaseLimits& limits, double dt);

/// Cubic Bezier with inner control points one third of the start-goal
/// distance along the start and goal headings, time-parameterized under the
/// limits. Falls back to the sharp generator when positions coincide.
TimedTrajectory generate_smooth_trajectory(const Pose2D& start,
                                           const Pose2D& goal,
                                           const BaseLimits& limits, double dt);

/// Counter-clockwise circle starting at `start` (center to the left),
/// traversed `laps` times at `speed` with rest-to-rest ramps. A
/// non-positive speed gives the single-state trajectory.
TimedTrajectory generate_circle_trajectory(const Pose2D& start, double radius,
                                           double speed, const BaseLimits& limits,
                                           double dt, int laps = 1);

/// Dense polyline of the reference positions, for cross-track measurement.
double cross_track_distance(const TimedTrajectory& reference, double x, double y);

TimedTrajectory load_trajectory_csv(const std::string& path);
void save_trajectory_csv(const TimedTrajectory& traj, const std::string& path);

}  // namespace robokit

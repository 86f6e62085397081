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

#include "robokit/backend.hpp"
#include "robokit/config.hpp"
#include "robokit/motion_result.hpp"
#include "robokit/occupancy_grid.hpp"
#include "robokit/trajectory.hpp"

namespace robokit {

/// Drives `base` to `target` (odometric frame) with the named controller,
/// closing the loop on odometry until the tolerance is met or the timeout
/// elapses. DWA uses its own tolerances and the optional grid for clearance.
/// Throws ValidationError for a controller without a parameter block.
MotionResult run_go_to(BaseInterface& base, const Pose2D& target,
                       const std::string& controller, const BaseConfig& config,
                       const OccupancyGrid* grid = nullptr);

struct TrackingEntry {
  double t = 0.0;
  Pose2D reference;
  Pose2D odom;
  Pose2D measured;
  ControlCommand command;
};

struct TrackingLog {
  std::vector<TrackingEntry> entries;
  Pose2D final_odom;
  Pose2D final_measured;
};

/// Runs the lqr or proportional feedback law along traj, one entry per
/// control step (empty for a trajectory without controls).
TrackingLog run_tracking(BaseInterface& base, const TimedTrajectory& traj,
                         const std::string& controller, const BaseConfig& config);

}  // namespace robokit

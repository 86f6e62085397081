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

#include "robokit/kinematics.hpp"
#include "robokit/motion.hpp"
#include "robokit/pose2d.hpp"
#include "robokit/se3.hpp"

namespace robokit {

/// Outcome of a blocking motion command. Base motions fill the pose and
/// command fields, arm motions the joint and end-effector fields; composite
/// skills list the phases they finished.
struct MotionResult {
  bool reached = false;
  std::string message;  // failure reason, empty on success
  double elapsed = 0.0; // s of simulated time

  Pose2D odom_pose;
  Pose2D measured_pose;
  std::vector<ControlCommand> commands;

  JointVector q;
  SE3Pose ee_pose;
  int waypoints_done = 0;
  int waypoints_total = 0;

  std::vector<std::string> phases;
  std::string failed_phase;
};

}  // namespace robokit

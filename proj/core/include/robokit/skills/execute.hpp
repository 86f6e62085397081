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

#include <optional>

#include "robokit/motion_result.hpp"
#include "robokit/robot.hpp"
#include "robokit/skills/grasp.hpp"
#include "robokit/skills/push.hpp"

namespace robokit::skills {

/// pregrasp (pitch pi/2, commanded roll) -> vertical descent -> close.
/// Requires arm and gripper. On an IK failure the result names the phase.
MotionResult execute_grasp(RobotHandle& robot, const GraspPose& grasp,
                           double pregrasp_height = 0.2, double grasp_height = 0.13);

/// close gripper -> pre_push_pt (pitch pi/2, roll 0) -> vertical descent
/// -> horizontal sweep of 2 * (obj_center - push_pt).
MotionResult execute_push(RobotHandle& robot, const PushPlan& plan);

/// The displacement execute_push sweeps along.
Eigen::Vector3d push_sweep(const PushPlan& plan);

struct PushDemo {
  PointCloud cloud;
  PushPlan plan;
  MotionResult motion;
  Eigen::Vector3d sweep_start = Eigen::Vector3d::Zero();
  Eigen::Vector3d sweep_end = Eigen::Vector3d::Zero();
};

/// The full pipeline: camera to the "push" view, arm to the "overhead"
/// named pose, capture, plan, execute.
PushDemo run_push_pipeline(RobotHandle& robot, const PushParams& params);

}  // namespace robokit::skills

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
#include "robokit/skills/execute.hpp"

#include <numbers>

#include "robokit/errors.hpp"

namespace robokit::skills {

namespace {

constexpr double kTopDown = 0.5 * std::numbers::pi;

bool run_phase(MotionResult& total, const char* phase, MotionResult step) {
  total.elapsed += step.elapsed;
  total.q = step.q;
  total.ee_pose = step.ee_pose;
  if (!step.reached) {
    total.reached = false;
    total.failed_phase = phase;
    total.message = std::string(phase) + ": " + step.message;
    return false;
  }
  total.phases.emplace_back(phase);
  return true;
}

}  // namespace

MotionResult execute_grasp(RobotHandle& robot, const GraspPose& grasp,
                           double pregrasp_height, double grasp_height) {
  if (pregrasp_height < grasp_height) {
    throw ValidationError("pregrasp_height", "must not be below grasp_height");
  }
  Arm& arm = robot.arm();
  Gripper& gripper = robot.gripper();
  MotionResult total;
  total.reached = true;
  gripper.open();
  const Eigen::Vector3d above(grasp.position.x(), grasp.position.y(), pregrasp_height);
  if (!run_phase(total, "pregrasp",
                 arm.set_ee_pose_pitch_roll(above, kTopDown, grasp.roll))) {
    return total;
  }
  if (!run_phase(total, "descend",
                 arm.move_ee_xyz({0.0, 0.0, grasp_height - pregrasp_height}))) {
    return total;
  }
  gripper.close();
  total.phases.emplace_back("close");
  return total;
}

Eigen::Vector3d push_sweep(const PushPlan& plan) {
  return 2.0 * (plan.obj_center - plan.push_pt);
}

MotionResult execute_push(RobotHandle& robot, const PushPlan& plan) {
  Arm& arm = robot.arm();
  MotionResult total;
  total.reached = true;
  if (robot.has(Subsystem::kGripper)) robot.gripper().close();
  total.phases.emplace_back("close");
  if (!run_phase(total, "pre_push",
                 arm.set_ee_pose_pitch_roll(plan.pre_push_pt, kTopDown, 0.0))) {
    return total;
  }
  if (!run_phase(total, "descend", arm.move_ee_xyz(plan.push_pt - plan.pre_push_pt))) {
    return total;
  }
  run_phase(total, "sweep", arm.move_ee_xyz(push_sweep(plan)));
  return total;
}

PushDemo run_push_pipeline(RobotHandle& robot, const PushParams& params) {
  PushDemo demo;
  Camera& camera = robot.camera();
  camera.set_view("push");
  robot.arm().go_to_named("overhead");
  demo.cloud = camera.point_cloud();
  demo.plan = plan_push(demo.cloud, params);
  demo.motion = execute_push(robot, demo.plan);
  demo.sweep_start = demo.plan.push_pt;
  demo.sweep_end = demo.plan.push_pt + push_sweep(demo.plan);
  return demo;
}

}  // namespace robokit::skills

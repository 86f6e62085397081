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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "robokit/camera.hpp"
#include "robokit/dwa.hpp"
#include "robokit/kinematics.hpp"
#include "robokit/lqr.hpp"
#include "robokit/motion.hpp"
#include "robokit/proportional.hpp"
#include "robokit/sim/arm.hpp"
#include "robokit/sim/diff_drive.hpp"
#include "robokit/sim/scene.hpp"
#include "robokit/skills/push.hpp"

namespace robokit {

inline constexpr int kConfigSchemaVersion = 1;

enum class TrajectoryKind { kSharp, kSmooth };

struct LqrConfig {
  CostWeights weights;
  TrajectoryKind trajectory = TrajectoryKind::kSharp;
  double speed_fraction = 0.8;  // of the base limits, leaves feedback headroom
  int max_replans = 5;
};

struct ControllerSet {
  std::optional<LqrConfig> lqr;
  std::optional<ProportionalGains> proportional;
  std::optional<DwaParams> dwa;

  std::vector<std::string> names() const;
  bool has(const std::string& name) const;
};

/// "prop" is accepted for "proportional". Unknown names map to themselves.
std::string canonical_controller_name(const std::string& name);

struct ArmConfig {
  KinematicChain chain;
  IkParams ik;
  double cartesian_step = 0.01;  // m
  double sim_dt = 0.01;          // s
  std::map<std::string, JointVector> named_poses;
  sim::ArmNoiseModel noise;
  std::vector<Eigen::Vector3d> repeatability_poses;
  double repeatability_pitch = 1.5707963267948966;
  double repeatability_roll = 0.0;
  double pregrasp_height = 0.2;  // m
  double grasp_height = 0.13;    // m

  JointVector named_pose(const std::string& name) const;
};

struct BaseConfig {
  double dt = 0.05;
  BaseLimits limits;
  double position_tolerance = 0.005;      // m
  double heading_tolerance = 0.00872665;  // rad
  double timeout = 60.0;                  // s of simulated time
  sim::BaseNoiseModel noise;
  double tracking_speed = 0.2;            // m/s
  std::string default_controller = "lqr";
  ControllerSet controllers;
};

struct CameraConfig {
  CameraIntrinsics intrinsics;
  sim::CameraMount mount;
  double depth_sigma = 0.0;
  double density = 10000.0;
  std::map<std::string, std::pair<double, double>> views;  // pan, tilt
};

struct RobotConfig {
  int schema_version = kConfigSchemaVersion;
  std::string name;
  std::string backend = "sim";
  bool use_arm = false;
  bool use_base = false;
  bool use_camera = false;
  bool use_gripper = false;
  std::string base_frame = "base_link";
  std::string ee_frame = "ee_link";
  ArmConfig arm;
  BaseConfig base;
  CameraConfig camera;
  skills::PushParams push;
};

/// Parses and validates; omitted optional fields take the defaults above.
/// Throws ConfigParseError for malformed text and ValidationError (whose
/// key() is the dotted path, e.g. "base.limits.v_max") for bad values.
RobotConfig parse_config(const std::string& text);
RobotConfig load_config(const std::string& path);

/// Accepts a file path, or a bare name looked up as <name>.yaml in
/// $ROBOKIT_CONFIG_DIR and then in the bundled config directory.
std::string resolve_config_path(const std::string& name_or_path);

std::string bundled_config_dir();

}  // namespace robokit

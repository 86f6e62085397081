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

#include <memory>
#include <optional>
#include <string>

#include <Eigen/Core>

#include "robokit/backend.hpp"
#include "robokit/base_controller.hpp"
#include "robokit/config.hpp"
#include "robokit/motion_result.hpp"

namespace robokit {

class Arm {
 public:
  Arm(ArmInterface& impl, const ArmConfig& config) : impl_(impl), config_(config) {}

  const KinematicChain& chain() const { return impl_.chain(); }
  std::size_t dof() const { return impl_.chain().dof(); }
  JointVector joint_positions() const { return impl_.joint_positions(); }
  /// Forward kinematics of the current joint reading.
  SE3Pose ee_pose() const;

  /// Throws DimensionError / JointLimitError before moving.
  MotionResult set_joint_positions(const JointVector& q);
  MotionResult go_home();
  MotionResult go_to_named(const std::string& name);

  IkResult compute_ik(const SE3Pose& target) const;
  MotionResult set_ee_pose(const SE3Pose& target);
  /// `plan` and `numerical` are accepted for API parity; only the numerical
  /// solver exists.
  MotionResult set_ee_pose_pitch_roll(const Eigen::Vector3d& position, double pitch,
                                      double roll, bool plan = false,
                                      bool numerical = true);
  /// Straight-line Cartesian move in waypoints no further apart than `step`
  /// (config default when omitted). Orientation is held, re-yawed about the
  /// first joint axis for chains with fewer than six joints.
  MotionResult move_ee_xyz(const Eigen::Vector3d& displacement,
                           std::optional<double> step = std::nullopt);

  const ArmConfig& config() const { return config_; }

 private:
  MotionResult finish_move(double elapsed);

  ArmInterface& impl_;
  const ArmConfig& config_;
};

class Base {
 public:
  Base(BaseInterface& impl, const BaseConfig& config) : impl_(impl), config_(config) {}

  Pose2D odometry() const { return impl_.odometry(); }
  Pose2D measured_pose() const { return impl_.measured_pose(); }
  ControlCommand velocity() const { return impl_.velocity(); }
  double time() const { return impl_.time(); }

  /// Empty controller name selects the configured default.
  MotionResult go_to_absolute(const Pose2D& target, const std::string& controller = "",
                              const OccupancyGrid* grid = nullptr);
  /// Target = compose(current odometry, delta).
  MotionResult go_to_relative(const Pose2D& delta, const std::string& controller = "",
                              const OccupancyGrid* grid = nullptr);
  Pose2D relative_target(const Pose2D& delta) const { return compose(odometry(), delta); }
  TrackingLog track_trajectory(const TimedTrajectory& traj,
                               const std::string& controller = "");
  void stop();

  const BaseConfig& config() const { return config_; }
  BaseInterface& interface() { return impl_; }

 private:
  std::string resolve(const std::string& controller) const;

  BaseInterface& impl_;
  const BaseConfig& config_;
};

class Camera {
 public:
  Camera(CameraInterface& impl, const CameraConfig& config)
      : impl_(impl), config_(config) {}

  const CameraIntrinsics& intrinsics() const { return impl_.intrinsics(); }
  SE3Pose pose() const { return impl_.pose(); }
  void set_pan_tilt(double pan, double tilt) { impl_.set_pan_tilt(pan, tilt); }
  /// Named (pan, tilt) pair from the config, e.g. "push".
  void set_view(const std::string& name);
  PointCloud point_cloud() { return impl_.point_cloud(); }

 private:
  CameraInterface& impl_;
  const CameraConfig& config_;
};

class Gripper {
 public:
  explicit Gripper(GripperInterface& impl) : impl_(impl) {}
  void open() { impl_.open(); }
  void close() { impl_.close(); }
  bool is_closed() const { return impl_.is_closed(); }

 private:
  GripperInterface& impl_;
};

/// Facade over a backend. Subsystems exist exactly when the config enables
/// them; accessing a disabled one throws CapabilityError.
class RobotHandle {
 public:
  RobotHandle(RobotConfig config, std::shared_ptr<Backend> backend);

  const RobotConfig& config() const { return *config_; }
  Backend& backend() { return *backend_; }

  bool has(Subsystem s) const;
  Arm& arm();
  Base& base();
  Camera& camera();
  Gripper& gripper();

 private:
  std::shared_ptr<const RobotConfig> config_;
  std::shared_ptr<Backend> backend_;
  std::optional<Arm> arm_;
  std::optional<Base> base_;
  std::optional<Camera> camera_;
  std::optional<Gripper> gripper_;
};

/// Throws CapabilityError naming the first enabled subsystem (arm, base,
/// camera, gripper order) the backend lacks.
RobotHandle make_robot(const RobotConfig& config, std::shared_ptr<Backend> backend);

}  // namespace robokit

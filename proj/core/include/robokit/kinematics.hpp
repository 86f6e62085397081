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

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "robokit/se3.hpp"

namespace robokit {

using JointVector = Eigen::VectorXd;
using Jacobian = Eigen::Matrix<double, 6, Eigen::Dynamic>;

struct RevoluteJoint {
  std::string name;
  SE3Pose parent_transform;  // parent frame -> joint frame at q = 0
  Eigen::Vector3d axis = Eigen::Vector3d::UnitZ();
  double lower = -3.14;
  double upper = 3.14;
  double max_velocity = 1.0;  // rad/s
};

/// Serial chain of revolute joints. Immutable once built; the constructor
/// rejects non-unit axes and empty limit intervals.
class KinematicChain {
 public:
  KinematicChain() = default;
  KinematicChain(std::vector<RevoluteJoint> joints, SE3Pose ee_transform);

  std::size_t dof() const { return joints_.size(); }
  bool empty() const { return joints_.empty(); }
  const std::vector<RevoluteJoint>& joints() const { return joints_; }
  const SE3Pose& ee_transform() const { return ee_transform_; }

  JointVector lower_limits() const;
  JointVector upper_limits() const;

  /// Throws DimensionError / JointLimitError naming the first bad joint.
  void check(const JointVector& q) const;
  void check_dimension(const JointVector& q) const;
  bool within_limits(const JointVector& q) const;
  JointVector clamp_to_limits(const JointVector& q) const;

  /// Fewer than six joints: orientation targets follow the pitch/roll
  /// convention where yaw is the bearing from the first joint axis.
  bool underactuated() const { return joints_.size() < 6; }

 private:
  std::vector<RevoluteJoint> joints_;
  SE3Pose ee_transform_;
};

SE3Pose forward_kinematics(const KinematicChain& chain, const JointVector& q);

/// World-frame frames of every joint (after its rotation) followed by the
/// end effector; size dof() + 1.
std::vector<SE3Pose> joint_frames(const KinematicChain& chain,
                                  const JointVector& q);

/// Geometric Jacobian at the end-effector origin. Rows 0-2 linear (m/rad),
/// rows 3-5 angular (rad/rad), both in the base frame.
Jacobian jacobian(const KinematicChain& chain, const JointVector& q);

struct IkParams {
  double position_tolerance = 1e-7;     // m
  double orientation_tolerance = 1e-7;  // rad
  int max_iterations = 300;
  double damping = 0.02;
  double max_step = 0.25;  // rad per iteration, per joint
  int restarts = 10;
  std::uint64_t restart_seed = 0x5eed;
  bool position_only = false;
};

struct IkResult {
  bool converged = false;
  JointVector q;
  int iterations = 0;  // total over all restarts
  double position_residual = 0.0;
  double orientation_residual = 0.0;
};

/// Damped least squares with step clamping and projection onto the joint
/// limits every iteration; reseeds up to params.restarts times from
/// deterministic uniform-in-limits samples. The seed must be within limits.
IkResult inverse_kinematics(const KinematicChain& chain, const SE3Pose& target,
                            const JointVector& seed, const IkParams& params);

/// Target pose for the position + pitch + roll convention. The yaw is the
/// bearing of `position` from the first joint axis, which is the only yaw
/// a yaw-pitch-pitch-pitch-roll arm can realize at that position.
SE3Pose pitch_roll_target(const KinematicChain& chain,
                          const Eigen::Vector3d& position, double pitch,
                          double roll);

}  // namespace robokit

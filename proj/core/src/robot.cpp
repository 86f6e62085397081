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
#include "robokit/robot.hpp"

#include <cmath>

#include "robokit/errors.hpp"

namespace robokit {

SE3Pose Arm::ee_pose() const {
  return forward_kinematics(impl_.chain(), impl_.joint_positions());
}

MotionResult Arm::finish_move(double elapsed) {
  MotionResult r;
  r.reached = true;
  r.elapsed = elapsed;
  r.q = impl_.joint_positions();
  r.ee_pose = impl_.measured_ee_pose();
  return r;
}

MotionResult Arm::set_joint_positions(const JointVector& q) {
  impl_.chain().check(q);
  return finish_move(impl_.move_to(q));
}

MotionResult Arm::go_home() { return set_joint_positions(config_.named_pose("home")); }

MotionResult Arm::go_to_named(const std::string& name) {
  return set_joint_positions(config_.named_pose(name));
}

IkResult Arm::compute_ik(const SE3Pose& target) const {
  const JointVector seed = impl_.chain().clamp_to_limits(impl_.joint_positions());
  return inverse_kinematics(impl_.chain(), target, seed, config_.ik);
}

MotionResult Arm::set_ee_pose(const SE3Pose& target) {
  const IkResult ik = compute_ik(target);
  if (!ik.converged) {
    MotionResult r;
    r.message = "NoConvergence: position residual " +
                std::to_string(ik.position_residual) + " m";
    r.q = impl_.joint_positions();
    r.ee_pose = impl_.measured_ee_pose();
    return r;
  }
  return finish_move(impl_.move_to(ik.q));
}

MotionResult Arm::set_ee_pose_pitch_roll(const Eigen::Vector3d& position, double pitch,
                                         double roll, bool /*plan*/,
                                         bool /*numerical*/) {
  return set_ee_pose(pitch_roll_target(impl_.chain(), position, pitch, roll));
}

MotionResult Arm::move_ee_xyz(const Eigen::Vector3d& displacement,
                              std::optional<double> step) {
  const double spacing = step.value_or(config_.cartesian_step);
  if (!(spacing > 0.0)) throw ValidationError("step", "must be positive");
  const KinematicChain& chain = impl_.chain();
  const SE3Pose start = ee_pose();
  const double length = displacement.norm();
  const int n = length == 0.0 ? 0 : static_cast<int>(std::ceil(length / spacing - 1e-12));

  MotionResult r;
  r.reached = true;
  r.waypoints_total = n;
  const Eigen::Vector3d pivot = chain.joints().front().parent_transform.translation();
  auto bearing = [&](const Eigen::Vector3d& p) {
    return std::atan2(p.y() - pivot.y(), p.x() - pivot.x());
  };
  const double bearing0 = bearing(start.translation());
  JointVector q = impl_.chain().clamp_to_limits(impl_.joint_positions());
  for (int i = 1; i <= n; ++i) {
    const Eigen::Vector3d p = start.translation() + displacement * (double(i) / n);
    Eigen::Quaterniond rot = start.rotation();
    if (chain.underactuated()) {
      rot = Eigen::AngleAxisd(wrap_angle(bearing(p) - bearing0), Eigen::Vector3d::UnitZ()) *
            rot;
    }
    const IkResult ik = inverse_kinematics(chain, SE3Pose(p, rot), q, config_.ik);
    if (!ik.converged) {
      r.reached = false;
      r.message = "NoConvergence at waypoint " + std::to_string(i) + " of " +
                  std::to_string(n);
      break;
    }
    q = ik.q;
    r.elapsed += impl_.move_to(q);
    r.waypoints_done = i;
  }
  r.q = impl_.joint_positions();
  r.ee_pose = impl_.measured_ee_pose();
  return r;
}

std::string Base::resolve(const std::string& controller) const {
  return controller.empty() ? config_.default_controller : controller;
}

MotionResult Base::go_to_absolute(const Pose2D& target, const std::string& controller,
                                  const OccupancyGrid* grid) {
  return run_go_to(impl_, target, resolve(controller), config_, grid);
}

MotionResult Base::go_to_relative(const Pose2D& delta, const std::string& controller,
                                  const OccupancyGrid* grid) {
  return go_to_absolute(relative_target(delta), controller, grid);
}

TrackingLog Base::track_trajectory(const TimedTrajectory& traj,
                                   const std::string& controller) {
  return run_tracking(impl_, traj, resolve(controller), config_);
}

void Base::stop() {
  while (impl_.velocity() != ControlCommand{}) impl_.step({0.0, 0.0});
}

void Camera::set_view(const std::string& name) {
  const auto it = config_.views.find(name);
  if (it == config_.views.end()) throw ValidationError(name, "unknown camera view");
  impl_.set_pan_tilt(it->second.first, it->second.second);
}

RobotHandle::RobotHandle(RobotConfig config, std::shared_ptr<Backend> backend)
    : config_(std::make_shared<const RobotConfig>(std::move(config))),
      backend_(std::move(backend)) {
  if (!backend_) throw ValidationError("backend", "must not be null");
  auto require = [&](bool enabled, Subsystem s) {
    if (enabled && !backend_->provides(s)) {
      throw CapabilityError(std::string(to_string(s)),
                            "enabled in config '" + config_->name +
                                "' but backend '" + backend_->id() + "' lacks it");
    }
    return enabled;
  };
  if (require(config_->use_arm, Subsystem::kArm)) arm_.emplace(*backend_->arm(), config_->arm);
  if (require(config_->use_base, Subsystem::kBase)) {
    base_.emplace(*backend_->base(), config_->base);
  }
  if (require(config_->use_camera, Subsystem::kCamera)) {
    camera_.emplace(*backend_->camera(), config_->camera);
  }
  if (require(config_->use_gripper, Subsystem::kGripper)) {
    gripper_.emplace(*backend_->gripper());
  }
}

bool RobotHandle::has(Subsystem s) const {
  switch (s) {
    case Subsystem::kArm: return arm_.has_value();
    case Subsystem::kBase: return base_.has_value();
    case Subsystem::kCamera: return camera_.has_value();
    case Subsystem::kGripper: return gripper_.has_value();
  }
  return false;
}

Arm& RobotHandle::arm() {
  if (!arm_) throw CapabilityError("arm", "disabled in config '" + config_->name + "'");
  return *arm_;
}

Base& RobotHandle::base() {
  if (!base_) throw CapabilityError("base", "disabled in config '" + config_->name + "'");
  return *base_;
}

Camera& RobotHandle::camera() {
  if (!camera_) {
    throw CapabilityError("camera", "disabled in config '" + config_->name + "'");
  }
  return *camera_;
}

Gripper& RobotHandle::gripper() {
  if (!gripper_) {
    throw CapabilityError("gripper", "disabled in config '" + config_->name + "'");
  }
  return *gripper_;
}

RobotHandle make_robot(const RobotConfig& config, std::shared_ptr<Backend> backend) {
  return RobotHandle(config, std::move(backend));
}

}  // namespace robokit

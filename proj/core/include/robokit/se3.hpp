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

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace robokit {

/// Rigid transform with a unit quaternion rotation. Every composition
/// renormalizes the quaternion so long chains do not drift.
class SE3Pose {
 public:
  SE3Pose() = default;
  SE3Pose(const Eigen::Vector3d& translation, const Eigen::Quaterniond& rotation)
      : translation_(translation), rotation_(rotation.normalized()) {}

  static SE3Pose identity() { return {}; }
  static SE3Pose from_translation(const Eigen::Vector3d& t) {
    return {t, Eigen::Quaterniond::Identity()};
  }
  static SE3Pose from_axis_angle(const Eigen::Vector3d& axis, double angle) {
    return {Eigen::Vector3d::Zero(),
            Eigen::Quaterniond(Eigen::AngleAxisd(angle, axis.normalized()))};
  }
  /// Intrinsic z-y-x (yaw, pitch, roll).
  static SE3Pose from_xyz_ypr(const Eigen::Vector3d& t, double yaw, double pitch,
                              double roll);

  const Eigen::Vector3d& translation() const { return translation_; }
  const Eigen::Quaterniond& rotation() const { return rotation_; }
  Eigen::Matrix3d rotation_matrix() const { return rotation_.toRotationMatrix(); }

  SE3Pose operator*(const SE3Pose& rhs) const {
    return {translation_ + rotation_ * rhs.translation_,
            rotation_ * rhs.rotation_};
  }
  Eigen::Vector3d operator*(const Eigen::Vector3d& p) const {
    return translation_ + rotation_ * p;
  }
  SE3Pose inverse() const {
    const Eigen::Quaterniond inv = rotation_.conjugate();
    return {-(inv * translation_), inv};
  }

 private:
  Eigen::Vector3d translation_ = Eigen::Vector3d::Zero();
  Eigen::Quaterniond rotation_ = Eigen::Quaterniond::Identity();
};

inline SE3Pose SE3Pose::from_xyz_ypr(const Eigen::Vector3d& t, double yaw,
                                     double pitch, double roll) {
  const Eigen::Quaterniond q =
      Eigen::AngleAxisd(yaw, Eigen::Vector3d::UnitZ()) *
      Eigen::AngleAxisd(pitch, Eigen::Vector3d::UnitY()) *
      Eigen::AngleAxisd(roll, Eigen::Vector3d::UnitX());
  return {t, q};
}

/// Rotation-vector (axis * angle) that takes `from` onto `to`, in the
/// world frame: exp([w]) * from = to.
inline Eigen::Vector3d rotation_error(const Eigen::Quaterniond& from,
                                      const Eigen::Quaterniond& to) {
  Eigen::Quaterniond d = to * from.conjugate();
  if (d.w() < 0.0) d.coeffs() = -d.coeffs();
  const Eigen::AngleAxisd aa(d.normalized());
  return aa.axis() * aa.angle();
}

}  // namespace robokit

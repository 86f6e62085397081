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
#include <string_view>

#include "robokit/camera.hpp"
#include "robokit/kinematics.hpp"
#include "robokit/motion.hpp"
#include "robokit/point_cloud.hpp"
#include "robokit/pose2d.hpp"
#include "robokit/se3.hpp"

namespace robokit {

enum class Subsystem { kArm, kBase, kCamera, kGripper };

std::string_view to_string(Subsystem s);

class ArmInterface {
 public:
  virtual ~ArmInterface() = default;
  virtual const KinematicChain& chain() const = 0;
  virtual JointVector joint_positions() const = 0;
  /// Blocks until the arm settles near q; returns the time it took (s).
  virtual double move_to(const JointVector& q) = 0;
  /// Externally measured end-effector pose (ground truth in simulation).
  virtual SE3Pose measured_ee_pose() const = 0;
};

class BaseInterface {
 public:
  virtual ~BaseInterface() = default;
  virtual double control_period() const = 0;
  virtual const BaseLimits& limits() const = 0;
  virtual Pose2D odometry() const = 0;
  /// Externally measured pose (ground truth in simulation).
  virtual Pose2D measured_pose() const = 0;
  virtual ControlCommand velocity() const = 0;
  virtual double time() const = 0;
  /// Applies cmd for one control period after clamping and rate limiting;
  /// returns the command actually applied.
  virtual ControlCommand step(const ControlCommand& cmd) = 0;
};

class CameraInterface {
 public:
  virtual ~CameraInterface() = default;
  virtual const CameraIntrinsics& intrinsics() const = 0;
  /// Optical frame in the base frame.
  virtual SE3Pose pose() const = 0;
  virtual void set_pan_tilt(double pan, double tilt) = 0;
  virtual double pan() const = 0;
  virtual double tilt() const = 0;
  /// Base-frame point cloud of the current view.
  virtual PointCloud point_cloud() = 0;
};

class GripperInterface {
 public:
  virtual ~GripperInterface() = default;
  virtual void open() = 0;
  virtual void close() = 0;
  virtual bool is_closed() const = 0;
};

/// A backend exposes whichever subsystems it implements; absent ones
/// return nullptr.
class Backend {
 public:
  virtual ~Backend() = default;
  virtual std::string id() const = 0;
  virtual ArmInterface* arm() { return nullptr; }
  virtual BaseInterface* base() { return nullptr; }
  virtual CameraInterface* camera() { return nullptr; }
  virtual GripperInterface* gripper() { return nullptr; }

  bool provides(Subsystem s);
};

}  // namespace robokit

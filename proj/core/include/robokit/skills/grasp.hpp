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

#include "robokit/camera.hpp"
#include "robokit/se3.hpp"

namespace robokit::skills {

/// Grasp predicted in image space.
struct ImageGrasp {
  double u = 0.0;      // px
  double v = 0.0;      // px
  double angle = 0.0;  // rad, gripper roll in the image plane
  double depth = 0.0;  // m
};

struct GraspPose {
  Eigen::Vector3d position = Eigen::Vector3d::Zero();  // base frame, m
  double roll = 0.0;                                   // rad
};

/// Heading of the camera's optical axis projected onto the base xy plane.
double camera_yaw(const SE3Pose& camera_to_base);

/// Pixel plus depth to a base-frame point; the image-plane angle is carried
/// into a gripper roll by adding the camera yaw.
GraspPose backproject_grasp(const ImageGrasp& grasp, const CameraIntrinsics& k,
                            const SE3Pose& camera_to_base);

}  // namespace robokit::skills

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

#include <Eigen/Core>

#include "robokit/se3.hpp"

namespace robokit {

struct CameraIntrinsics {
  double fx = 600.0;  // px
  double fy = 600.0;  // px
  double cx = 320.0;  // px
  double cy = 240.0;  // px
  int width = 640;
  int height = 480;

  void validate() const;
};

/// Pinhole projection of a camera-frame point (z forward). Returns nothing
/// for points at or behind the image plane.
std::optional<Eigen::Vector2d> project(const CameraIntrinsics& k,
                                       const Eigen::Vector3d& p_camera);

/// Camera-frame point at depth z along the ray through pixel (u, v).
Eigen::Vector3d backproject(const CameraIntrinsics& k, double u, double v,
                            double depth);

bool in_image(const CameraIntrinsics& k, const Eigen::Vector2d& uv);

/// Optical-frame pose (z forward, x right, y down) of a camera whose body
/// (x forward, z up) sits at `position` in the base frame, panned by `pan`
/// about z then tilted down by `tilt`.
SE3Pose camera_pose(const Eigen::Vector3d& position, double pan, double tilt);

}  // namespace robokit

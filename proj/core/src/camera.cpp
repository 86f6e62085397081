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
#include "robokit/camera.hpp"

#include <Eigen/Geometry>

#include "robokit/errors.hpp"

namespace robokit {

void CameraIntrinsics::validate() const {
  if (!(fx > 0.0)) throw ValidationError("camera.intrinsics.fx", "must be positive");
  if (!(fy > 0.0)) throw ValidationError("camera.intrinsics.fy", "must be positive");
  if (width <= 0) throw ValidationError("camera.intrinsics.width", "must be positive");
  if (height <= 0) throw ValidationError("camera.intrinsics.height", "must be positive");
  if (!(cx >= 0.0 && cx < width)) {
    throw ValidationError("camera.intrinsics.cx", "principal point outside the image");
  }
  if (!(cy >= 0.0 && cy < height)) {
    throw ValidationError("camera.intrinsics.cy", "principal point outside the image");
  }
}

std::optional<Eigen::Vector2d> project(const CameraIntrinsics& k,
                                       const Eigen::Vector3d& p) {
  if (!(p.z() > 0.0)) return std::nullopt;
  return Eigen::Vector2d(k.fx * p.x() / p.z() + k.cx, k.fy * p.y() / p.z() + k.cy);
}

Eigen::Vector3d backproject(const CameraIntrinsics& k, double u, double v,
                            double depth) {
  return {(u - k.cx) * depth / k.fx, (v - k.cy) * depth / k.fy, depth};
}

bool in_image(const CameraIntrinsics& k, const Eigen::Vector2d& uv) {
  return uv.x() >= 0.0 && uv.y() >= 0.0 && uv.x() < k.width && uv.y() < k.height;
}

SE3Pose camera_pose(const Eigen::Vector3d& position, double pan, double tilt) {
  Eigen::Matrix3d body_to_optical;
  body_to_optical << 0, 0, 1,
                     -1, 0, 0,
                     0, -1, 0;
  const Eigen::Quaterniond body =
      Eigen::AngleAxisd(pan, Eigen::Vector3d::UnitZ()) *
      Eigen::AngleAxisd(tilt, Eigen::Vector3d::UnitY());
  return {position, body * Eigen::Quaterniond(body_to_optical)};
}

}  // namespace robokit

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
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "robokit/camera.hpp"
#include "robokit/point_cloud.hpp"
#include "robokit/se3.hpp"

namespace robokit::sim {

enum class Shape { kBox, kCylinder };

/// Box dimensions are full side lengths (x, y, z); a cylinder uses
/// (radius, radius, height) with its axis along the object z. The pose is
/// the geometric center.
struct SceneObject {
  Shape shape = Shape::kBox;
  SE3Pose pose;
  Eigen::Vector3d dimensions = Eigen::Vector3d::Constant(0.06);

  void validate() const;
  /// Ray parameter of the first intersection with the solid, if any, for
  /// origin + t * direction with t > 0.
  std::optional<double> intersect(const Eigen::Vector3d& origin,
                                  const Eigen::Vector3d& direction) const;
};

struct CameraMount {
  Eigen::Vector3d position{0.0, 0.0, 0.6};
  double pan = 0.0;   // rad
  double tilt = 0.7;  // rad, positive looks down
};

struct Scene {
  std::vector<SceneObject> objects;
  double floor_radius = 1.5;  // m, floor disk centred on the base
  std::optional<CameraMount> camera;  // overrides the robot's mount if set
};

/// Reads the structured-text scene format (see docs/formats.md).
Scene load_scene(const std::string& path);
Scene parse_scene(const std::string& text);

struct RenderParams {
  double density = 10000.0;  // points per m^2 of surface
  double depth_sigma = 0.0;  // m, along the viewing ray
  std::uint64_t seed = 0;
};

/// Samples camera-facing object surfaces and the floor disk uniformly,
/// drops occluded points and points outside the image, and perturbs each
/// survivor along its viewing ray. Points are returned in the base frame.
PointCloud render_point_cloud(const Scene& scene, const SE3Pose& camera_to_base,
                              const CameraIntrinsics& intrinsics,
                              const RenderParams& params);

}  // namespace robokit::sim

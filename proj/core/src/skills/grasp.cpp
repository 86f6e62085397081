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
#include "robokit/skills/grasp.hpp"

#include <cmath>

#include "robokit/errors.hpp"
#include "robokit/pose2d.hpp"

namespace robokit::skills {

double camera_yaw(const SE3Pose& camera_to_base) {
  const Eigen::Vector3d z = camera_to_base.rotation() * Eigen::Vector3d::UnitZ();
  return std::atan2(z.y(), z.x());
}

GraspPose backproject_grasp(const ImageGrasp& grasp, const CameraIntrinsics& k,
                            const SE3Pose& camera_to_base) {
  if (!(grasp.depth > 0.0)) throw ValidationError("depth", "must be positive");
  GraspPose out;
  out.position = camera_to_base * backproject(k, grasp.u, grasp.v, grasp.depth);
  out.roll = wrap_angle(grasp.angle + camera_yaw(camera_to_base));
  return out;
}

}  // namespace robokit::skills

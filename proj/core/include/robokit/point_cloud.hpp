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
#include <string>
#include <vector>

#include <Eigen/Core>

namespace robokit {

enum class PointTag : std::uint8_t { kFloor, kObject, kNone };

struct CloudPoint {
  Eigen::Vector3d p;
  PointTag tag = PointTag::kNone;
};

using PointCloud = std::vector<CloudPoint>;

/// Whitespace-separated "x y z [tag]" rows; tag is "floor" or "object".
/// Lines starting with '#' are comments. Coordinates are written in
/// shortest round-trip form.
void save_xyz(const PointCloud& cloud, const std::string& path);
PointCloud load_xyz(const std::string& path);

}  // namespace robokit

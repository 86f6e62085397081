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
#include <vector>

#include <Eigen/Core>

#include "robokit/errors.hpp"
#include "robokit/point_cloud.hpp"
#include "robokit/skills/dbscan.hpp"

namespace robokit::skills {

class NoClustersError : public Error {
 public:
  NoClustersError() : Error("NoClusters: no object cluster to push") {}
};

struct PushPlan {
  Eigen::Vector3d pre_push_pt = Eigen::Vector3d::Zero();
  Eigen::Vector3d push_pt = Eigen::Vector3d::Zero();
  Eigen::Vector3d obj_center = Eigen::Vector3d::Zero();
  int cluster = -1;
  Eigen::Vector2d box_min = Eigen::Vector2d::Zero();
  Eigen::Vector2d box_max = Eigen::Vector2d::Zero();
};

struct PushParams {
  double z_floor = 0.02;          // m
  double max_range = 1.0;         // m, horizontal
  DbscanParams dbscan;
  double push_height = 0.13;      // m, end-effector height while pushing
  double pre_push_height = 0.2;   // m, end-effector height above the push point
  std::uint64_t seed = 0;

  void validate() const;
};

/// Keeps points with z > z_floor and horizontal range <= max_range.
PointCloud filter_cloud(const PointCloud& cloud, double z_floor, double max_range);

std::vector<Eigen::Vector2d> project_xy(const PointCloud& cloud);

/// Picks a cluster uniformly, then a point uniformly (by arc length) on the
/// perimeter of its axis-aligned bounding box. push_pt and obj_center (the
/// cluster centroid) sit at push_height; pre_push_pt is push_pt at
/// pre_push_height. Throws NoClustersError when every label is noise.
PushPlan select_push(const std::vector<Eigen::Vector2d>& points,
                     const std::vector<int>& labels, double push_height,
                     double pre_push_height, std::uint64_t seed);

/// filter -> project -> cluster -> select.
PushPlan plan_push(const PointCloud& cloud, const PushParams& params);

}  // namespace robokit::skills

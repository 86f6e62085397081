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

#include <vector>

#include <Eigen/Core>

namespace robokit::skills {

struct DbscanParams {
  double eps = 0.03;  // m
  int min_pts = 10;

  void validate() const;
};

inline constexpr int kNoise = -1;

/// Density-based clustering. A point is core when at least min_pts points
/// (itself included) lie within eps. Points are visited in input order and
/// clusters are numbered 0, 1, ... in order of discovery; a border point
/// joins the first cluster that reaches it. Noise is labelled kNoise.
std::vector<int> dbscan(const std::vector<Eigen::Vector2d>& points,
                        const DbscanParams& params);

int cluster_count(const std::vector<int>& labels);

}  // namespace robokit::skills

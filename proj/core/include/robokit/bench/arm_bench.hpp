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

#include "robokit/bench/base_bench.hpp"
#include "robokit/config.hpp"

namespace robokit::bench {

/// ISO 9283 position repeatability of a set of attained points:
/// RP = mean(l) + 3 * std(l), l_j = |P_j - barycenter| (std with n - 1).
struct Iso9283 {
  Eigen::Vector3d barycenter = Eigen::Vector3d::Zero();
  std::vector<double> distances;
  double l_mean = 0.0;
  double l_std = 0.0;
  double rp = 0.0;
};

Iso9283 iso9283_repeatability(const std::vector<Eigen::Vector3d>& points);

struct RepeatabilityPose {
  std::string name;
  Eigen::Vector3d commanded = Eigen::Vector3d::Zero();  // m
  bool reachable = true;
  std::vector<Eigen::Vector3d> attained_mm;
  Eigen::Vector3d std_mm = Eigen::Vector3d::Zero();
  double rp_mm = 0.0;
};

struct RepeatabilityResult {
  std::uint64_t seed = 0;
  std::string robot;
  int reps = 0;
  std::vector<RepeatabilityPose> poses;
};

/// For each grid pose, every repetition starts at home and moves to the
/// pose; for the home pose, every repetition starts at the first grid pose
/// and returns home. Attained positions are read from the backend's
/// external measurement. An unreachable pose is flagged and skipped.
RepeatabilityResult run_arm_repeatability(const RobotConfig& config,
                                          const BackendFactory& factory,
                                          const std::vector<Eigen::Vector3d>& poses,
                                          int reps, std::uint64_t seed);

}  // namespace robokit::bench

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
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "robokit/backend.hpp"
#include "robokit/config.hpp"
#include "robokit/pose2d.hpp"

namespace robokit::bench {

using BackendFactory = std::function<std::shared_ptr<Backend>(std::uint64_t seed)>;

inline const char* const kMotionClasses[] = {"linear", "rotation", "combined"};
inline const char* const kReferences[] = {"ground_truth", "odometry"};

struct BaseTarget {
  std::string motion_class;
  Pose2D target;
};

struct BaseTrialProtocol {
  std::vector<BaseTarget> targets;
  int trials_per_target = 5;

  /// Linear [2,0,0], [-2,0,0]; rotation [0,0,pi/2], [0,0,-pi/2];
  /// combined [1,1,0], [-1,-1,0]; five trials each.
  static BaseTrialProtocol standard();
  void validate() const;
};

struct TrialResult {
  std::string controller;
  std::string motion_class;
  Pose2D target;
  int target_index = 0;
  int trial = 0;
  std::uint64_t seed = 0;
  double translation_gt_mm = 0.0;
  double translation_odom_mm = 0.0;
  double rotation_gt_deg = 0.0;
  double rotation_odom_deg = 0.0;
  bool reached = false;
  double elapsed = 0.0;
};

struct AggregateRow {
  std::string controller;
  std::string motion_class;
  std::string reference;  // ground_truth | odometry
  double translation_mean_mm = 0.0;
  double translation_std_mm = 0.0;
  double rotation_mean_deg = 0.0;
  double rotation_std_deg = 0.0;
  int n = 0;
  int failed = 0;

  friend bool operator==(const AggregateRow&, const AggregateRow&) = default;
};

struct BaseBenchReport {
  std::uint64_t seed = 0;
  std::string robot;
  std::vector<TrialResult> trials;
  std::vector<AggregateRow> aggregates;

  const AggregateRow* find(const std::string& controller, const std::string& motion_class,
                           const std::string& reference) const;
};

/// Seed of trial k for target i; identical across controllers so that
/// controllers face the same noise realizations.
std::uint64_t trial_seed(std::uint64_t master, int target_index, int trial,
                         int trials_per_target);

/// Errors of an attained pose against the commanded one.
TrialResult score_trial(const Pose2D& target, const Pose2D& measured, const Pose2D& odom);

/// Groups by (controller, motion class, reference) in the order controllers
/// are listed, classes linear/rotation/combined, references gt/odom.
std::vector<AggregateRow> aggregate(const std::vector<TrialResult>& trials,
                                    const std::vector<std::string>& controllers);

/// One fresh backend per trial. Trials may run on `threads` workers; the
/// report is identical for any thread count.
BaseBenchReport run_base_benchmark(const RobotConfig& config, const BackendFactory& factory,
                                   const std::vector<std::string>& controllers,
                                   const BaseTrialProtocol& protocol, std::uint64_t seed,
                                   int threads = 1);

}  // namespace robokit::bench

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

#include "robokit/motion.hpp"
#include "robokit/occupancy_grid.hpp"
#include "robokit/pose2d.hpp"

namespace robokit {

struct DwaWeights {
  double heading = 0.8;
  double distance = 0.2;
  double velocity = 0.1;
  double clearance = 0.3;
};

struct DwaParams {
  int v_samples = 11;
  int w_samples = 21;
  double horizon = 1.5;          // s
  double sim_step = 0.1;         // s, collision sampling along each rollout
  double v_min = 0.0;            // m/s
  double xy_tolerance = 0.015;   // m
  double yaw_tolerance = 0.0261799;  // rad (1.5 deg)
  double robot_radius = 0.18;    // m
  double clearance_cap = 0.5;    // m
  double rotate_lookahead = 1.0; // s
  DwaWeights weights;

  void validate() const;
};

enum class DwaMode { kTranslate, kRotate, kDone };

struct DwaCandidate {
  ControlCommand cmd;
  double score = 0.0;  // -inf when the rollout collides
};

struct DwaDecision {
  ControlCommand cmd;
  bool blocked = false;
  DwaMode next = DwaMode::kTranslate;
};

/// Velocities reachable within one control period, intersected with the
/// velocity limits, sampled on a v_samples x w_samples lattice (ascending v,
/// then ascending w).
std::vector<ControlCommand> dwa_sample_window(const ControlCommand& current,
                                              const BaseLimits& limits,
                                              const DwaParams& params, double dt);

/// Score of one constant-twist rollout from `state` towards `goal`.
double dwa_score(const Pose2D& state, const ControlCommand& cmd,
                 const Pose2D& goal, const OccupancyGrid* grid,
                 const BaseLimits& limits, const DwaParams& params);

/// Strict preference used for the argmax: higher score, then lower |w|,
/// then lower v.
bool dwa_better(const DwaCandidate& a, const DwaCandidate& b);

/// One decision of the dynamic window controller. In translate mode the
/// window is scored by dwa_score; once within xy_tolerance it latches into
/// rotate mode, decelerating v to zero and turning onto the goal heading.
/// A Stop with `blocked` set is returned when every sample collides.
DwaDecision dwa_step(const Pose2D& state, const ControlCommand& current,
                     const Pose2D& goal, const OccupancyGrid* grid,
                     DwaMode mode, const BaseLimits& limits,
                     const DwaParams& params, double dt);

}  // namespace robokit

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

#include "robokit/motion.hpp"
#include "robokit/pose2d.hpp"
#include "robokit/sim/rng.hpp"

namespace robokit::sim {

/// Multiplicative velocity noise. Actuation noise perturbs the twist the
/// base actually executes; odometry measures that executed twist with a
/// per-step random error plus a scale bias that is fixed for the lifetime
/// of a simulator (drawn once from N(bias, bias_spread)).
struct BaseNoiseModel {
  double actuation_v = 0.0;
  double actuation_w = 0.0;
  double odom_v = 0.0;
  double odom_w = 0.0;
  double odom_bias_v = 0.0;
  double odom_bias_w = 0.0;
  double odom_bias_spread = 0.0;
  std::uint64_t seed = 0;

  bool zero() const {
    return actuation_v == 0.0 && actuation_w == 0.0 && odom_v == 0.0 &&
           odom_w == 0.0 && odom_bias_v == 0.0 && odom_bias_w == 0.0 &&
           odom_bias_spread == 0.0;
  }
  void validate() const;
};

struct DiffDriveSimState {
  Pose2D true_pose;
  Pose2D odom_pose;
  ControlCommand velocity;  // last applied (limited) command
  double time = 0.0;
};

/// Random streams and realized biases of one simulated base.
class BaseNoiseSource {
 public:
  explicit BaseNoiseSource(const BaseNoiseModel& model);

  const BaseNoiseModel& model() const { return model_; }
  double bias_v() const { return bias_v_; }
  double bias_w() const { return bias_w_; }
  RngStream& actuation() { return actuation_; }
  RngStream& odometry() { return odometry_; }

 private:
  BaseNoiseModel model_;
  RngStream actuation_;
  RngStream odometry_;
  double bias_v_ = 0.0;
  double bias_w_ = 0.0;
};

/// Advances the simulator by dt. The command is clamped and rate-limited
/// against state.velocity; the true pose follows the noisy executed twist
/// and the odometric pose the measured twist, both as exact constant-twist
/// arcs. Four normal draws happen every step regardless of the command.
DiffDriveSimState step_base(const DiffDriveSimState& state,
                            const ControlCommand& cmd, double dt,
                            const BaseLimits& limits, BaseNoiseSource& noise);

}  // namespace robokit::sim

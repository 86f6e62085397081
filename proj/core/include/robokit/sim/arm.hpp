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

#include <Eigen/Core>

#include "robokit/kinematics.hpp"
#include "robokit/sim/rng.hpp"

namespace robokit::sim {

struct ArmNoiseModel {
  Eigen::Vector3d sigma = Eigen::Vector3d::Zero();  // m, per Cartesian axis
  std::uint64_t seed = 0;

  void validate() const;
};

struct ArmSimState {
  JointVector q;       // true joint angles
  JointVector target;  // last commanded target
  bool settled = true;
  double time = 0.0;
};

/// Moves every joint towards `target` at its velocity limit for one step
/// of dt. On the step that reaches the target the arm settles: the end
/// effector is displaced by a Cartesian offset drawn from N(0, diag(sigma^2))
/// realized through the position-Jacobian pseudoinverse. Throws
/// JointLimitError / DimensionError for an invalid target.
ArmSimState step_arm(const KinematicChain& chain, const ArmSimState& state,
                     const JointVector& target, double dt,
                     const ArmNoiseModel& noise, RngStream& rng);

/// Joint correction that moves the end effector by `offset` to first order.
JointVector cartesian_perturbation(const KinematicChain& chain,
                                   const JointVector& q,
                                   const Eigen::Vector3d& offset);

}  // namespace robokit::sim

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
#include "robokit/sim/arm.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "robokit/errors.hpp"

namespace robokit::sim {

void ArmNoiseModel::validate() const {
  if (!(sigma.minCoeff() >= 0.0)) throw ValidationError("sigma", "must be >= 0");
}

JointVector cartesian_perturbation(const KinematicChain& chain,
                                   const JointVector& q,
                                   const Eigen::Vector3d& offset) {
  const Eigen::MatrixXd jp = jacobian(chain, q).topRows<3>();
  return jp.completeOrthogonalDecomposition().solve(offset);
}

ArmSimState step_arm(const KinematicChain& chain, const ArmSimState& state,
                     const JointVector& target, double dt,
                     const ArmNoiseModel& noise, RngStream& rng) {
  if (!(dt > 0.0)) throw ValidationError("dt", "must be positive");
  chain.check(target);
  chain.check_dimension(state.q);
  ArmSimState next = state;
  next.time += dt;
  if (state.settled && state.target.size() == target.size() &&
      state.target == target) {
    return next;
  }
  next.target = target;
  bool arrived = true;
  for (std::size_t i = 0; i < chain.dof(); ++i) {
    const double max_move = chain.joints()[i].max_velocity * dt;
    const double diff = target[i] - state.q[i];
    if (std::abs(diff) <= max_move) {
      next.q[i] = target[i];
    } else {
      next.q[i] = state.q[i] + std::copysign(max_move, diff);
      arrived = false;
    }
  }
  next.settled = arrived;
  if (arrived) {
    const Eigen::Vector3d offset(noise.sigma.x() * rng.normal(),
                                 noise.sigma.y() * rng.normal(),
                                 noise.sigma.z() * rng.normal());
    if (!offset.isZero(0.0)) {
      next.q = chain.clamp_to_limits(next.q +
                                     cartesian_perturbation(chain, next.q, offset));
    }
  }
  return next;
}

}  // namespace robokit::sim

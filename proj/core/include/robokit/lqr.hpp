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

#include <span>
#include <vector>

#include <Eigen/Core>

#include "robokit/motion.hpp"
#include "robokit/trajectory.hpp"

namespace robokit {

struct CostWeights {
  Eigen::Matrix3d Q = Eigen::Vector3d(5.0, 5.0, 1.0).asDiagonal();
  Eigen::Matrix2d R = Eigen::Vector2d(1.0, 0.5).asDiagonal();
  Eigen::Matrix3d Qf = 10.0 * Eigen::Vector3d(5.0, 5.0, 1.0).asDiagonal();

  /// Throws ValidationError unless Q, Qf are symmetric PSD and R is
  /// symmetric PD.
  void validate() const;
};

struct LinearDynamics {
  Eigen::Matrix3d A;
  Eigen::Matrix<double, 3, 2> B;
};

/// Euler-discretized Jacobians of the unicycle x' = v cos(th), y' = v sin(th),
/// th' = w about (ref_state, ref_control).
LinearDynamics linearize_dynamics(const Pose2D& ref_state,
                                  const ControlCommand& ref_control, double dt);

using FeedbackGain = Eigen::Matrix<double, 2, 3>;

/// One gain per trajectory step. The feedback law is u = u_ref - K e with
/// e = state - reference (heading wrapped).
struct GainSchedule {
  std::vector<FeedbackGain> gains;
  std::size_t size() const { return gains.size(); }
};

/// Finite-horizon discrete Riccati recursion for x_{t+1} = A_t x_t + B_t u_t
/// with stage cost x'Qx + u'Ru and terminal cost x'Qf x. Returns K_t with
/// u_t = -K_t x_t. Throws robokit::Error when R + B'PB is not positive
/// definite. If `cost_to_go` is given it receives P_0..P_N.
std::vector<Eigen::MatrixXd> riccati_backward(
    std::span<const Eigen::MatrixXd> A, std::span<const Eigen::MatrixXd> B,
    const Eigen::MatrixXd& Q, const Eigen::MatrixXd& R, const Eigen::MatrixXd& Qf,
    std::vector<Eigen::MatrixXd>* cost_to_go = nullptr);

/// Linearizes about every (state, control) pair and runs the recursion.
/// Requires at least two states.
GainSchedule lqr_backward_pass(const TimedTrajectory& traj,
                               const CostWeights& weights);

/// State error in the reference frame axes: (dx, dy, wrapped dtheta).
Eigen::Vector3d tracking_error(const Pose2D& state, const Pose2D& reference);

/// u_ref(t) - K_t * error, clamped to the velocity limits.
ControlCommand lqr_track_step(const Pose2D& state, std::size_t t,
                              const TimedTrajectory& traj,
                              const GainSchedule& gains, const BaseLimits& limits);

}  // namespace robokit

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
#include "robokit/lqr.hpp"

#include <cmath>

#include <Eigen/Dense>

#include "robokit/errors.hpp"

namespace robokit {

namespace {

bool symmetric(const Eigen::MatrixXd& m) {
  return (m - m.transpose()).cwiseAbs().maxCoeff() <= 1e-12 * (1.0 + m.cwiseAbs().maxCoeff());
}

double min_eigenvalue(const Eigen::MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
  return es.eigenvalues().minCoeff();
}

}  // namespace

void CostWeights::validate() const {
  if (!symmetric(Q) || min_eigenvalue(Q) < -1e-12) {
    throw ValidationError("Q", "must be symmetric positive semidefinite");
  }
  if (!symmetric(Qf) || min_eigenvalue(Qf) < -1e-12) {
    throw ValidationError("Qf", "must be symmetric positive semidefinite");
  }
  if (!symmetric(R) || min_eigenvalue(R) <= 0.0) {
    throw ValidationError("R", "must be symmetric positive definite");
  }
}

LinearDynamics linearize_dynamics(const Pose2D& ref_state,
                                  const ControlCommand& ref_control, double dt) {
  if (!(dt > 0.0)) throw ValidationError("dt", "must be positive");
  const double c = std::cos(ref_state.theta);
  const double s = std::sin(ref_state.theta);
  LinearDynamics d;
  d.A.setIdentity();
  d.A(0, 2) = -dt * ref_control.v * s;
  d.A(1, 2) = dt * ref_control.v * c;
  d.B.setZero();
  d.B(0, 0) = dt * c;
  d.B(1, 0) = dt * s;
  d.B(2, 1) = dt;
  return d;
}

std::vector<Eigen::MatrixXd> riccati_backward(
    std::span<const Eigen::MatrixXd> A, std::span<const Eigen::MatrixXd> B,
    const Eigen::MatrixXd& Q, const Eigen::MatrixXd& R, const Eigen::MatrixXd& Qf,
    std::vector<Eigen::MatrixXd>* cost_to_go) {
  if (A.size() != B.size()) {
    throw ValidationError("B", "needs one input matrix per state matrix");
  }
  const std::size_t n = A.size();
  std::vector<Eigen::MatrixXd> gains(n);
  if (cost_to_go) cost_to_go->assign(n + 1, Eigen::MatrixXd());
  Eigen::MatrixXd P = Qf;
  if (cost_to_go) (*cost_to_go)[n] = P;
  for (std::size_t i = n; i-- > 0;) {
    const Eigen::MatrixXd& a = A[i];
    const Eigen::MatrixXd& b = B[i];
    const Eigen::MatrixXd btp = b.transpose() * P;
    const Eigen::MatrixXd s = R + btp * b;
    const Eigen::LLT<Eigen::MatrixXd> llt(s);
    if (llt.info() != Eigen::Success) {
      throw Error("riccati_backward: R + B'PB is not positive definite at step " +
                  std::to_string(i));
    }
    gains[i] = llt.solve(btp * a);
    const Eigen::MatrixXd closed = a - b * gains[i];
    // Joseph form keeps P symmetric.
    P = Q + gains[i].transpose() * R * gains[i] + closed.transpose() * P * closed;
    P = 0.5 * (P + P.transpose());
    if (cost_to_go) (*cost_to_go)[i] = P;
  }
  return gains;
}

GainSchedule lqr_backward_pass(const TimedTrajectory& traj,
                               const CostWeights& weights) {
  if (traj.states.size() < 2) {
    throw ValidationError("trajectory", "needs at least two states");
  }
  std::vector<Eigen::MatrixXd> as, bs;
  as.reserve(traj.horizon());
  bs.reserve(traj.horizon());
  for (std::size_t t = 0; t < traj.horizon(); ++t) {
    const auto lin = linearize_dynamics(traj.states[t], traj.controls[t], traj.dt);
    as.emplace_back(lin.A);
    bs.emplace_back(lin.B);
  }
  const auto k = riccati_backward(as, bs, weights.Q, weights.R, weights.Qf);
  GainSchedule schedule;
  schedule.gains.reserve(k.size());
  for (const auto& g : k) schedule.gains.emplace_back(g);
  return schedule;
}

Eigen::Vector3d tracking_error(const Pose2D& state, const Pose2D& reference) {
  return {state.x - reference.x, state.y - reference.y,
          wrap_angle(state.theta - reference.theta)};
}

ControlCommand lqr_track_step(const Pose2D& state, std::size_t t,
                              const TimedTrajectory& traj,
                              const GainSchedule& gains, const BaseLimits& limits) {
  if (t >= traj.horizon() || t >= gains.size()) {
    throw ValidationError("t", "step index beyond the trajectory horizon");
  }
  const Eigen::Vector2d du = gains.gains[t] * tracking_error(state, traj.states[t]);
  const ControlCommand& ref = traj.controls[t];
  return clamp_velocity({ref.v - du.x(), ref.w - du.y()}, limits);
}

}  // namespace robokit

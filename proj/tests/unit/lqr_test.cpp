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
#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "robokit/errors.hpp"
#include "robokit/lqr.hpp"
#include "robokit/sim/diff_drive.hpp"
#include "robokit/trajectory.hpp"

namespace robokit {
namespace {

using Eigen::MatrixXd;

TEST(Riccati, ScalarGainConvergesToGoldenRatioConjugate) {
  const int n = 200;
  const std::vector<MatrixXd> A(n, MatrixXd::Ones(1, 1)), B(n, MatrixXd::Ones(1, 1));
  const MatrixXd one = MatrixXd::Ones(1, 1);
  const auto K = riccati_backward(A, B, one, one, one);
  ASSERT_EQ(K.size(), static_cast<std::size_t>(n));
  EXPECT_NEAR(K.front()(0, 0), (std::sqrt(5.0) - 1.0) / 2.0, 1e-8);
}

TEST(Riccati, OneStepMatchesHandDerivation) {
  // N = 1: K = (R + B'QfB)^-1 B'QfA.
  const MatrixXd A = (MatrixXd(1, 1) << 2.0).finished();
  const MatrixXd B = (MatrixXd(1, 1) << 3.0).finished();
  const MatrixXd Q = (MatrixXd(1, 1) << 1.0).finished();
  const MatrixXd R = (MatrixXd(1, 1) << 4.0).finished();
  const MatrixXd Qf = (MatrixXd(1, 1) << 5.0).finished();
  std::vector<MatrixXd> P;
  const auto K = riccati_backward(std::vector<MatrixXd>{A}, std::vector<MatrixXd>{B}, Q, R,
                                  Qf, &P);
  EXPECT_NEAR(K[0](0, 0), 30.0 / 49.0, 1e-14);
  ASSERT_EQ(P.size(), 2u);
  EXPECT_NEAR(P[1](0, 0), 5.0, 1e-14);
  EXPECT_NEAR(P[0](0, 0), 1.0 + 20.0 - 900.0 / 49.0, 1e-12);
}

struct RandomProblem {
  std::vector<MatrixXd> A, B;
  MatrixXd Q, R, Qf;
};

RandomProblem random_problem(std::mt19937_64& rng, int horizon) {
  std::normal_distribution<double> n;
  auto random = [&](int r, int c) {
    MatrixXd m(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) m(i, j) = n(rng);
    return m;
  };
  RandomProblem p;
  for (int t = 0; t < horizon; ++t) {
    p.A.push_back(MatrixXd::Identity(3, 3) + 0.3 * random(3, 3));
    p.B.push_back(random(3, 2));
  }
  const MatrixXd q = random(3, 3), r = random(2, 2), f = random(3, 3);
  p.Q = q * q.transpose() + 0.1 * MatrixXd::Identity(3, 3);
  p.R = r * r.transpose() + 0.1 * MatrixXd::Identity(2, 2);
  p.Qf = f * f.transpose() + 0.1 * MatrixXd::Identity(3, 3);
  return p;
}

TEST(Riccati, CostToGoEqualsRolloutCost) {
  std::mt19937_64 rng(31);
  const RandomProblem p = random_problem(rng, 20);
  std::vector<MatrixXd> P;
  const auto K = riccati_backward(p.A, p.B, p.Q, p.R, p.Qf, &P);
  const Eigen::Vector3d x0(0.3, -0.7, 1.1);
  const double rollout = testing::rollout_cost(p.A, p.B, K, p.Q, p.R, p.Qf, x0);
  EXPECT_NEAR(rollout, x0.dot(P[0] * x0), 1e-9 * std::max(1.0, rollout));
}

TEST(Riccati, BeatsPerturbedPolicies) {
  std::mt19937_64 rng(37);
  std::normal_distribution<double> n;
  for (int instance = 0; instance < 5; ++instance) {
    const RandomProblem p = random_problem(rng, 15);
    const auto K = riccati_backward(p.A, p.B, p.Q, p.R, p.Qf);
    const Eigen::Vector3d x0(n(rng), n(rng), n(rng));
    const double best = testing::rollout_cost(p.A, p.B, K, p.Q, p.R, p.Qf, x0);
    for (int trial = 0; trial < 200; ++trial) {
      auto other = K;
      const double scale = trial % 2 ? 1e-3 : 0.3;
      for (auto& k : other)
        for (Eigen::Index i = 0; i < k.size(); ++i) k.data()[i] += scale * n(rng);
      EXPECT_LE(best, testing::rollout_cost(p.A, p.B, other, p.Q, p.R, p.Qf, x0) + 1e-12);
    }
  }
}

TEST(Riccati, GainsInvariantUnderCostScaling) {
  std::mt19937_64 rng(41);
  const RandomProblem p = random_problem(rng, 10);
  const auto K1 = riccati_backward(p.A, p.B, p.Q, p.R, p.Qf);
  const auto K2 = riccati_backward(p.A, p.B, 7.0 * p.Q, 7.0 * p.R, 7.0 * p.Qf);
  for (std::size_t t = 0; t < K1.size(); ++t) {
    EXPECT_LE((K1[t] - K2[t]).cwiseAbs().maxCoeff(), 1e-9);
  }
}

TEST(Riccati, RejectsIndefiniteControlCost) {
  const std::vector<MatrixXd> A(3, MatrixXd::Identity(1, 1));
  const std::vector<MatrixXd> B(3, MatrixXd::Zero(1, 1));
  const MatrixXd one = MatrixXd::Ones(1, 1);
  EXPECT_THROW(riccati_backward(A, B, one, -one, one), Error);
}

Eigen::Vector3d simulate(const Pose2D& s, const ControlCommand& u, double dt) {
  sim::BaseNoiseSource quiet{sim::BaseNoiseModel{}};
  sim::DiffDriveSimState state;
  state.true_pose = state.odom_pose = s;
  state.velocity = u;
  BaseLimits wide{100.0, 100.0, 1e6, 1e6};
  const Pose2D p = sim::step_base(state, u, dt, wide, quiet).true_pose;
  return {p.x, p.y, p.theta};
}

// The linearization is of the Euler step; it agrees with the exact-arc
// simulator to first order only where the arc reduces to a straight segment
// (w_ref = 0, for A) or a pure rotation (v_ref = 0, for B).
TEST(Linearization, StateJacobianMatchesSimulatorForStraightReference) {
  const double dt = 0.05, h = 1e-6;
  const Pose2D ref{0.3, -0.2, 0.7};
  const ControlCommand u{0.25, 0.0};
  const LinearDynamics lin = linearize_dynamics(ref, u, dt);
  for (int i = 0; i < 3; ++i) {
    Pose2D plus = ref, minus = ref;
    (&plus.x)[i] += h;
    (&minus.x)[i] -= h;
    const Eigen::Vector3d col = (simulate(plus, u, dt) - simulate(minus, u, dt)) / (2 * h);
    EXPECT_LE((col - lin.A.col(i)).cwiseAbs().maxCoeff(), 1e-6) << "column " << i;
  }
}

TEST(Linearization, InputJacobianMatchesSimulatorForRotationReference) {
  const double dt = 0.05, h = 1e-6;
  const Pose2D ref{0.3, -0.2, 0.7};
  const ControlCommand u{0.0, 0.8};
  const LinearDynamics lin = linearize_dynamics(ref, u, dt);
  for (int i = 0; i < 2; ++i) {
    ControlCommand plus = u, minus = u;
    (i == 0 ? plus.v : plus.w) += h;
    (i == 0 ? minus.v : minus.w) -= h;
    Eigen::Vector3d col = (simulate(ref, plus, dt) - simulate(ref, minus, dt)) / (2 * h);
    // Only the leading-order term of the rotating chord survives.
    const Eigen::Vector3d expected = lin.B.col(i);
    EXPECT_LE((col - expected).cwiseAbs().maxCoeff(), 0.5 * 0.8 * dt * dt + 1e-6)
        << "column " << i;
  }
}

TEST(Linearization, InputJacobianExactForStationaryReference) {
  const double dt = 0.05, h = 1e-6;
  const Pose2D ref{0.3, -0.2, 0.7};
  const ControlCommand u{0.0, 0.0};
  const LinearDynamics lin = linearize_dynamics(ref, u, dt);
  for (int i = 0; i < 2; ++i) {
    ControlCommand plus = u, minus = u;
    (i == 0 ? plus.v : plus.w) += h;
    (i == 0 ? minus.v : minus.w) -= h;
    const Eigen::Vector3d col = (simulate(ref, plus, dt) - simulate(ref, minus, dt)) / (2 * h);
    EXPECT_LE((col - lin.B.col(i)).cwiseAbs().maxCoeff(), 1e-6) << "column " << i;
  }
}

TEST(LqrBackwardPass, OneGainPerStepAndRejectsShortTrajectory) {
  const TimedTrajectory traj =
      generate_sharp_trajectory({0, 0, 0}, {1.0, 0.5, 0.3}, BaseLimits{}, 0.05);
  const GainSchedule gains = lqr_backward_pass(traj, CostWeights{});
  EXPECT_EQ(gains.size(), traj.horizon());
  TimedTrajectory single;
  single.states = {Pose2D{}};
  EXPECT_THROW(lqr_backward_pass(single, CostWeights{}), ValidationError);
}

TEST(LqrTrackStep, OnReferenceReturnsReferenceControl) {
  const TimedTrajectory traj =
      generate_sharp_trajectory({0, 0, 0}, {1.0, 0.5, 0.3}, BaseLimits{}, 0.05);
  const GainSchedule gains = lqr_backward_pass(traj, CostWeights{});
  for (std::size_t t = 0; t < traj.horizon(); t += 7) {
    const ControlCommand u = lqr_track_step(traj.states[t], t, traj, gains, BaseLimits{});
    EXPECT_NEAR(u.v, traj.controls[t].v, 1e-12);
    EXPECT_NEAR(u.w, traj.controls[t].w, 1e-12);
  }
}

TEST(LqrTrackStep, FeedbackReducesLongitudinalLag) {
  const TimedTrajectory traj =
      generate_sharp_trajectory({0, 0, 0}, {1.0, 0.0, 0.0}, BaseLimits{}, 0.05);
  const GainSchedule gains = lqr_backward_pass(traj, CostWeights{});
  const std::size_t t = traj.horizon() / 2;
  Pose2D behind = traj.states[t];
  behind.x -= 0.05;
  const ControlCommand u = lqr_track_step(behind, t, traj, gains, BaseLimits{}.scaled(3.0));
  EXPECT_GT(u.v, traj.controls[t].v);
}

TEST(CostWeights, ValidateRejectsIndefiniteR) {
  CostWeights w;
  w.R(1, 1) = -1.0;
  EXPECT_THROW(w.validate(), ValidationError);
}

}  // namespace
}  // namespace robokit

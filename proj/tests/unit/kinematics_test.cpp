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
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "robokit/config.hpp"
#include "robokit/errors.hpp"
#include "robokit/kinematics.hpp"

namespace robokit {
namespace {

KinematicChain planar_two_link(double l1, double l2) {
  RevoluteJoint a;
  a.name = "shoulder";
  a.axis = Eigen::Vector3d::UnitZ();
  RevoluteJoint b = a;
  b.name = "elbow";
  b.parent_transform = SE3Pose::from_translation({l1, 0.0, 0.0});
  return KinematicChain({a, b}, SE3Pose::from_translation({l2, 0.0, 0.0}));
}

TEST(ForwardKinematics, PlanarTwoLinkClosedForm) {
  const double l1 = 0.4, l2 = 0.25;
  const KinematicChain chain = planar_two_link(l1, l2);
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int i = 0; i < 100; ++i) {
    JointVector q(2);
    q << u(rng), u(rng);
    const Eigen::Vector3d p = forward_kinematics(chain, q).translation();
    EXPECT_NEAR(p.x(), l1 * std::cos(q[0]) + l2 * std::cos(q[0] + q[1]), 1e-14);
    EXPECT_NEAR(p.y(), l1 * std::sin(q[0]) + l2 * std::sin(q[0] + q[1]), 1e-14);
    EXPECT_NEAR(p.z(), 0.0, 1e-14);
  }
}

TEST(ForwardKinematics, ZeroConfigurationIsProductOfOffsets) {
  const RobotConfig cfg = load_config(resolve_config_path("locobot"));
  const Eigen::Vector3d p =
      forward_kinematics(cfg.arm.chain, JointVector::Zero(5)).translation();
  // Offsets of the shipped chain summed along x and z.
  EXPECT_NEAR(p.x(), 0.05 + 0.0 + 0.04 + 0.22 + 0.06 + 0.08, 1e-12);
  EXPECT_NEAR(p.y(), 0.0, 1e-12);
  EXPECT_NEAR(p.z(), 0.22 + 0.07 + 0.19, 1e-12);
}

TEST(Jacobian, MatchesFiniteDifferencesOnRandomChains) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const int dof = 2 + trial % 6;
    const KinematicChain chain = testing::random_chain(rng, dof);
    const JointVector q = testing::random_configuration(chain, rng, 0.01);
    const Jacobian analytic = jacobian(chain, q);
    const Jacobian numeric = testing::finite_difference_jacobian(chain, q);
    EXPECT_LE((analytic - numeric).cwiseAbs().maxCoeff(), 1e-5) << "trial " << trial;
  }
}

TEST(InverseKinematics, RoundTripsReachableTargets) {
  std::mt19937_64 rng(23);
  int converged = 0;
  const int trials = 60;
  for (int trial = 0; trial < trials; ++trial) {
    const KinematicChain chain = testing::random_chain(rng, 6 + trial % 2);
    const JointVector truth = testing::random_configuration(chain, rng, 0.2);
    const SE3Pose target = forward_kinematics(chain, truth);
    const IkResult r = inverse_kinematics(chain, target, JointVector::Zero(chain.dof()), {});
    if (!r.converged) continue;
    ++converged;
    const SE3Pose got = forward_kinematics(chain, r.q);
    EXPECT_LE((got.translation() - target.translation()).norm(), 1e-6);
    EXPECT_LE(rotation_error(got.rotation(), target.rotation()).norm(), 1e-6);
    EXPECT_TRUE(chain.within_limits(r.q));
  }
  EXPECT_GE(converged, trials * 95 / 100);
}

TEST(InverseKinematics, PitchRollTargetsOnFiveJointArm) {
  const RobotConfig cfg = load_config(resolve_config_path("locobot"));
  for (const auto& p : cfg.arm.repeatability_poses) {
    const SE3Pose target =
        pitch_roll_target(cfg.arm.chain, p, std::numbers::pi / 2.0, 0.0);
    const IkResult r =
        inverse_kinematics(cfg.arm.chain, target, cfg.arm.named_pose("home"), cfg.arm.ik);
    ASSERT_TRUE(r.converged);
    EXPECT_LE((forward_kinematics(cfg.arm.chain, r.q).translation() - p).norm(), 1e-6);
  }
}

TEST(InverseKinematics, UnreachableTargetReportsNoConvergence) {
  const KinematicChain chain = planar_two_link(0.4, 0.25);
  IkParams params;
  params.position_only = true;
  const IkResult r = inverse_kinematics(
      chain, SE3Pose::from_translation({2.0, 0.0, 0.0}), JointVector::Zero(2), params);
  EXPECT_FALSE(r.converged);
}

TEST(KinematicChain, RejectsBadJointVectors) {
  const KinematicChain chain = planar_two_link(0.4, 0.25);
  EXPECT_THROW(chain.check(JointVector::Zero(3)), DimensionError);
  JointVector q(2);
  q << 0.0, 10.0;
  try {
    chain.check(q);
    FAIL() << "expected JointLimitError";
  } catch (const JointLimitError& e) {
    EXPECT_NE(std::string(e.what()).find("elbow"), std::string::npos);
  }
}

}  // namespace
}  // namespace robokit

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
#include <limits>
#include <numbers>

#include "robokit/base_controller.hpp"
#include "robokit/config.hpp"
#include "robokit/dwa.hpp"
#include "robokit/errors.hpp"
#include "robokit/proportional.hpp"
#include "robokit/robot.hpp"
#include "robokit/sim/backend.hpp"

namespace robokit {
namespace {

constexpr double kPi = std::numbers::pi;

RobotConfig quiet_locobot() {
  RobotConfig cfg = load_config(resolve_config_path("locobot"));
  const auto seed = cfg.base.noise.seed;
  cfg.base.noise = sim::BaseNoiseModel{};
  cfg.base.noise.seed = seed;
  return cfg;
}

TEST(Proportional, PhasesProgressAlignDriveRotate) {
  const ProportionalGains gains;
  const BaseLimits limits;
  Pose2D s{0, 0, 0};
  const Pose2D goal{1.0, 1.0, 0.0};
  auto out = proportional_step(s, goal, PropPhase::kAlign, gains, limits, {}, 0.05);
  EXPECT_EQ(out.next, PropPhase::kAlign);
  EXPECT_EQ(out.cmd.v, 0.0);
  EXPECT_GT(out.cmd.w, 0.0);

  s.theta = kPi / 4.0;
  out = proportional_step(s, goal, PropPhase::kAlign, gains, limits, {}, 0.05);
  EXPECT_EQ(out.next, PropPhase::kDrive);

  const Pose2D there{1.0, 1.0, kPi / 4.0};
  out = proportional_step(there, goal, PropPhase::kDrive, gains, limits, {}, 0.05);
  EXPECT_EQ(out.next, PropPhase::kFinalRotate);
  out = proportional_step({1.0, 1.0, 0.0}, goal, PropPhase::kFinalRotate, gains, limits, {},
                          0.05);
  EXPECT_EQ(out.next, PropPhase::kDone);
}

TEST(Proportional, CommandsRespectLimits) {
  const ProportionalGains gains;
  const BaseLimits limits;
  const ControlCommand prev{0.1, 0.2};
  const auto out = proportional_step({0, 0, 0}, {5.0, 0.0, 0.0}, PropPhase::kDrive, gains,
                                     limits, prev, 0.05);
  EXPECT_LE(std::abs(out.cmd.v - prev.v), limits.a_max * 0.05 + 1e-12);
  EXPECT_LE(std::abs(out.cmd.w - prev.w), limits.alpha_max * 0.05 + 1e-12);
}

TEST(Proportional, TrackStepFeedsBackAlongTrackAndHeading) {
  const ProportionalGains gains;
  const BaseLimits limits;
  const Pose2D ref{1.0, 0.0, 0.0};
  const ControlCommand u = proportional_track_step({0.9, 0.0, 0.1}, ref, {0.1, 0.0}, gains,
                                                   limits);
  EXPECT_NEAR(u.v, 0.1 + gains.k_lin * 0.1 * std::cos(0.1), 1e-2);
  EXPECT_LT(u.w, 0.0);
}

double brute_clearance(const OccupancyGrid& g, double x, double y) {
  const auto cell = g.world_to_cell(x, y);
  if (!cell) return 0.0;
  const Eigen::Vector2d from = g.cell_center(cell->ix, cell->iy);
  double best = std::numeric_limits<double>::infinity();
  for (int iy = 0; iy < g.height(); ++iy)
    for (int ix = 0; ix < g.width(); ++ix)
      if (g.at(ix, iy) != Cell::kFree) {
        const Eigen::Vector2d c = g.cell_center(ix, iy);
        best = std::min(best, (c - from).norm());
      }
  return best;
}

// Rescores a window from the documented objective without the library.
double oracle_score(const Pose2D& s, const ControlCommand& c, const Pose2D& goal,
                    const OccupancyGrid& g, const BaseLimits& l, const DwaParams& p) {
  auto at = [&](double t) {
    if (std::abs(c.w) < 1e-12) {
      return Pose2D::make(s.x + c.v * t * std::cos(s.theta), s.y + c.v * t * std::sin(s.theta),
                          s.theta);
    }
    const double r = c.v / c.w;
    return Pose2D::make(s.x + r * (std::sin(s.theta + c.w * t) - std::sin(s.theta)),
                        s.y - r * (std::cos(s.theta + c.w * t) - std::cos(s.theta)),
                        s.theta + c.w * t);
  };
  double nearest = brute_clearance(g, s.x, s.y);
  const int steps = static_cast<int>(std::round(p.horizon / p.sim_step));
  for (int i = 1; i <= steps; ++i) {
    const Pose2D q = at(i * p.sim_step);
    nearest = std::min(nearest, brute_clearance(g, q.x, q.y));
  }
  if (nearest < p.robot_radius) return -std::numeric_limits<double>::infinity();
  const Pose2D e = at(p.horizon);
  const double d0 = std::hypot(goal.x - s.x, goal.y - s.y);
  const double d1 = std::hypot(goal.x - e.x, goal.y - e.y);
  const double heading =
      d1 < p.xy_tolerance
          ? 1.0
          : 1.0 - std::abs(wrap_angle(std::atan2(goal.y - e.y, goal.x - e.x) - e.theta)) / kPi;
  return p.weights.heading * heading +
         p.weights.distance * (1.0 - d1 / std::max(d0, p.xy_tolerance)) +
         p.weights.velocity * c.v / l.v_max +
         p.weights.clearance * std::min(nearest, p.clearance_cap) / p.clearance_cap;
}

OccupancyGrid wall_grid() {
  std::vector<Cell> cells(40 * 40, Cell::kFree);
  for (int iy = 0; iy < 40; ++iy) cells[iy * 40 + 30] = Cell::kOccupied;
  return OccupancyGrid(40, 40, 0.05, Pose2D{-1.0, -1.0, 0.0}, cells);
}

TEST(Dwa, SampleWindowIsReachableInOneStep) {
  const BaseLimits limits;
  const DwaParams params;
  const ControlCommand current{0.1, -0.3};
  const auto window = dwa_sample_window(current, limits, params, 0.05);
  EXPECT_EQ(window.size(), static_cast<std::size_t>(params.v_samples * params.w_samples));
  for (const auto& c : window) {
    EXPECT_LE(std::abs(c.v - current.v), limits.a_max * 0.05 + 1e-12);
    EXPECT_LE(std::abs(c.w - current.w), limits.alpha_max * 0.05 + 1e-12);
    EXPECT_GE(c.v, params.v_min);
  }
}

TEST(Dwa, ScoreMatchesBruteForceRescoring) {
  const OccupancyGrid grid = wall_grid();
  const BaseLimits limits;
  const DwaParams params;
  const Pose2D goal{0.4, 0.3, 0.0};
  for (const Pose2D s : {Pose2D{-0.5, 0.0, 0.2}, Pose2D{0.0, -0.2, 1.0}, Pose2D{0.3, 0.0, 0.0}}) {
    for (const auto& c : dwa_sample_window({0.15, 0.1}, limits, params, 0.05)) {
      const double got = dwa_score(s, c, goal, &grid, limits, params);
      const double want = oracle_score(s, c, goal, grid, limits, params);
      if (std::isinf(want)) {
        EXPECT_TRUE(std::isinf(got));
      } else {
        EXPECT_NEAR(got, want, 1e-9);
      }
    }
  }
}

TEST(Dwa, StepPicksBestRescoredCandidate) {
  const OccupancyGrid grid = wall_grid();
  const BaseLimits limits;
  const DwaParams params;
  const Pose2D s{-0.5, 0.0, 0.2};
  const Pose2D goal{0.4, 0.3, 0.0};
  const ControlCommand current{0.15, 0.1};
  const DwaDecision d = dwa_step(s, current, goal, &grid, DwaMode::kTranslate, limits, params, 0.05);
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& c : dwa_sample_window(current, limits, params, 0.05)) {
    best = std::max(best, oracle_score(s, c, goal, grid, limits, params));
  }
  EXPECT_FALSE(d.blocked);
  EXPECT_NEAR(oracle_score(s, d.cmd, goal, grid, limits, params), best, 1e-9);
}

TEST(Dwa, BlockedWhenEveryRolloutCollides) {
  std::vector<Cell> cells(20 * 20, Cell::kOccupied);
  const OccupancyGrid solid(20, 20, 0.05, Pose2D{-0.5, -0.5, 0.0}, cells);
  const DwaDecision d = dwa_step({0, 0, 0}, {0.2, 0.0}, {0.4, 0.0, 0.0}, &solid,
                                 DwaMode::kTranslate, BaseLimits{}, DwaParams{}, 0.05);
  EXPECT_TRUE(d.blocked);
  EXPECT_NEAR(d.cmd.v, 0.2 - BaseLimits{}.a_max * 0.05, 1e-12);
}

TEST(Dwa, SwitchesToRotateThenDone) {
  const DwaParams params;
  auto d = dwa_step({0, 0, 0}, {}, {0.001, 0.0, 1.0}, nullptr, DwaMode::kTranslate,
                    BaseLimits{}, params, 0.05);
  EXPECT_EQ(d.next, DwaMode::kRotate);
  EXPECT_GT(d.cmd.w, 0.0);
  d = dwa_step({0, 0, 1.0}, {}, {0.001, 0.0, 1.0}, nullptr, DwaMode::kRotate, BaseLimits{},
               params, 0.05);
  EXPECT_EQ(d.next, DwaMode::kDone);
}

class GoToZeroNoise : public ::testing::TestWithParam<const char*> {};

TEST_P(GoToZeroNoise, ReachesStandardTargets) {
  const RobotConfig cfg = quiet_locobot();
  const std::string controller = GetParam();
  const bool dwa = controller == "dwa";
  for (const Pose2D target : {Pose2D{2, 0, 0}, Pose2D{-2, 0, 0}, Pose2D{0, 0, kPi / 2},
                              Pose2D{0, 0, -kPi / 2}, Pose2D{1, 1, 0}, Pose2D{-1, -1, 0}}) {
    RobotHandle robot = make_robot(cfg, sim::make_sim_backend(cfg, 3));
    const MotionResult m = robot.base().go_to_absolute(target, controller);
    EXPECT_TRUE(m.reached) << m.message;
    EXPECT_LT(m.elapsed, 60.0);
    EXPECT_LT(planar_distance(m.measured_pose, target), dwa ? 0.020 : 0.005);
    EXPECT_LT(rad2deg(heading_error(m.measured_pose, target)), dwa ? 2.0 : 0.5);
  }
}

INSTANTIATE_TEST_SUITE_P(Controllers, GoToZeroNoise,
                         ::testing::Values("lqr", "proportional", "dwa"));

TEST(GoTo, UnknownControllerIsValidationError) {
  const RobotConfig cfg = quiet_locobot();
  RobotHandle robot = make_robot(cfg, sim::make_sim_backend(cfg, 3));
  EXPECT_THROW(robot.base().go_to_absolute({1, 0, 0}, "pid"), ValidationError);
}

TEST(GoTo, RelativeTargetComposesWithOdometry) {
  const RobotConfig cfg = quiet_locobot();
  RobotHandle robot = make_robot(cfg, sim::make_sim_backend(cfg, 3));
  robot.base().go_to_absolute({0, 0, kPi / 2}, "lqr");
  const MotionResult m = robot.base().go_to_relative({0.5, 0, 0}, "lqr");
  EXPECT_NEAR(m.odom_pose.x, 0.0, 0.005);
  EXPECT_NEAR(m.odom_pose.y, 0.5, 0.005);
}

TEST(Tracking, ZeroSpeedReferenceProducesNoMotion) {
  const RobotConfig cfg = quiet_locobot();
  RobotHandle robot = make_robot(cfg, sim::make_sim_backend(cfg, 3));
  TimedTrajectory still;
  still.dt = cfg.base.dt;
  still.states.assign(21, Pose2D{});
  still.controls.assign(20, ControlCommand{});
  const TrackingLog log = robot.base().track_trajectory(still, "lqr");
  EXPECT_EQ(log.entries.size(), 20u);
  EXPECT_EQ(log.final_measured, Pose2D{});
}

}  // namespace
}  // namespace robokit

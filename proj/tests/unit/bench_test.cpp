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
#include "robokit/bench/arm_bench.hpp"
#include "robokit/bench/base_bench.hpp"
#include "robokit/bench/report.hpp"
#include "robokit/bench/stats.hpp"
#include "robokit/bench/tracking_bench.hpp"
#include "robokit/sim/backend.hpp"

namespace robokit::bench {
namespace {

constexpr double kPi = std::numbers::pi;

BackendFactory factory(const RobotConfig& cfg) {
  return [cfg](std::uint64_t seed) -> std::shared_ptr<Backend> {
    return sim::make_sim_backend(cfg, seed);
  };
}

RobotConfig locobot() { return load_config(resolve_config_path("locobot")); }

TEST(Stats, MatchReferenceFormulas) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> n(10.0, 3.0);
  for (int size : {1, 2, 5, 100}) {
    std::vector<double> xs(size);
    for (auto& x : xs) x = n(rng);
    EXPECT_NEAR(mean(xs), testing::reference_mean(xs), 1e-12);
    EXPECT_NEAR(sample_std(xs), testing::reference_std(xs), 1e-12);
  }
}

TEST(Stats, TableCellFormatting) {
  EXPECT_EQ(format_pm(17.0, 5.0), "17 ± 5");
  EXPECT_EQ(format_pm(0.456, 0.01, 2), "0.46 ± 0.01");
  EXPECT_EQ(exact_number(0.1), "0.1");
  EXPECT_EQ(std::stod(exact_number(1.0 / 3.0)), 1.0 / 3.0);
}

TEST(Iso9283, HandComputedExample) {
  const Iso9283 r = iso9283_repeatability({{0, 0, 0}, {1, 0, 0}, {-1, 0, 0}});
  EXPECT_EQ(r.barycenter, Eigen::Vector3d::Zero());
  EXPECT_NEAR(r.l_mean, 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(r.l_std, std::sqrt(1.0 / 3.0), 1e-15);
  EXPECT_NEAR(r.rp, 2.0 / 3.0 + 3.0 * std::sqrt(1.0 / 3.0), 1e-14);
  EXPECT_NEAR(r.rp, 2.399, 5e-4);
}

TEST(Iso9283, IdenticalPointsGiveZero) {
  const Iso9283 r = iso9283_repeatability(std::vector<Eigen::Vector3d>(10, {1, 2, 3}));
  EXPECT_EQ(r.rp, 0.0);
}

TEST(ScoreTrial, RotationErrorIgnoresFullTurns) {
  const Pose2D target{1.0, 0.0, 0.2};
  const TrialResult a = score_trial(target, {1.0, 0.003, 0.25}, {1.0, 0.0, 0.2});
  const TrialResult b =
      score_trial({1.0, 0.0, 0.2 + 2 * kPi}, {1.0, 0.003, 0.25 - 2 * kPi}, {1.0, 0.0, 0.2});
  EXPECT_NEAR(a.translation_gt_mm, 3.0, 1e-9);
  EXPECT_NEAR(a.rotation_gt_deg, rad2deg(0.05), 1e-9);
  EXPECT_NEAR(b.rotation_gt_deg, a.rotation_gt_deg, 1e-9);
  EXPECT_EQ(a.translation_odom_mm, 0.0);
}

TEST(Aggregate, MatchesReferenceAndOrdering) {
  std::vector<TrialResult> trials;
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 50.0);
  for (const char* c : {"dwa", "lqr"}) {
    for (const char* cls : kMotionClasses) {
      for (int k = 0; k < 4; ++k) {
        TrialResult t;
        t.controller = c;
        t.motion_class = cls;
        t.translation_gt_mm = u(rng);
        t.translation_odom_mm = u(rng);
        t.rotation_gt_deg = u(rng) / 10;
        t.rotation_odom_deg = u(rng) / 10;
        t.reached = k != 2;
        trials.push_back(t);
      }
    }
  }
  const auto rows = aggregate(trials, {"lqr", "dwa"});
  ASSERT_EQ(rows.size(), 2u * 3u * 2u);
  EXPECT_EQ(rows.front().controller, "lqr");
  EXPECT_EQ(rows.front().motion_class, "linear");
  EXPECT_EQ(rows.front().reference, "ground_truth");
  for (const auto& row : rows) {
    std::vector<double> tr, rot;
    for (const auto& t : trials) {
      if (t.controller != row.controller || t.motion_class != row.motion_class) continue;
      const bool gt = row.reference == "ground_truth";
      tr.push_back(gt ? t.translation_gt_mm : t.translation_odom_mm);
      rot.push_back(gt ? t.rotation_gt_deg : t.rotation_odom_deg);
    }
    EXPECT_NEAR(row.translation_mean_mm, testing::reference_mean(tr), 1e-12);
    EXPECT_NEAR(row.translation_std_mm, testing::reference_std(tr), 1e-12);
    EXPECT_NEAR(row.rotation_mean_deg, testing::reference_mean(rot), 1e-12);
    EXPECT_NEAR(row.rotation_std_deg, testing::reference_std(rot), 1e-12);
    EXPECT_EQ(row.n, 4);
    EXPECT_EQ(row.failed, 1);
  }
}

TEST(BaseBenchmark, ZeroNoiseLqrLinearWithinBound) {
  RobotConfig cfg = locobot();
  cfg.base.noise = sim::BaseNoiseModel{};
  const auto report =
      run_base_benchmark(cfg, factory(cfg), {"lqr"}, BaseTrialProtocol::standard(), 7);
  const AggregateRow* row = report.find("lqr", "linear", "ground_truth");
  ASSERT_NE(row, nullptr);
  EXPECT_LT(row->translation_mean_mm, 5.0);
  EXPECT_LT(row->rotation_mean_deg, 0.5);
  EXPECT_EQ(report.aggregates.size(), 6u);
}

TEST(BaseBenchmark, ReportIndependentOfThreadCountAndRepeatable) {
  const RobotConfig cfg = locobot();
  auto protocol = BaseTrialProtocol::standard();
  protocol.trials_per_target = 2;
  const auto a = run_base_benchmark(cfg, factory(cfg), {"lqr", "prop"}, protocol, 5, 1);
  const auto b = run_base_benchmark(cfg, factory(cfg), {"lqr", "prop"}, protocol, 5, 3);
  EXPECT_EQ(base_trials_csv(a), base_trials_csv(b));
  EXPECT_EQ(base_aggregate_csv(a), base_aggregate_csv(b));
}

TEST(BaseBenchmark, TrialSeedsArePairedAcrossControllers) {
  EXPECT_EQ(trial_seed(1, 2, 3, 5), trial_seed(1, 2, 3, 5));
  EXPECT_NE(trial_seed(1, 2, 3, 5), trial_seed(1, 2, 4, 5));
  EXPECT_NE(trial_seed(1, 2, 3, 5), trial_seed(2, 2, 3, 5));
}

TEST(Report, AggregateCsvRoundTrips) {
  const RobotConfig cfg = locobot();
  auto protocol = BaseTrialProtocol::standard();
  protocol.trials_per_target = 2;
  const auto report = run_base_benchmark(cfg, factory(cfg), {"lqr", "dwa"}, protocol, 9);
  const auto back = parse_aggregate_csv(base_aggregate_csv(report));
  ASSERT_EQ(back.size(), report.aggregates.size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    EXPECT_EQ(back[i].controller, report.aggregates[i].controller);
    EXPECT_NEAR(back[i].translation_mean_mm, report.aggregates[i].translation_mean_mm, 1e-12);
    EXPECT_NEAR(back[i].translation_std_mm, report.aggregates[i].translation_std_mm, 1e-12);
    EXPECT_NEAR(back[i].rotation_mean_deg, report.aggregates[i].rotation_mean_deg, 1e-12);
    EXPECT_NEAR(back[i].rotation_std_deg, report.aggregates[i].rotation_std_deg, 1e-12);
  }
}

TEST(Report, EmptyReportIsHeadersOnly) {
  BaseBenchReport empty;
  empty.seed = 4;
  const std::string csv = base_aggregate_csv(empty);
  EXPECT_EQ(csv,
            "# robokit base_aggregate schema 1 seed 4\n"
            "controller,motion_class,reference,translation_mean_mm,translation_std_mm,"
            "rotation_mean_deg,rotation_std_deg,n,failed\n");
  EXPECT_TRUE(parse_aggregate_csv(csv).empty());
  EXPECT_THROW(parse_aggregate_csv("garbage\n"), ConfigParseError);
}

TEST(ArmRepeatability, ZeroNoiseIsPerfectAndSeedRecorded) {
  RobotConfig cfg = locobot();
  cfg.arm.noise.sigma.setZero();
  const auto r = run_arm_repeatability(cfg, factory(cfg), cfg.arm.repeatability_poses, 5, 2);
  ASSERT_EQ(r.poses.size(), 5u);
  EXPECT_EQ(r.poses.back().name, "home");
  for (const auto& p : r.poses) {
    EXPECT_TRUE(p.reachable);
    EXPECT_EQ(p.attained_mm.size(), 5u);
    EXPECT_NEAR(p.rp_mm, 0.0, 1e-6);
  }
  EXPECT_NE(arm_repeatability_csv(r).find("seed 2"), std::string::npos);
}

TEST(ArmRepeatability, UnreachablePoseIsFlaggedAndSkipped) {
  RobotConfig cfg = locobot();
  const auto r = run_arm_repeatability(cfg, factory(cfg),
                                       {{0.3, 0.0, 0.2}, {3.0, 0.0, 0.2}}, 3, 2);
  EXPECT_TRUE(r.poses[0].reachable);
  EXPECT_FALSE(r.poses[1].reachable);
  EXPECT_TRUE(r.poses[1].attained_mm.empty());
  EXPECT_NE(arm_summary(r).find("unreachable"), std::string::npos);
}

TEST(Tracking, ZeroNoiseCircleAndSvg) {
  RobotConfig cfg = locobot();
  cfg.base.noise = sim::BaseNoiseModel{};
  const auto ref = circle_reference(cfg, 0.4);
  const auto report = run_tracking_benchmark(cfg, factory(cfg), ref, "lqr", 1, "circle", 0.4);
  EXPECT_LT(report.rms_mm, 10.0);
  const std::string svg = tracking_svg(report);
  EXPECT_NE(svg.find("stroke=\"red\""), std::string::npos);
  EXPECT_NE(svg.find("stroke=\"black\""), std::string::npos);
  EXPECT_THROW(run_tracking_benchmark(cfg, factory(cfg), ref, "dwa", 1), ValidationError);
}

}  // namespace
}  // namespace robokit::bench

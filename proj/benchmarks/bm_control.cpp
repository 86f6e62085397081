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
#include <benchmark/benchmark.h>

#include "robokit/dwa.hpp"
#include "robokit/lqr.hpp"
#include "robokit/occupancy_grid.hpp"
#include "robokit/trajectory.hpp"

namespace {

using namespace robokit;

void BM_LqrBackwardPass(benchmark::State& state) {
  const TimedTrajectory traj =
      generate_circle_trajectory({0, 0, 0}, 0.4, 0.2, BaseLimits{}, 0.05);
  const CostWeights weights;
  for (auto _ : state) benchmark::DoNotOptimize(lqr_backward_pass(traj, weights));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(traj.horizon()));
}
BENCHMARK(BM_LqrBackwardPass);

void BM_DwaStep(benchmark::State& state) {
  const OccupancyGrid grid(60, 60, 0.05, Pose2D{-1.5, -1.5, 0.0});
  const OccupancyGrid* map = state.range(0) ? &grid : nullptr;
  for (auto _ : state) {
    benchmark::DoNotOptimize(dwa_step({0, 0, 0.1}, {0.2, 0.1}, {1.0, 0.5, 0.0}, map,
                                      DwaMode::kTranslate, BaseLimits{}, DwaParams{}, 0.05));
  }
}
BENCHMARK(BM_DwaStep)->Arg(0)->Arg(1);

}  // namespace

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

#include <random>
#include <vector>

#include "robokit/planner.hpp"
#include "robokit/skills/dbscan.hpp"

namespace {

using namespace robokit;

void BM_AStar(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(1);
  std::bernoulli_distribution wall(0.2);
  std::vector<std::uint8_t> blocked(static_cast<std::size_t>(n) * n);
  for (auto& b : blocked) b = wall(rng);
  const int start = 0, goal = n * n - 1;
  blocked[start] = blocked[goal] = 0;
  for (auto _ : state) benchmark::DoNotOptimize(astar_search(blocked, n, n, start, goal));
}
BENCHMARK(BM_AStar)->Arg(50)->Arg(200);

void BM_Dbscan(benchmark::State& state) {
  std::mt19937_64 rng(2);
  std::normal_distribution<double> nd(0.0, 0.02);
  std::uniform_real_distribution<double> u(-0.5, 0.5);
  std::vector<Eigen::Vector2d> pts;
  for (int i = 0; i < state.range(0); ++i) {
    const Eigen::Vector2d c(0.3 * (i % 3), 0.2 * (i % 2));
    pts.push_back(i % 5 ? c + Eigen::Vector2d(nd(rng), nd(rng)) : Eigen::Vector2d(u(rng), u(rng)));
  }
  for (auto _ : state) benchmark::DoNotOptimize(skills::dbscan(pts, skills::DbscanParams{}));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Dbscan)->Arg(200)->Arg(2000)->Complexity();

}  // namespace

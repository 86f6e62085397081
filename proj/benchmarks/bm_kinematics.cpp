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

#include "robokit/config.hpp"
#include "robokit/kinematics.hpp"

namespace {

using namespace robokit;

const KinematicChain& locobot_chain() {
  static const KinematicChain chain = load_config(resolve_config_path("locobot")).arm.chain;
  return chain;
}

void BM_ForwardKinematics(benchmark::State& state) {
  const KinematicChain& chain = locobot_chain();
  JointVector q = JointVector::Constant(chain.dof(), 0.3);
  for (auto _ : state) benchmark::DoNotOptimize(forward_kinematics(chain, q));
}
BENCHMARK(BM_ForwardKinematics);

void BM_Jacobian(benchmark::State& state) {
  const KinematicChain& chain = locobot_chain();
  JointVector q = JointVector::Constant(chain.dof(), 0.3);
  for (auto _ : state) benchmark::DoNotOptimize(jacobian(chain, q));
}
BENCHMARK(BM_Jacobian);

void BM_PitchRollIk(benchmark::State& state) {
  const KinematicChain& chain = locobot_chain();
  const SE3Pose target = pitch_roll_target(chain, {0.35, 0.05, 0.15}, 1.5707963267948966, 0.0);
  const JointVector seed = JointVector::Zero(chain.dof());
  for (auto _ : state) benchmark::DoNotOptimize(inverse_kinematics(chain, target, seed, {}));
}
BENCHMARK(BM_PitchRollIk);

}  // namespace

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
#include "robokit/sim/diff_drive.hpp"

#include "robokit/errors.hpp"

namespace robokit::sim {

void BaseNoiseModel::validate() const {
  const std::pair<const char*, double> fields[] = {
      {"actuation_v", actuation_v}, {"actuation_w", actuation_w},
      {"odom_v", odom_v},           {"odom_w", odom_w},
      {"odom_bias_spread", odom_bias_spread}};
  for (const auto& [key, value] : fields) {
    if (!(value >= 0.0)) throw ValidationError(key, "must be >= 0");
  }
}

BaseNoiseSource::BaseNoiseSource(const BaseNoiseModel& model)
    : model_(model),
      actuation_(derive_seed(model.seed, "base.actuation")),
      odometry_(derive_seed(model.seed, "base.odometry")) {
  RngStream bias(derive_seed(model.seed, "base.odometry_bias"));
  const double ev = bias.normal();
  const double ew = bias.normal();
  bias_v_ = model.odom_bias_v + model.odom_bias_spread * ev;
  bias_w_ = model.odom_bias_w + model.odom_bias_spread * ew;
}

DiffDriveSimState step_base(const DiffDriveSimState& state,
                            const ControlCommand& cmd, double dt,
                            const BaseLimits& limits, BaseNoiseSource& noise) {
  if (!(dt > 0.0)) throw ValidationError("dt", "must be positive");
  const BaseNoiseModel& m = noise.model();
  const ControlCommand applied = limit_command(cmd, state.velocity, limits, dt);

  const double av = noise.actuation().normal();
  const double aw = noise.actuation().normal();
  const double ov = noise.odometry().normal();
  const double ow = noise.odometry().normal();

  const ControlCommand executed{applied.v * (1.0 + m.actuation_v * av),
                                applied.w * (1.0 + m.actuation_w * aw)};
  const ControlCommand measured{
      executed.v * (1.0 + noise.bias_v() + m.odom_v * ov),
      executed.w * (1.0 + noise.bias_w() + m.odom_w * ow)};

  DiffDriveSimState next;
  next.true_pose = integrate_unicycle(state.true_pose, executed, dt);
  next.odom_pose = integrate_unicycle(state.odom_pose, measured, dt);
  next.velocity = applied;
  next.time = state.time + dt;
  return next;
}

}  // namespace robokit::sim

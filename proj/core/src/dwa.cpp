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
#include "robokit/dwa.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "robokit/errors.hpp"

namespace robokit {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

std::vector<double> lattice(double lo, double hi, int count) {
  std::vector<double> values;
  if (count <= 1 || hi <= lo) {
    values.push_back(count <= 1 ? 0.5 * (lo + hi) : lo);
    return values;
  }
  values.reserve(count);
  for (int i = 0; i < count; ++i) {
    values.push_back(i == count - 1 ? hi : lo + (hi - lo) * i / (count - 1));
  }
  return values;
}

}  // namespace

void DwaParams::validate() const {
  if (v_samples < 1) throw ValidationError("v_samples", "must be >= 1");
  if (w_samples < 1) throw ValidationError("w_samples", "must be >= 1");
  if (!(horizon > 0.0)) throw ValidationError("horizon", "must be positive");
  if (!(sim_step > 0.0)) throw ValidationError("sim_step", "must be positive");
  if (!(xy_tolerance > 0.0)) throw ValidationError("xy_tolerance", "must be positive");
  if (!(yaw_tolerance > 0.0)) throw ValidationError("yaw_tolerance", "must be positive");
  if (!(robot_radius >= 0.0)) throw ValidationError("robot_radius", "must be >= 0");
  if (!(clearance_cap > 0.0)) throw ValidationError("clearance_cap", "must be positive");
  if (!(rotate_lookahead > 0.0)) {
    throw ValidationError("rotate_lookahead", "must be positive");
  }
}

std::vector<ControlCommand> dwa_sample_window(const ControlCommand& current,
                                              const BaseLimits& limits,
                                              const DwaParams& params, double dt) {
  const double v_lo = std::max(params.v_min, current.v - limits.a_max * dt);
  const double v_hi = std::min(limits.v_max, current.v + limits.a_max * dt);
  const double w_lo = std::max(-limits.w_max, current.w - limits.alpha_max * dt);
  const double w_hi = std::min(limits.w_max, current.w + limits.alpha_max * dt);
  std::vector<ControlCommand> out;
  const auto vs = lattice(v_lo, std::max(v_lo, v_hi), params.v_samples);
  const auto ws = lattice(w_lo, std::max(w_lo, w_hi), params.w_samples);
  out.reserve(vs.size() * ws.size());
  for (double v : vs) {
    for (double w : ws) out.push_back({v, w});
  }
  return out;
}

double dwa_score(const Pose2D& state, const ControlCommand& cmd,
                 const Pose2D& goal, const OccupancyGrid* grid,
                 const BaseLimits& limits, const DwaParams& params) {
  double clearance = params.clearance_cap;
  if (grid) {
    const int steps = static_cast<int>(std::ceil(params.horizon / params.sim_step - 1e-9));
    double nearest = grid->clearance(state.x, state.y);
    for (int i = 1; i <= steps; ++i) {
      const double t = std::min(params.horizon, i * params.sim_step);
      const Pose2D p = integrate_unicycle(state, cmd, t);
      nearest = std::min(nearest, grid->clearance(p.x, p.y));
    }
    if (nearest < params.robot_radius) return kNegInf;
    clearance = std::min(nearest, params.clearance_cap);
  }
  const Pose2D end = integrate_unicycle(state, cmd, params.horizon);
  const double d_now = planar_distance(state, goal);
  const double d_end = planar_distance(end, goal);
  const double heading =
      d_end < params.xy_tolerance
          ? 1.0
          : 1.0 - std::abs(wrap_angle(std::atan2(goal.y - end.y, goal.x - end.x) -
                                      end.theta)) /
                      std::numbers::pi;
  const double distance = 1.0 - d_end / std::max(d_now, params.xy_tolerance);
  const double velocity = cmd.v / limits.v_max;
  const DwaWeights& w = params.weights;
  return w.heading * heading + w.distance * distance + w.velocity * velocity +
         w.clearance * clearance / params.clearance_cap;
}

bool dwa_better(const DwaCandidate& a, const DwaCandidate& b) {
  if (a.score != b.score) return a.score > b.score;
  if (std::abs(a.cmd.w) != std::abs(b.cmd.w)) {
    return std::abs(a.cmd.w) < std::abs(b.cmd.w);
  }
  return a.cmd.v < b.cmd.v;
}

DwaDecision dwa_step(const Pose2D& state, const ControlCommand& current,
                     const Pose2D& goal, const OccupancyGrid* grid,
                     DwaMode mode, const BaseLimits& limits,
                     const DwaParams& params, double dt) {
  if (mode == DwaMode::kTranslate &&
      planar_distance(state, goal) < params.xy_tolerance) {
    mode = DwaMode::kRotate;
  }
  const double yaw_error = wrap_angle(goal.theta - state.theta);
  if (mode == DwaMode::kRotate && std::abs(yaw_error) < params.yaw_tolerance) {
    mode = DwaMode::kDone;
  }
  if (mode == DwaMode::kDone) {
    return {rate_limit({0.0, 0.0}, current, limits, dt), false, mode};
  }
  const auto window = dwa_sample_window(current, limits, params, dt);

  if (mode == DwaMode::kRotate) {
    const double v = std::max(0.0, current.v - limits.a_max * dt);
    DwaCandidate best{{v, 0.0}, kNegInf};
    bool any = false;
    for (const auto& c : window) {
      const DwaCandidate cand{
          {v, c.w},
          -std::abs(wrap_angle(yaw_error - c.w * params.rotate_lookahead))};
      if (!any || dwa_better(cand, best)) best = cand;
      any = true;
    }
    return {best.cmd, false, mode};
  }

  DwaCandidate best{{0.0, 0.0}, kNegInf};
  bool any = false;
  for (const auto& c : window) {
    const DwaCandidate cand{c, dwa_score(state, c, goal, grid, limits, params)};
    if (cand.score == kNegInf) continue;
    if (!any || dwa_better(cand, best)) best = cand;
    any = true;
  }
  if (!any) return {rate_limit({0.0, 0.0}, current, limits, dt), true, mode};
  return {best.cmd, false, mode};
}

}  // namespace robokit

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
#include "robokit/base_controller.hpp"

#include <cmath>

#include "robokit/dwa.hpp"
#include "robokit/errors.hpp"
#include "robokit/lqr.hpp"
#include "robokit/proportional.hpp"

namespace robokit {

namespace {

bool within(const Pose2D& a, const Pose2D& b, double pos_tol, double yaw_tol) {
  return planar_distance(a, b) <= pos_tol && heading_error(a, b) <= yaw_tol;
}

class Session {
 public:
  Session(BaseInterface& base, const BaseConfig& cfg)
      : base_(base), cfg_(cfg), start_time_(base.time()) {}

  bool timed_out() const { return base_.time() - start_time_ >= cfg_.timeout - 1e-9; }

  void step(const ControlCommand& cmd) {
    result_.commands.push_back(base_.step(cmd));
  }

  /// Decelerates to rest within the acceleration limits.
  void stop() {
    while (base_.velocity() != ControlCommand{} && !timed_out()) step({0.0, 0.0});
  }

  MotionResult finish(bool reached, std::string message) {
    result_.reached = reached;
    result_.message = std::move(message);
    result_.elapsed = base_.time() - start_time_;
    result_.odom_pose = base_.odometry();
    result_.measured_pose = base_.measured_pose();
    return std::move(result_);
  }

 private:
  BaseInterface& base_;
  const BaseConfig& cfg_;
  double start_time_;
  MotionResult result_;
};

MotionResult go_to_lqr(BaseInterface& base, const Pose2D& target,
                       const BaseConfig& cfg, const LqrConfig& lqr) {
  Session session(base, cfg);
  const BaseLimits planning = cfg.limits.scaled(lqr.speed_fraction);
  for (int attempt = 0; attempt <= lqr.max_replans; ++attempt) {
    const Pose2D start = base.odometry();
    if (within(start, target, cfg.position_tolerance, cfg.heading_tolerance)) {
      session.stop();
      return session.finish(true, "");
    }
    if (session.timed_out()) break;
    Pose2D goal = target;
    if (planar_distance(start, target) <= cfg.position_tolerance) {
      goal.x = start.x;
      goal.y = start.y;
    }
    const TimedTrajectory traj =
        (lqr.trajectory == TrajectoryKind::kSmooth)
            ? generate_smooth_trajectory(start, goal, planning, cfg.dt)
            : generate_sharp_trajectory(start, goal, planning, cfg.dt);
    if (traj.horizon() == 0) continue;
    const GainSchedule gains = lqr_backward_pass(traj, lqr.weights);
    for (std::size_t t = 0; t < traj.horizon() && !session.timed_out(); ++t) {
      session.step(lqr_track_step(base.odometry(), t, traj, gains, cfg.limits));
    }
    session.stop();
  }
  const bool ok = within(base.odometry(), target, cfg.position_tolerance,
                         cfg.heading_tolerance);
  return session.finish(ok, ok ? "" : session.timed_out() ? "timeout"
                                                          : "replan limit reached");
}

MotionResult go_to_proportional(BaseInterface& base, const Pose2D& target,
                                const BaseConfig& cfg, const ProportionalGains& gains) {
  Session session(base, cfg);
  PropPhase phase = PropPhase::kAlign;
  while (!session.timed_out()) {
    const auto out = proportional_step(base.odometry(), target, phase, gains,
                                       cfg.limits, base.velocity(), cfg.dt);
    phase = out.next;
    if (phase == PropPhase::kDone && out.cmd == ControlCommand{} &&
        base.velocity() == ControlCommand{}) {
      if (within(base.odometry(), target, cfg.position_tolerance,
                 cfg.heading_tolerance)) {
        return session.finish(true, "");
      }
      phase = PropPhase::kAlign;
      continue;
    }
    session.step(out.cmd);
  }
  session.stop();
  return session.finish(false, "timeout");
}

MotionResult go_to_dwa(BaseInterface& base, const Pose2D& target,
                       const BaseConfig& cfg, const DwaParams& params,
                       const OccupancyGrid* grid) {
  Session session(base, cfg);
  DwaMode mode = DwaMode::kTranslate;
  while (!session.timed_out()) {
    const auto d = dwa_step(base.odometry(), base.velocity(), target, grid, mode,
                            cfg.limits, params, cfg.dt);
    mode = d.next;
    if (d.blocked) {
      session.stop();
      return session.finish(false, "blocked");
    }
    if (mode == DwaMode::kDone && base.velocity() == ControlCommand{}) {
      return session.finish(true, "");
    }
    session.step(d.cmd);
  }
  session.stop();
  return session.finish(false, "timeout");
}

}  // namespace

MotionResult run_go_to(BaseInterface& base, const Pose2D& target,
                       const std::string& controller, const BaseConfig& config,
                       const OccupancyGrid* grid) {
  const std::string name = canonical_controller_name(controller);
  const Pose2D goal = Pose2D::make(target.x, target.y, target.theta);
  if (name == "lqr" && config.controllers.lqr) {
    return go_to_lqr(base, goal, config, *config.controllers.lqr);
  }
  if (name == "proportional" && config.controllers.proportional) {
    return go_to_proportional(base, goal, config, *config.controllers.proportional);
  }
  if (name == "dwa" && config.controllers.dwa) {
    return go_to_dwa(base, goal, config, *config.controllers.dwa, grid);
  }
  throw ValidationError("controller", "'" + controller + "' is not configured");
}

TrackingLog run_tracking(BaseInterface& base, const TimedTrajectory& traj,
                         const std::string& controller, const BaseConfig& config) {
  const std::string name = canonical_controller_name(controller);
  if (name != "lqr" && name != "proportional") {
    throw ValidationError("controller", "tracking supports lqr and proportional");
  }
  if (!config.controllers.has(name)) {
    throw ValidationError("controller", "'" + controller + "' is not configured");
  }
  TrackingLog log;
  if (traj.horizon() > 0) {
    GainSchedule gains;
    if (name == "lqr") gains = lqr_backward_pass(traj, config.controllers.lqr->weights);
    log.entries.reserve(traj.horizon());
    for (std::size_t t = 0; t < traj.horizon(); ++t) {
      TrackingEntry e;
      e.t = static_cast<double>(t) * traj.dt;
      e.reference = traj.states[t];
      e.odom = base.odometry();
      e.measured = base.measured_pose();
      const ControlCommand cmd =
          name == "lqr"
              ? lqr_track_step(e.odom, t, traj, gains, config.limits)
              : proportional_track_step(e.odom, traj.states[t], traj.controls[t],
                                        *config.controllers.proportional, config.limits);
      e.command = base.step(cmd);
      log.entries.push_back(e);
    }
  }
  log.final_odom = base.odometry();
  log.final_measured = base.measured_pose();
  return log;
}

}  // namespace robokit

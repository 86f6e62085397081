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
#include "robokit/trajectory.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

#include <Eigen/Core>

#include "robokit/errors.hpp"

namespace robokit {

namespace {

constexpr double kSameSpot = 1e-9;

// Rolls the states forward from the first one and pins the final state to
// `goal` (the integration already lands there to rounding).
void integrate_states(TimedTrajectory& traj, const Pose2D& start,
                      const Pose2D& goal) {
  traj.states.clear();
  traj.states.reserve(traj.controls.size() + 1);
  traj.states.push_back(start);
  for (const auto& u : traj.controls) {
    traj.states.push_back(integrate_unicycle(traj.states.back(), u, traj.dt));
  }
  if (!traj.controls.empty()) traj.states.back() = goal;
}

double position_at(double t, double distance, double vp, double a, double ta,
                   double tc, double total) {
  if (t <= 0.0) return 0.0;
  if (t >= total) return distance;
  if (t < ta) return 0.5 * a * t * t;
  const double da = 0.5 * a * ta * ta;
  if (t < ta + tc) return da + vp * (t - ta);
  const double rem = total - t;
  return distance - 0.5 * a * rem * rem;
}

}  // namespace

double max_consistency_error(const TimedTrajectory& traj) {
  double worst = 0.0;
  for (std::size_t k = 0; k < traj.controls.size(); ++k) {
    const Pose2D next =
        integrate_unicycle(traj.states[k], traj.controls[k], traj.dt);
    const Pose2D& stored = traj.states[k + 1];
    worst = std::max(worst, planar_distance(next, stored));
    worst = std::max(worst, heading_error(next, stored));
  }
  return worst;
}

std::vector<double> trapezoid_profile(double distance, double max_speed,
                                      double max_accel, double dt) {
  std::vector<double> speeds;
  if (!(distance > 0.0)) return speeds;
  const double vp = std::min(max_speed, std::sqrt(distance * max_accel));
  const double ta = vp / max_accel;
  const double tc = std::max(0.0, (distance - vp * ta) / vp);
  const double total = 2.0 * ta + tc;
  const auto steps =
      static_cast<std::size_t>(std::max(1.0, std::ceil(total / dt - 1e-9)));
  speeds.reserve(steps);
  double prev = 0.0;
  for (std::size_t k = 0; k < steps; ++k) {
    const double t1 = static_cast<double>(k + 1) * dt;
    const double s1 = (k + 1 == steps)
                          ? distance
                          : position_at(t1, distance, vp, max_accel, ta, tc, total);
    speeds.push_back((s1 - prev) / dt);
    prev = s1;
  }
  return speeds;
}

TimedTrajectory generate_sharp_trajectory(const Pose2D& start, const Pose2D& goal,
                                          const BaseLimits& limits, double dt) {
  if (!(dt > 0.0)) throw ValidationError("dt", "must be positive");
  TimedTrajectory traj;
  traj.dt = dt;
  const double dist = planar_distance(start, goal);
  double first_turn = 0.0;
  double final_turn = wrap_angle(goal.theta - start.theta);
  if (dist > kSameSpot) {
    const double bearing = std::atan2(goal.y - start.y, goal.x - start.x);
    first_turn = wrap_angle(bearing - start.theta);
    final_turn = wrap_angle(goal.theta - bearing);
  }
  auto rotate = [&](double angle) {
    const double sign = angle < 0.0 ? -1.0 : 1.0;
    for (double w : trapezoid_profile(std::abs(angle), limits.w_max,
                                      limits.alpha_max, dt)) {
      traj.controls.push_back({0.0, sign * w});
    }
  };
  rotate(first_turn);
  if (dist > kSameSpot) {
    for (double v : trapezoid_profile(dist, limits.v_max, limits.a_max, dt)) {
      traj.controls.push_back({v, 0.0});
    }
  }
  rotate(final_turn);
  integrate_states(traj, start, goal);
  return traj;
}

namespace {

struct Bezier {
  std::array<Eigen::Vector2d, 4> p;

  Eigen::Vector2d point(double u) const {
    const double a = 1.0 - u;
    return a * a * a * p[0] + 3.0 * a * a * u * p[1] + 3.0 * a * u * u * p[2] +
           u * u * u * p[3];
  }
  Eigen::Vector2d d1(double u) const {
    const double a = 1.0 - u;
    return 3.0 * a * a * (p[1] - p[0]) + 6.0 * a * u * (p[2] - p[1]) +
           3.0 * u * u * (p[3] - p[2]);
  }
  Eigen::Vector2d d2(double u) const {
    return 6.0 * (1.0 - u) * (p[2] - 2.0 * p[1] + p[0]) +
           6.0 * u * (p[3] - 2.0 * p[2] + p[1]);
  }
  double curvature(double u) const {
    const Eigen::Vector2d a = d1(u);
    const Eigen::Vector2d b = d2(u);
    const double n = a.norm();
    if (n < 1e-12) return 0.0;
    return (a.x() * b.y() - a.y() * b.x()) / (n * n * n);
  }
};

bool respects_limits(const TimedTrajectory& traj, const BaseLimits& l) {
  constexpr double kSlack = 1.0 + 1e-9;
  ControlCommand prev{};
  for (const auto& u : traj.controls) {
    if (std::abs(u.v) > l.v_max * kSlack || std::abs(u.w) > l.w_max * kSlack)
      return false;
    if (std::abs(u.v - prev.v) > l.a_max * traj.dt * kSlack ||
        std::abs(u.w - prev.w) > l.alpha_max * traj.dt * kSlack)
      return false;
    prev = u;
  }
  return std::abs(prev.v) <= l.a_max * traj.dt * kSlack &&
         std::abs(prev.w) <= l.alpha_max * traj.dt * kSlack;
}

TimedTrajectory bezier_attempt(const Bezier& curve, const Pose2D& start,
                               const Pose2D& goal, const BaseLimits& lim,
                               double dt) {
  constexpr int kSamples = 4000;
  std::vector<double> u(kSamples + 1), s(kSamples + 1), vmax(kSamples + 1);
  Eigen::Vector2d prev = curve.point(0.0);
  for (int i = 0; i <= kSamples; ++i) {
    u[i] = static_cast<double>(i) / kSamples;
    const Eigen::Vector2d pt = curve.point(u[i]);
    s[i] = i == 0 ? 0.0 : s[i - 1] + (pt - prev).norm();
    prev = pt;
    const double k = std::abs(curve.curvature(u[i]));
    vmax[i] = k > 1e-12 ? std::min(lim.v_max, lim.w_max / k) : lim.v_max;
  }
  std::vector<double> v(vmax);
  v.front() = 0.0;
  v.back() = 0.0;
  for (int i = 1; i <= kSamples; ++i) {
    v[i] = std::min(v[i], std::sqrt(v[i - 1] * v[i - 1] +
                                    2.0 * lim.a_max * (s[i] - s[i - 1])));
  }
  for (int i = kSamples - 1; i >= 0; --i) {
    v[i] = std::min(v[i], std::sqrt(v[i + 1] * v[i + 1] +
                                    2.0 * lim.a_max * (s[i + 1] - s[i])));
  }
  std::vector<double> t(kSamples + 1, 0.0);
  for (int i = 1; i <= kSamples; ++i) {
    const double vs = v[i - 1] + v[i];
    t[i] = t[i - 1] + (vs > 0.0 ? 2.0 * (s[i] - s[i - 1]) / vs : 0.0);
  }
  const double total = t.back();
  const auto steps =
      static_cast<std::size_t>(std::max(1.0, std::ceil(total / dt - 1e-9)));

  std::vector<Eigen::Vector2d> targets;
  targets.reserve(steps);
  int seg = 0;
  for (std::size_t k = 1; k < steps; ++k) {
    const double tau = static_cast<double>(k) * dt;
    while (seg < kSamples - 1 && t[seg + 1] <= tau) ++seg;
    const double ds = s[seg + 1] - s[seg];
    const double acc =
        ds > 0.0 ? (v[seg + 1] * v[seg + 1] - v[seg] * v[seg]) / (2.0 * ds) : 0.0;
    const double h = tau - t[seg];
    const double sk = std::min(s[seg + 1], s[seg] + v[seg] * h + 0.5 * acc * h * h);
    const double frac = ds > 0.0 ? (sk - s[seg]) / ds : 0.0;
    targets.push_back(curve.point(u[seg] + frac * (u[seg + 1] - u[seg])));
  }
  targets.emplace_back(goal.x, goal.y);

  TimedTrajectory traj;
  traj.dt = dt;
  Pose2D state = start;
  for (const auto& target : targets) {
    const double cx = target.x() - state.x;
    const double cy = target.y() - state.y;
    const double chord = std::hypot(cx, cy);
    ControlCommand cmd{};
    if (chord > 1e-15) {
      const double half = wrap_angle(std::atan2(cy, cx) - state.theta);
      cmd.w = 2.0 * half / dt;
      cmd.v = chord / (dt * sinc(half));
    }
    traj.controls.push_back(cmd);
    state = integrate_unicycle(state, cmd, dt);
  }
  const double heading_fix = wrap_angle(goal.theta - state.theta);
  if (std::abs(heading_fix) > 1e-12) {
    traj.controls.push_back({0.0, heading_fix / dt});
  }
  integrate_states(traj, start, goal);
  return traj;
}

}  // namespace

TimedTrajectory generate_smooth_trajectory(const Pose2D& start,
                                           const Pose2D& goal,
                                           const BaseLimits& limits, double dt) {
  if (!(dt > 0.0)) throw ValidationError("dt", "must be positive");
  const double d = planar_distance(start, goal);
  if (d <= kSameSpot) return generate_sharp_trajectory(start, goal, limits, dt);
  Bezier curve;
  curve.p[0] = {start.x, start.y};
  curve.p[3] = {goal.x, goal.y};
  curve.p[1] = curve.p[0] + d / 3.0 * Eigen::Vector2d(std::cos(start.theta),
                                                      std::sin(start.theta));
  curve.p[2] = curve.p[3] - d / 3.0 * Eigen::Vector2d(std::cos(goal.theta),
                                                      std::sin(goal.theta));
  // The chord-aiming reconstruction adds small command ripple on top of the
  // profile; back the profile off until the sampled commands fit.
  BaseLimits trial = limits;
  TimedTrajectory traj;
  for (int attempt = 0; attempt < 40; ++attempt) {
    traj = bezier_attempt(curve, start, goal, trial, dt);
    if (respects_limits(traj, limits)) break;
    trial = trial.scaled(0.9);
  }
  return traj;
}

TimedTrajectory generate_circle_trajectory(const Pose2D& start, double radius,
                                           double speed, const BaseLimits& limits,
                                           double dt, int laps) {
  if (!(dt > 0.0)) throw ValidationError("dt", "must be positive");
  if (!(radius > 0.0)) throw ValidationError("radius", "must be positive");
  TimedTrajectory traj;
  traj.dt = dt;
  traj.states.push_back(start);
  if (!(speed > 0.0) || laps <= 0) return traj;
  const double v = std::min({speed, limits.v_max, limits.w_max * radius});
  const double a = std::min(limits.a_max, limits.alpha_max * radius);
  const double length = 2.0 * std::numbers::pi * radius * laps;
  for (double vk : trapezoid_profile(length, v, a, dt)) {
    traj.controls.push_back({vk, vk / radius});
  }
  integrate_states(traj, start, start);
  return traj;
}

double cross_track_distance(const TimedTrajectory& reference, double x, double y) {
  const auto& st = reference.states;
  if (st.empty()) return 0.0;
  double best = std::hypot(x - st.front().x, y - st.front().y);
  for (std::size_t i = 1; i < st.size(); ++i) {
    const double ax = st[i - 1].x, ay = st[i - 1].y;
    const double bx = st[i].x - ax, by = st[i].y - ay;
    const double len2 = bx * bx + by * by;
    double t = 0.0;
    if (len2 > 0.0) t = std::clamp(((x - ax) * bx + (y - ay) * by) / len2, 0.0, 1.0);
    best = std::min(best, std::hypot(x - (ax + t * bx), y - (ay + t * by)));
  }
  return best;
}

TimedTrajectory load_trajectory_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError(path, "cannot open trajectory file");
  std::string line;
  std::vector<std::array<double, 6>> rows;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#' || line.rfind("t,", 0) == 0) continue;
    std::array<double, 6> r{};
    std::stringstream ss(line);
    std::string cell;
    for (auto& value : r) {
      if (!std::getline(ss, cell, ',')) {
        throw ConfigParseError(path, "expected 6 columns: " + line);
      }
      value = std::stod(cell);
    }
    rows.push_back(r);
  }
  TimedTrajectory traj;
  if (rows.empty()) return traj;
  traj.dt = rows.size() > 1 ? rows[1][0] - rows[0][0] : 0.05;
  if (!(traj.dt > 0.0)) throw ValidationError(path, "timestamps must increase");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    if (i > 0 && std::abs((r[0] - rows[i - 1][0]) - traj.dt) > 1e-9) {
      throw ValidationError(path, "non-uniform time step at row " + std::to_string(i));
    }
    traj.states.push_back(Pose2D::make(r[1], r[2], r[3]));
    if (i + 1 < rows.size()) traj.controls.push_back({r[4], r[5]});
  }
  return traj;
}

void save_trajectory_csv(const TimedTrajectory& traj, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << "t,x,y,theta,v,w\n" << std::setprecision(17);
  for (std::size_t i = 0; i < traj.states.size(); ++i) {
    const auto& s = traj.states[i];
    const ControlCommand u = i < traj.controls.size() ? traj.controls[i] : ControlCommand{};
    out << traj.dt * static_cast<double>(i) << ',' << s.x << ',' << s.y << ','
        << s.theta << ',' << u.v << ',' << u.w << '\n';
  }
}

}  // namespace robokit

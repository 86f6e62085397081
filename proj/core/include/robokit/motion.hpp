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
#pragma once

#include <algorithm>
#include <cmath>

#include "robokit/pose2d.hpp"

namespace robokit {

/// Base twist command: forward speed (m/s) and yaw rate (rad/s).
struct ControlCommand {
  double v = 0.0;
  double w = 0.0;

  friend bool operator==(const ControlCommand&, const ControlCommand&) = default;
};

struct BaseLimits {
  double v_max = 0.3;      // m/s
  double w_max = 1.0;      // rad/s
  double a_max = 0.5;      // m/s^2
  double alpha_max = 2.0;  // rad/s^2

  BaseLimits scaled(double fraction) const {
    return {v_max * fraction, w_max * fraction, a_max * fraction,
            alpha_max * fraction};
  }
};

inline ControlCommand clamp_velocity(const ControlCommand& c,
                                     const BaseLimits& l) {
  return {std::clamp(c.v, -l.v_max, l.v_max), std::clamp(c.w, -l.w_max, l.w_max)};
}

/// Bounds the change from `prev` to a_max*dt and alpha_max*dt.
inline ControlCommand rate_limit(const ControlCommand& c,
                                 const ControlCommand& prev,
                                 const BaseLimits& l, double dt) {
  const double dv = l.a_max * dt;
  const double dw = l.alpha_max * dt;
  return {std::clamp(c.v, prev.v - dv, prev.v + dv),
          std::clamp(c.w, prev.w - dw, prev.w + dw)};
}

inline ControlCommand limit_command(const ControlCommand& c,
                                    const ControlCommand& prev,
                                    const BaseLimits& l, double dt) {
  return clamp_velocity(rate_limit(clamp_velocity(c, l), prev, l, dt), l);
}

/// sin(x)/x, accurate near zero.
inline double sinc(double x) {
  if (std::abs(x) < 1e-4) return 1.0 - x * x / 6.0;
  return std::sin(x) / x;
}

/// Exact unicycle integration of a constant twist over dt (a circular arc,
/// or a segment when w == 0).
inline Pose2D integrate_unicycle(const Pose2D& p, const ControlCommand& u,
                                 double dt) {
  const double half = 0.5 * u.w * dt;
  const double chord = u.v * dt * sinc(half);
  const double mid = p.theta + half;
  return Pose2D::make(p.x + chord * std::cos(mid), p.y + chord * std::sin(mid),
                      p.theta + u.w * dt);
}

}  // namespace robokit

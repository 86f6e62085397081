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

#include <cmath>
#include <numbers>

namespace robokit {

/// Wraps an angle into (-pi, pi].
inline double wrap_angle(double a) {
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  double r = std::fmod(a, kTwoPi);
  if (r <= -std::numbers::pi) r += kTwoPi;
  if (r > std::numbers::pi) r -= kTwoPi;
  return r;
}

/// Planar base pose. The heading is kept in (-pi, pi] by every operation
/// below; construct through make() when the input heading may be unwrapped.
struct Pose2D {
  double x = 0.0;
  double y = 0.0;
  double theta = 0.0;

  static Pose2D make(double x, double y, double theta) {
    return {x, y, wrap_angle(theta)};
  }

  friend bool operator==(const Pose2D&, const Pose2D&) = default;
};

/// SE(2) composition: `delta` expressed in the frame of `base`.
inline Pose2D compose(const Pose2D& base, const Pose2D& delta) {
  const double c = std::cos(base.theta);
  const double s = std::sin(base.theta);
  return Pose2D::make(base.x + c * delta.x - s * delta.y,
                      base.y + s * delta.x + c * delta.y,
                      base.theta + delta.theta);
}

/// Inverse of compose: the pose of `target` seen from `base`.
inline Pose2D relative(const Pose2D& base, const Pose2D& target) {
  const double c = std::cos(base.theta);
  const double s = std::sin(base.theta);
  const double dx = target.x - base.x;
  const double dy = target.y - base.y;
  return Pose2D::make(c * dx + s * dy, -s * dx + c * dy,
                      target.theta - base.theta);
}

inline double planar_distance(const Pose2D& a, const Pose2D& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

/// Wrapped absolute heading difference, in [0, pi].
inline double heading_error(const Pose2D& a, const Pose2D& b) {
  return std::abs(wrap_angle(a.theta - b.theta));
}

inline double deg2rad(double d) { return d * std::numbers::pi / 180.0; }
inline double rad2deg(double r) { return r * 180.0 / std::numbers::pi; }

}  // namespace robokit

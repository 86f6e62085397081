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

#include <cstdint>
#include <string>
#include <vector>

#include "robokit/base_controller.hpp"
#include "robokit/bench/base_bench.hpp"
#include "robokit/config.hpp"
#include "robokit/trajectory.hpp"

namespace robokit::bench {

struct TrackingReport {
  std::string robot;
  std::string controller;
  std::string shape;  // "circle" or "file"
  double radius = 0.0;
  std::uint64_t seed = 0;
  TimedTrajectory reference;
  TrackingLog log;
  std::vector<double> cross_track_mm;  // per logged step, then the final pose
  double rms_mm = 0.0;
  double max_mm = 0.0;
};

/// Counter-clockwise circle starting at the origin heading +x, driven at
/// the configured tracking speed with acceleration-limited ramps.
TimedTrajectory circle_reference(const RobotConfig& config, double radius);

/// Tracks `reference` on a fresh backend and measures the distance from the
/// externally measured position to the reference path.
TrackingReport run_tracking_benchmark(const RobotConfig& config,
                                      const BackendFactory& factory,
                                      const TimedTrajectory& reference,
                                      const std::string& controller, std::uint64_t seed,
                                      const std::string& shape = "file",
                                      double radius = 0.0);

}  // namespace robokit::bench

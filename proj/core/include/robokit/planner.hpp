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
#include <vector>

#include <Eigen/Core>

#include "robokit/occupancy_grid.hpp"
#include "robokit/pose2d.hpp"

namespace robokit {

struct GridSearchResult {
  bool found = false;
  std::vector<int> cells;  // flat indices, start first
  double cost = 0.0;       // in cells (1 per side step, sqrt(2) per diagonal)
};

/// A* over an 8-connected grid. Diagonal moves require both adjacent side
/// cells to be free. The open list pops the lowest (f, h, index) first.
GridSearchResult astar_search(const std::vector<std::uint8_t>& blocked,
                              int width, int height, int start, int goal);

/// Occupied and unknown cells, plus every cell whose center lies closer than
/// `inflation` metres to an occupied cell center.
std::vector<std::uint8_t> inflate_obstacles(const OccupancyGrid& grid,
                                            double inflation);

/// True when the segment between the two cell centers only touches
/// unblocked cells (corner touches count as touching both neighbours).
bool line_of_sight(const std::vector<std::uint8_t>& blocked, int width,
                   CellIndex a, CellIndex b);

struct PlanResult {
  bool found = false;
  std::vector<Eigen::Vector2d> waypoints;  // world frame, start and goal included
  std::vector<CellIndex> raw_cells;        // A* path before shortcutting
  double raw_cost = 0.0;                   // m
  double length = 0.0;                     // m, of the shortcut path
};

/// A* on the inflated grid followed by greedy line-of-sight shortcutting.
/// `found` is false (NoPath) when start or goal is blocked or they are
/// disconnected. Throws ValidationError for points outside the grid.
PlanResult plan_global(const OccupancyGrid& grid, const Pose2D& start,
                       const Pose2D& goal, double inflation);

}  // namespace robokit

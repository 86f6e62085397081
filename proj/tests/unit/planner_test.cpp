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
#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "robokit/errors.hpp"
#include "robokit/occupancy_grid.hpp"
#include "robokit/planner.hpp"

namespace robokit {
namespace {

std::string map_path(const char* name) {
  return std::string(ROBOKIT_SOURCE_DIR) + "/maps/" + name;
}

OccupancyGrid random_grid(std::mt19937_64& rng, int w, int h, double density) {
  std::bernoulli_distribution occ(density);
  std::vector<Cell> cells(static_cast<std::size_t>(w * h));
  for (auto& c : cells) c = occ(rng) ? Cell::kOccupied : Cell::kFree;
  return OccupancyGrid(w, h, 0.05, Pose2D{}, cells);
}

TEST(OccupancyGrid, TextFormatRoundTrips) {
  std::mt19937_64 rng(2);
  std::vector<Cell> cells(7 * 5);
  std::uniform_int_distribution<int> pick(0, 2);
  for (auto& c : cells) c = static_cast<Cell>(pick(rng));
  const OccupancyGrid g(7, 5, 0.1, Pose2D{-0.35, 1.25, 0.0}, cells);
  EXPECT_EQ(parse_grid(format_grid(g)), g);
  EXPECT_EQ(parse_grid(format_grid(load_grid(map_path("walls.grid")))),
            load_grid(map_path("walls.grid")));
}

TEST(OccupancyGrid, ParseRejectsMalformedText) {
  EXPECT_THROW(parse_grid("width 2\nheight 1\nresolution 0.1\norigin 0 0 0\n.x\n"),
               ConfigParseError);
  EXPECT_THROW(parse_grid("width 2\nheight 2\nresolution 0.1\norigin 0 0 0\n..\n"),
               ConfigParseError);
  EXPECT_THROW(parse_grid("width 2\nheight 1\nresolution -1\norigin 0 0 0\n..\n"),
               ValidationError);
}

TEST(OccupancyGrid, ClearanceMatchesBruteForce) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    const OccupancyGrid g = random_grid(rng, 23, 17, 0.05);
    for (int iy = 0; iy < g.height(); ++iy) {
      for (int ix = 0; ix < g.width(); ++ix) {
        double best = std::numeric_limits<double>::infinity();
        for (int jy = 0; jy < g.height(); ++jy)
          for (int jx = 0; jx < g.width(); ++jx)
            if (g.at(jx, jy) != Cell::kFree)
              best = std::min(best, g.resolution() * std::hypot(jx - ix, jy - iy));
        EXPECT_NEAR(g.clearance(ix, iy), best, 1e-12);
      }
    }
  }
}

TEST(OccupancyGrid, WorldToCellAndBounds) {
  const OccupancyGrid g(10, 10, 0.1, Pose2D{-0.5, -0.5, 0.0});
  const auto c = g.world_to_cell(0.01, -0.01);
  ASSERT_TRUE(c);
  EXPECT_EQ(*c, (CellIndex{5, 4}));
  EXPECT_FALSE(g.world_to_cell(0.6, 0.0));
  EXPECT_EQ(g.clearance(5.0, 5.0), 0.0);
  EXPECT_TRUE(std::isinf(g.clearance(0.0, 0.0)));
}

TEST(AStar, CostEqualsDijkstraOnRandomGrids) {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> cell(0, 50 * 50 - 1);
  int reachable = 0;
  for (int trial = 0; trial < 30; ++trial) {
    const OccupancyGrid g = random_grid(rng, 50, 50, 0.25);
    std::vector<std::uint8_t> blocked(g.cells().size());
    for (std::size_t i = 0; i < blocked.size(); ++i) blocked[i] = g.cells()[i] != Cell::kFree;
    const int s = cell(rng), t = cell(rng);
    blocked[s] = blocked[t] = 0;
    const GridSearchResult r = astar_search(blocked, 50, 50, s, t);
    const double want = testing::dijkstra_cost(blocked, 50, 50, s, t);
    ASSERT_EQ(r.found, want >= 0.0) << "trial " << trial;
    if (!r.found) continue;
    ++reachable;
    EXPECT_NEAR(r.cost, want, 1e-9);
    EXPECT_EQ(r.cells.front(), s);
    EXPECT_EQ(r.cells.back(), t);
  }
  EXPECT_GT(reachable, 10);
}

TEST(AStar, NeverCutsCorners) {
  // Two diagonal occupied cells with a free diagonal between them.
  std::vector<std::uint8_t> blocked = {0, 1,
                                       1, 0};
  EXPECT_FALSE(astar_search(blocked, 2, 2, 0, 3).found);
}

TEST(LineOfSight, BlockedByOccupiedCellOnSegment) {
  std::vector<std::uint8_t> blocked(10 * 10, 0);
  EXPECT_TRUE(line_of_sight(blocked, 10, {0, 0}, {9, 7}));
  blocked[5 * 10 + 5] = 1;
  EXPECT_FALSE(line_of_sight(blocked, 10, {0, 5}, {9, 5}));
  EXPECT_FALSE(line_of_sight(blocked, 10, {4, 4}, {6, 6}));
}

TEST(PlanGlobal, WaypointsAreCollisionFreeAndNoLongerThanAStar) {
  const OccupancyGrid g = load_grid(map_path("walls.grid"));
  const double inflation = 0.18;
  const PlanResult p = plan_global(g, {0.5, 1.0, 0.0}, {1.6, 1.2, 0.0}, inflation);
  ASSERT_TRUE(p.found);
  EXPECT_NEAR(p.waypoints.front().x(), 0.5, 1e-15);
  EXPECT_NEAR(p.waypoints.back().y(), 1.2, 1e-15);
  std::vector<Eigen::Vector2d> raw = {p.waypoints.front()};
  for (std::size_t i = 1; i + 1 < p.raw_cells.size(); ++i) {
    raw.push_back(g.cell_center(p.raw_cells[i].ix, p.raw_cells[i].iy));
  }
  raw.push_back(p.waypoints.back());
  double raw_length = 0.0;
  for (std::size_t i = 0; i + 1 < raw.size(); ++i) raw_length += (raw[i + 1] - raw[i]).norm();
  EXPECT_LE(p.length, raw_length + 1e-9);
  const auto blocked = inflate_obstacles(g, inflation);
  for (std::size_t i = 0; i + 1 < p.waypoints.size(); ++i) {
    const Eigen::Vector2d a = p.waypoints[i], b = p.waypoints[i + 1];
    for (int k = 0; k <= 200; ++k) {
      const Eigen::Vector2d q = a + (b - a) * (k / 200.0);
      const auto c = g.world_to_cell(q.x(), q.y());
      ASSERT_TRUE(c);
      EXPECT_FALSE(blocked[g.index(c->ix, c->iy)]) << "segment " << i;
    }
  }
}

TEST(PlanGlobal, DisconnectedGoalHasNoPath) {
  const OccupancyGrid g = load_grid(map_path("walls.grid"));
  EXPECT_FALSE(plan_global(g, {0.5, 1.0, 0.0}, {2.4, 1.0, 0.0}, 0.18).found);
  EXPECT_THROW(plan_global(g, {-5.0, 1.0, 0.0}, {1.0, 1.0, 0.0}, 0.18), ValidationError);
}

}  // namespace
}  // namespace robokit

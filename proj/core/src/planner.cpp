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
#include "robokit/planner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <tuple>

#include "robokit/errors.hpp"

namespace robokit {

namespace {

double octile(int dx, int dy) {
  dx = std::abs(dx);
  dy = std::abs(dy);
  return std::numbers::sqrt2 * std::min(dx, dy) + std::abs(dx - dy);
}

}  // namespace

GridSearchResult astar_search(const std::vector<std::uint8_t>& blocked,
                              int width, int height, int start, int goal) {
  const int n = width * height;
  if (static_cast<int>(blocked.size()) != n) {
    throw ValidationError("blocked", "mask size does not match the grid");
  }
  GridSearchResult result;
  if (start < 0 || goal < 0 || start >= n || goal >= n || blocked[start] ||
      blocked[goal]) {
    return result;
  }
  const int gx = goal % width;
  const int gy = goal / width;
  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> g(n, kInf);
  std::vector<int> parent(n, -1);
  std::vector<std::uint8_t> closed(n, 0);
  using Entry = std::tuple<double, double, int>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> open;
  auto h = [&](int idx) { return octile(idx % width - gx, idx / width - gy); };
  g[start] = 0.0;
  open.emplace(h(start), h(start), start);
  while (!open.empty()) {
    const auto [f, hc, cur] = open.top();
    open.pop();
    if (closed[cur]) continue;
    closed[cur] = 1;
    if (cur == goal) break;
    const int cx = cur % width;
    const int cy = cur / width;
    for (int dy = -1; dy <= 1; ++dy) {
      for (int dx = -1; dx <= 1; ++dx) {
        if (dx == 0 && dy == 0) continue;
        const int nx = cx + dx;
        const int ny = cy + dy;
        if (nx < 0 || ny < 0 || nx >= width || ny >= height) continue;
        const int nb = ny * width + nx;
        if (blocked[nb] || closed[nb]) continue;
        if (dx != 0 && dy != 0 &&
            (blocked[cy * width + nx] || blocked[ny * width + cx])) {
          continue;
        }
        const double step = (dx != 0 && dy != 0) ? std::numbers::sqrt2 : 1.0;
        const double cand = g[cur] + step;
        if (cand < g[nb]) {
          g[nb] = cand;
          parent[nb] = cur;
          const double hn = h(nb);
          open.emplace(cand + hn, hn, nb);
        }
      }
    }
  }
  if (!closed[goal]) return result;
  result.found = true;
  result.cost = g[goal];
  for (int c = goal; c != -1; c = parent[c]) result.cells.push_back(c);
  std::reverse(result.cells.begin(), result.cells.end());
  return result;
}

std::vector<std::uint8_t> inflate_obstacles(const OccupancyGrid& grid,
                                            double inflation) {
  if (!(inflation >= 0.0)) throw ValidationError("inflation", "must be >= 0");
  std::vector<std::uint8_t> blocked(grid.cells().size(), 0);
  for (int iy = 0; iy < grid.height(); ++iy) {
    for (int ix = 0; ix < grid.width(); ++ix) {
      const int i = grid.index(ix, iy);
      blocked[i] = grid.cells()[i] != Cell::kFree || grid.clearance(ix, iy) < inflation;
    }
  }
  return blocked;
}

bool line_of_sight(const std::vector<std::uint8_t>& blocked, int width,
                   CellIndex a, CellIndex b) {
  // Supercover traversal between cell centers.
  int x = a.ix;
  int y = a.iy;
  const int dx = std::abs(b.ix - a.ix);
  const int dy = std::abs(b.iy - a.iy);
  const int sx = b.ix > a.ix ? 1 : -1;
  const int sy = b.iy > a.iy ? 1 : -1;
  auto free = [&](int cx, int cy) { return !blocked[cy * width + cx]; };
  if (!free(x, y)) return false;
  int error = dx - dy;
  for (int i = 0; i < dx + dy; ++i) {
    if (error > 0) {
      x += sx;
      error -= 2 * dy;
    } else if (error < 0) {
      y += sy;
      error += 2 * dx;
    } else {
      // Exact corner crossing: both side cells are touched.
      if (!free(x + sx, y) || !free(x, y + sy)) return false;
      x += sx;
      y += sy;
      error += 2 * (dx - dy);
      ++i;
    }
    if (!free(x, y)) return false;
  }
  return true;
}

PlanResult plan_global(const OccupancyGrid& grid, const Pose2D& start,
                       const Pose2D& goal, double inflation) {
  const auto sc = grid.world_to_cell(start.x, start.y);
  if (!sc) throw ValidationError("start", "outside the grid");
  const auto gc = grid.world_to_cell(goal.x, goal.y);
  if (!gc) throw ValidationError("goal", "outside the grid");
  const auto blocked = inflate_obstacles(grid, inflation);
  const int w = grid.width();
  const auto search = astar_search(blocked, w, grid.height(), grid.index(sc->ix, sc->iy),
                                   grid.index(gc->ix, gc->iy));
  PlanResult plan;
  if (!search.found) return plan;
  plan.found = true;
  plan.raw_cost = search.cost * grid.resolution();
  for (int c : search.cells) plan.raw_cells.push_back({c % w, c / w});

  std::vector<CellIndex> kept{plan.raw_cells.front()};
  std::size_t anchor = 0;
  while (anchor + 1 < plan.raw_cells.size()) {
    std::size_t next = anchor + 1;
    for (std::size_t j = plan.raw_cells.size() - 1; j > anchor + 1; --j) {
      if (line_of_sight(blocked, w, plan.raw_cells[anchor], plan.raw_cells[j])) {
        next = j;
        break;
      }
    }
    kept.push_back(plan.raw_cells[next]);
    anchor = next;
  }
  plan.waypoints.emplace_back(start.x, start.y);
  for (std::size_t i = 1; i + 1 < kept.size(); ++i) {
    plan.waypoints.push_back(grid.cell_center(kept[i].ix, kept[i].iy));
  }
  plan.waypoints.emplace_back(goal.x, goal.y);
  for (std::size_t i = 1; i < plan.waypoints.size(); ++i) {
    plan.length += (plan.waypoints[i] - plan.waypoints[i - 1]).norm();
  }
  return plan;
}

}  // namespace robokit

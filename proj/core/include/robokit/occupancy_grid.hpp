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
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "robokit/pose2d.hpp"

namespace robokit {

enum class Cell : std::uint8_t { kFree, kOccupied, kUnknown };

struct CellIndex {
  int ix = 0;
  int iy = 0;
  friend bool operator==(const CellIndex&, const CellIndex&) = default;
};

/// Immutable planar occupancy map. Cell (ix, iy) covers
/// [ix, ix+1) x [iy, iy+1) * resolution in the grid frame, whose pose in the
/// world is `origin`. A Euclidean distance field to the nearest occupied
/// cell is built on construction.
class OccupancyGrid {
 public:
  OccupancyGrid(int width, int height, double resolution, Pose2D origin,
                std::vector<Cell> cells);
  /// All-free grid.
  OccupancyGrid(int width, int height, double resolution, Pose2D origin = {});

  int width() const { return width_; }
  int height() const { return height_; }
  double resolution() const { return resolution_; }
  const Pose2D& origin() const { return origin_; }
  const std::vector<Cell>& cells() const { return cells_; }

  int index(int ix, int iy) const { return iy * width_ + ix; }
  bool in_bounds(int ix, int iy) const {
    return ix >= 0 && iy >= 0 && ix < width_ && iy < height_;
  }
  Cell at(int ix, int iy) const { return cells_[index(ix, iy)]; }

  std::optional<CellIndex> world_to_cell(double x, double y) const;
  Eigen::Vector2d cell_center(int ix, int iy) const;

  /// Distance (m) from the cell containing (x, y) to the nearest occupied
  /// cell center; 0 outside the grid, +inf when nothing is occupied.
  double clearance(double x, double y) const;
  /// Same, by cell.
  double clearance(int ix, int iy) const;

  friend bool operator==(const OccupancyGrid& a, const OccupancyGrid& b) {
    return a.width_ == b.width_ && a.height_ == b.height_ &&
           a.resolution_ == b.resolution_ && a.origin_ == b.origin_ &&
           a.cells_ == b.cells_;
  }

 private:
  int width_;
  int height_;
  double resolution_;
  Pose2D origin_;
  std::vector<Cell> cells_;
  std::vector<double> distance_;  // metres
};

/// Plain-text form: "width W", "height H", "resolution R", "origin X Y THETA"
/// header lines followed by H rows of W characters, top row first
/// ('.' free, '#' occupied, '?' unknown). Numbers are written in shortest
/// round-trip form, so parse(format(g)) == g bit for bit.
std::string format_grid(const OccupancyGrid& grid);
OccupancyGrid parse_grid(const std::string& text);
OccupancyGrid load_grid(const std::string& path);
void save_grid(const OccupancyGrid& grid, const std::string& path);

/// Exact squared Euclidean distance transform (in cells) of a binary mask;
/// cells with `seed` true get 0. Infinity everywhere when no seed is set.
std::vector<double> squared_distance_transform(const std::vector<bool>& seed,
                                               int width, int height);

}  // namespace robokit

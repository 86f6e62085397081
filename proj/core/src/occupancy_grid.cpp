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
#include "robokit/occupancy_grid.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "robokit/errors.hpp"

namespace robokit {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// One-dimensional lower envelope of parabolas (Felzenszwalb & Huttenlocher).
void distance_1d(const double* f, int n, int stride, double* out) {
  std::vector<int> v(n);
  std::vector<double> z(n + 1);
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i) g[i] = f[i * stride];
  int k = -1;
  for (int q = 0; q < n; ++q) {
    if (g[q] == kInf) continue;
    if (k < 0) {
      k = 0;
      v[0] = q;
      z[0] = -kInf;
      z[1] = kInf;
      continue;
    }
    auto meet = [&](int p) {
      return ((g[q] + q * q) - (g[p] + p * p)) / (2.0 * (q - p));
    };
    double s = meet(v[k]);
    while (s <= z[k]) {
      --k;
      s = meet(v[k]);
    }
    ++k;
    v[k] = q;
    z[k] = s;
    z[k + 1] = kInf;
  }
  if (k < 0) {
    for (int q = 0; q < n; ++q) out[q * stride] = kInf;
    return;
  }
  int j = 0;
  for (int q = 0; q < n; ++q) {
    while (z[j + 1] < q) ++j;
    const double d = q - v[j];
    out[q * stride] = d * d + g[v[j]];
  }
}

std::string shortest(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

double parse_number(const std::string& token, const std::string& key) {
  double value = 0.0;
  const auto res = std::from_chars(token.data(), token.data() + token.size(), value);
  if (res.ec != std::errc() || res.ptr != token.data() + token.size()) {
    throw ConfigParseError(key, "invalid number '" + token + "'");
  }
  return value;
}

}  // namespace

std::vector<double> squared_distance_transform(const std::vector<bool>& seed,
                                               int width, int height) {
  const std::size_t n = static_cast<std::size_t>(width) * height;
  std::vector<double> f(n), tmp(n);
  for (std::size_t i = 0; i < n; ++i) f[i] = seed[i] ? 0.0 : kInf;
  for (int x = 0; x < width; ++x) distance_1d(&f[x], height, width, &tmp[x]);
  for (int y = 0; y < height; ++y) {
    distance_1d(&tmp[static_cast<std::size_t>(y) * width], width, 1,
                &f[static_cast<std::size_t>(y) * width]);
  }
  return f;
}

OccupancyGrid::OccupancyGrid(int width, int height, double resolution,
                             Pose2D origin, std::vector<Cell> cells)
    : width_(width),
      height_(height),
      resolution_(resolution),
      origin_(Pose2D::make(origin.x, origin.y, origin.theta)),
      cells_(std::move(cells)) {
  if (width <= 0) throw ValidationError("width", "must be positive");
  if (height <= 0) throw ValidationError("height", "must be positive");
  if (!(resolution > 0.0) || !std::isfinite(resolution)) {
    throw ValidationError("resolution", "must be positive");
  }
  if (cells_.size() != static_cast<std::size_t>(width) * height) {
    throw ValidationError("cells", "expected width * height cells");
  }
  std::vector<bool> occupied(cells_.size());
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    occupied[i] = cells_[i] == Cell::kOccupied;
  }
  distance_ = squared_distance_transform(occupied, width_, height_);
  for (double& d : distance_) d = std::sqrt(d) * resolution_;
}

OccupancyGrid::OccupancyGrid(int width, int height, double resolution,
                             Pose2D origin)
    : OccupancyGrid(width, height, resolution, origin,
                    std::vector<Cell>(static_cast<std::size_t>(std::max(width, 0)) *
                                          std::max(height, 0),
                                      Cell::kFree)) {}

std::optional<CellIndex> OccupancyGrid::world_to_cell(double x, double y) const {
  const Pose2D local = relative(origin_, {x, y, 0.0});
  const double fx = std::floor(local.x / resolution_);
  const double fy = std::floor(local.y / resolution_);
  if (fx < 0 || fy < 0 || fx >= width_ || fy >= height_) return std::nullopt;
  return CellIndex{static_cast<int>(fx), static_cast<int>(fy)};
}

Eigen::Vector2d OccupancyGrid::cell_center(int ix, int iy) const {
  const Pose2D p = compose(origin_, {(ix + 0.5) * resolution_,
                                     (iy + 0.5) * resolution_, 0.0});
  return {p.x, p.y};
}

double OccupancyGrid::clearance(double x, double y) const {
  const auto c = world_to_cell(x, y);
  if (!c) return 0.0;
  return distance_[index(c->ix, c->iy)];
}

double OccupancyGrid::clearance(int ix, int iy) const {
  if (!in_bounds(ix, iy)) return 0.0;
  return distance_[index(ix, iy)];
}

std::string format_grid(const OccupancyGrid& grid) {
  std::string out;
  out += "width " + std::to_string(grid.width()) + "\n";
  out += "height " + std::to_string(grid.height()) + "\n";
  out += "resolution " + shortest(grid.resolution()) + "\n";
  out += "origin " + shortest(grid.origin().x) + " " + shortest(grid.origin().y) +
         " " + shortest(grid.origin().theta) + "\n";
  for (int iy = grid.height() - 1; iy >= 0; --iy) {
    for (int ix = 0; ix < grid.width(); ++ix) {
      switch (grid.at(ix, iy)) {
        case Cell::kFree: out += '.'; break;
        case Cell::kOccupied: out += '#'; break;
        case Cell::kUnknown: out += '?'; break;
      }
    }
    out += '\n';
  }
  return out;
}

OccupancyGrid parse_grid(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  auto header = [&](const std::string& key, std::size_t count) {
    if (!std::getline(in, line)) throw ConfigParseError(key, "missing header line");
    std::istringstream ls(line);
    std::string name;
    ls >> name;
    if (name != key) {
      throw ConfigParseError(key, "expected '" + key + "', found '" + name + "'");
    }
    std::vector<std::string> tokens;
    for (std::string t; ls >> t;) tokens.push_back(t);
    if (tokens.size() != count) {
      throw ConfigParseError(key, "expected " + std::to_string(count) + " values");
    }
    return tokens;
  };
  auto as_int = [](const std::string& token, const std::string& key) {
    int value = 0;
    const auto res = std::from_chars(token.data(), token.data() + token.size(), value);
    if (res.ec != std::errc() || res.ptr != token.data() + token.size()) {
      throw ConfigParseError(key, "invalid integer '" + token + "'");
    }
    return value;
  };
  const int width = as_int(header("width", 1)[0], "width");
  const int height = as_int(header("height", 1)[0], "height");
  const double resolution = parse_number(header("resolution", 1)[0], "resolution");
  const auto o = header("origin", 3);
  const Pose2D origin{parse_number(o[0], "origin"), parse_number(o[1], "origin"),
                      parse_number(o[2], "origin")};
  if (width <= 0 || height <= 0) {
    throw ValidationError(width <= 0 ? "width" : "height", "must be positive");
  }
  std::vector<Cell> cells(static_cast<std::size_t>(width) * height);
  for (int row = 0; row < height; ++row) {
    if (!std::getline(in, line)) {
      throw ConfigParseError("cells", "expected " + std::to_string(height) + " rows");
    }
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (static_cast<int>(line.size()) != width) {
      throw ConfigParseError("cells", "row " + std::to_string(row) + " has " +
                                          std::to_string(line.size()) +
                                          " cells, expected " + std::to_string(width));
    }
    const int iy = height - 1 - row;
    for (int ix = 0; ix < width; ++ix) {
      Cell c;
      switch (line[ix]) {
        case '.': c = Cell::kFree; break;
        case '#': c = Cell::kOccupied; break;
        case '?': c = Cell::kUnknown; break;
        default:
          throw ConfigParseError("cells", std::string("unexpected character '") +
                                              line[ix] + "'");
      }
      cells[static_cast<std::size_t>(iy) * width + ix] = c;
    }
  }
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) {
      throw ConfigParseError("cells", "trailing content after grid rows");
    }
  }
  return OccupancyGrid(width, height, resolution, origin, std::move(cells));
}

OccupancyGrid load_grid(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open grid file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_grid(ss.str());
}

void save_grid(const OccupancyGrid& grid, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write grid file " + path);
  out << format_grid(grid);
  if (!out) throw Error("write failed for " + path);
}

}  // namespace robokit

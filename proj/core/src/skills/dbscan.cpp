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
#include "robokit/skills/dbscan.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <unordered_map>

#include "robokit/errors.hpp"

namespace robokit::skills {

namespace {

class BucketIndex {
 public:
  BucketIndex(const std::vector<Eigen::Vector2d>& points, double eps)
      : points_(points), eps_(eps), eps2_(eps * eps) {
    for (std::size_t i = 0; i < points.size(); ++i) {
      buckets_[key(cell(points[i].x()), cell(points[i].y()))].push_back(
          static_cast<int>(i));
    }
  }

  std::vector<int> neighbours(int i) const {
    std::vector<int> out;
    const auto& p = points_[i];
    const std::int64_t cx = cell(p.x());
    const std::int64_t cy = cell(p.y());
    for (std::int64_t dy = -1; dy <= 1; ++dy) {
      for (std::int64_t dx = -1; dx <= 1; ++dx) {
        const auto it = buckets_.find(key(cx + dx, cy + dy));
        if (it == buckets_.end()) continue;
        for (int j : it->second) {
          if ((points_[j] - p).squaredNorm() <= eps2_) out.push_back(j);
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  std::int64_t cell(double v) const {
    return static_cast<std::int64_t>(std::floor(v / eps_));
  }
  static std::int64_t key(std::int64_t cx, std::int64_t cy) {
    return (cx << 32) ^ (cy & 0xffffffffLL);
  }

  const std::vector<Eigen::Vector2d>& points_;
  double eps_;
  double eps2_;
  std::unordered_map<std::int64_t, std::vector<int>> buckets_;
};

constexpr int kUnvisited = -2;

}  // namespace

void DbscanParams::validate() const {
  if (!(eps > 0.0)) throw ValidationError("eps", "must be positive");
  if (min_pts < 1) throw ValidationError("min_pts", "must be >= 1");
}

std::vector<int> dbscan(const std::vector<Eigen::Vector2d>& points,
                        const DbscanParams& params) {
  params.validate();
  const BucketIndex index(points, params.eps);
  const auto min_pts = static_cast<std::size_t>(params.min_pts);
  std::vector<int> labels(points.size(), kUnvisited);
  int next_cluster = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (labels[i] != kUnvisited) continue;
    const auto seeds = index.neighbours(static_cast<int>(i));
    if (seeds.size() < min_pts) {
      labels[i] = kNoise;
      continue;
    }
    const int cluster = next_cluster++;
    labels[i] = cluster;
    std::deque<int> queue(seeds.begin(), seeds.end());
    while (!queue.empty()) {
      const int j = queue.front();
      queue.pop_front();
      if (labels[j] == kNoise) labels[j] = cluster;
      if (labels[j] != kUnvisited) continue;
      labels[j] = cluster;
      const auto more = index.neighbours(j);
      if (more.size() >= min_pts) queue.insert(queue.end(), more.begin(), more.end());
    }
  }
  return labels;
}

int cluster_count(const std::vector<int>& labels) {
  int n = 0;
  for (int l : labels) n = std::max(n, l + 1);
  return n;
}

}  // namespace robokit::skills

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
#include "robokit/skills/push.hpp"

#include <algorithm>
#include <cmath>

#include "robokit/sim/rng.hpp"

namespace robokit::skills {

void PushParams::validate() const {
  if (!(max_range > 0.0)) throw ValidationError("max_range", "must be positive");
  if (!(pre_push_height >= push_height)) {
    throw ValidationError("pre_push_height", "must not be below push_height");
  }
  dbscan.validate();
}

PointCloud filter_cloud(const PointCloud& cloud, double z_floor, double max_range) {
  PointCloud out;
  for (const auto& pt : cloud) {
    if (pt.p.z() > z_floor && std::hypot(pt.p.x(), pt.p.y()) <= max_range) {
      out.push_back(pt);
    }
  }
  return out;
}

std::vector<Eigen::Vector2d> project_xy(const PointCloud& cloud) {
  std::vector<Eigen::Vector2d> out;
  out.reserve(cloud.size());
  for (const auto& pt : cloud) out.emplace_back(pt.p.x(), pt.p.y());
  return out;
}

PushPlan select_push(const std::vector<Eigen::Vector2d>& points,
                     const std::vector<int>& labels, double push_height,
                     double pre_push_height, std::uint64_t seed) {
  if (points.size() != labels.size()) {
    throw ValidationError("labels", "one label per point required");
  }
  const int clusters = cluster_count(labels);
  if (clusters == 0) throw NoClustersError();
  sim::RngStream rng(sim::derive_seed(seed, "skills.push"));

  PushPlan plan;
  plan.cluster = static_cast<int>(rng.below(static_cast<std::uint64_t>(clusters)));
  Eigen::Vector2d lo = Eigen::Vector2d::Constant(std::numeric_limits<double>::infinity());
  Eigen::Vector2d hi = -lo;
  Eigen::Vector2d sum = Eigen::Vector2d::Zero();
  std::size_t count = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (labels[i] != plan.cluster) continue;
    lo = lo.cwiseMin(points[i]);
    hi = hi.cwiseMax(points[i]);
    sum += points[i];
    ++count;
  }
  const Eigen::Vector2d centroid = sum / static_cast<double>(count);
  plan.box_min = lo;
  plan.box_max = hi;

  const double w = hi.x() - lo.x();
  const double h = hi.y() - lo.y();
  double s = rng.uniform() * 2.0 * (w + h);
  Eigen::Vector2d p;
  if (s < w) {
    p = {lo.x() + s, lo.y()};
  } else if ((s -= w) < h) {
    p = {hi.x(), lo.y() + s};
  } else if ((s -= h) < w) {
    p = {hi.x() - s, hi.y()};
  } else {
    s -= w;
    p = {lo.x(), hi.y() - std::min(s, h)};
  }
  plan.push_pt = {p.x(), p.y(), push_height};
  plan.pre_push_pt = {p.x(), p.y(), pre_push_height};
  plan.obj_center = {centroid.x(), centroid.y(), push_height};
  return plan;
}

PushPlan plan_push(const PointCloud& cloud, const PushParams& params) {
  params.validate();
  const auto points = project_xy(filter_cloud(cloud, params.z_floor, params.max_range));
  const auto labels = dbscan(points, params.dbscan);
  return select_push(points, labels, params.push_height, params.pre_push_height,
                     params.seed);
}

}  // namespace robokit::skills

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
#include "robokit/sim/scene.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>

#include <yaml-cpp/yaml.h>

#include "robokit/errors.hpp"
#include "robokit/sim/rng.hpp"

namespace robokit::sim {

namespace {

constexpr double kEps = 1e-9;

struct Face {
  Eigen::Vector3d origin;  // corner, base frame
  Eigen::Vector3d u;       // edge vectors spanning the face
  Eigen::Vector3d v;
  Eigen::Vector3d normal;
};

std::vector<Face> box_faces(const SceneObject& o) {
  const Eigen::Matrix3d r = o.pose.rotation_matrix();
  const Eigen::Vector3d h = 0.5 * o.dimensions;
  std::vector<Face> faces;
  for (int axis = 0; axis < 3; ++axis) {
    const int a = (axis + 1) % 3;
    const int b = (axis + 2) % 3;
    for (double sign : {-1.0, 1.0}) {
      Eigen::Vector3d corner = -h;
      corner[axis] = sign * h[axis];
      Eigen::Vector3d u = Eigen::Vector3d::Zero();
      Eigen::Vector3d v = Eigen::Vector3d::Zero();
      u[a] = o.dimensions[a];
      v[b] = o.dimensions[b];
      Eigen::Vector3d n = Eigen::Vector3d::Zero();
      n[axis] = sign;
      faces.push_back({o.pose * corner, r * u, r * v, r * n});
    }
  }
  return faces;
}

bool occluded(const std::vector<SceneObject>& objects, const Eigen::Vector3d& eye,
              const Eigen::Vector3d& point, int skip) {
  const Eigen::Vector3d d = point - eye;
  for (std::size_t i = 0; i < objects.size(); ++i) {
    if (static_cast<int>(i) == skip) continue;
    const auto t = objects[i].intersect(eye, d);
    if (t && *t < 1.0 - 1e-7) return true;
  }
  return false;
}

Eigen::Vector3d read_vec3(const YAML::Node& node, const std::string& key) {
  if (!node || !node.IsSequence() || node.size() != 3) {
    throw ConfigParseError(key, "expected a list of 3 numbers");
  }
  try {
    return {node[0].as<double>(), node[1].as<double>(), node[2].as<double>()};
  } catch (const YAML::Exception&) {
    throw ConfigParseError(key, "expected a list of 3 numbers");
  }
}

double read_double(const YAML::Node& node, const std::string& key, double fallback) {
  if (!node) return fallback;
  try {
    return node.as<double>();
  } catch (const YAML::Exception&) {
    throw ConfigParseError(key, "expected a number");
  }
}

}  // namespace

void SceneObject::validate() const {
  if (!(dimensions.minCoeff() > 0.0)) {
    throw ValidationError("dimensions", "must be positive");
  }
  if (shape == Shape::kCylinder && dimensions.x() != dimensions.y()) {
    throw ValidationError("dimensions", "cylinder needs equal x and y radius");
  }
}

std::optional<double> SceneObject::intersect(const Eigen::Vector3d& origin,
                                             const Eigen::Vector3d& direction) const {
  const SE3Pose inv = pose.inverse();
  const Eigen::Vector3d o = inv * origin;
  const Eigen::Vector3d d = inv.rotation() * direction;
  double t_near = -std::numeric_limits<double>::infinity();
  double t_far = std::numeric_limits<double>::infinity();
  auto slab = [&](double oc, double dc, double half) {
    if (std::abs(dc) < 1e-15) return std::abs(oc) <= half;
    double t0 = (-half - oc) / dc;
    double t1 = (half - oc) / dc;
    if (t0 > t1) std::swap(t0, t1);
    t_near = std::max(t_near, t0);
    t_far = std::min(t_far, t1);
    return t_near <= t_far;
  };
  if (shape == Shape::kBox) {
    const Eigen::Vector3d h = 0.5 * dimensions;
    for (int i = 0; i < 3; ++i) {
      if (!slab(o[i], d[i], h[i])) return std::nullopt;
    }
  } else {
    const double r = dimensions.x();
    if (!slab(o.z(), d.z(), 0.5 * dimensions.z())) return std::nullopt;
    const double a = d.x() * d.x() + d.y() * d.y();
    const double b = 2.0 * (o.x() * d.x() + o.y() * d.y());
    const double c = o.x() * o.x() + o.y() * o.y() - r * r;
    if (a < 1e-15) {
      if (c > 0.0) return std::nullopt;
    } else {
      const double disc = b * b - 4.0 * a * c;
      if (disc < 0.0) return std::nullopt;
      const double sq = std::sqrt(disc);
      t_near = std::max(t_near, (-b - sq) / (2.0 * a));
      t_far = std::min(t_far, (-b + sq) / (2.0 * a));
      if (t_near > t_far) return std::nullopt;
    }
  }
  if (t_far <= kEps) return std::nullopt;
  return t_near > kEps ? t_near : t_far;
}

Scene parse_scene(const std::string& text) {
  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::Exception& e) {
    throw ConfigParseError("scene", e.what());
  }
  Scene scene;
  if (!root || root.IsNull()) return scene;
  if (!root.IsMap()) throw ConfigParseError("scene", "expected a mapping");
  for (const auto& kv : root) {
    const auto key = kv.first.as<std::string>();
    if (key != "schema_version" && key != "floor_radius" && key != "camera" &&
        key != "objects") {
      throw ValidationError(key, "unknown scene key");
    }
  }
  scene.floor_radius = read_double(root["floor_radius"], "floor_radius", 1.5);
  if (!(scene.floor_radius > 0.0)) {
    throw ValidationError("floor_radius", "must be positive");
  }
  if (const auto cam = root["camera"]) {
    CameraMount mount;
    if (cam["position"]) mount.position = read_vec3(cam["position"], "camera.position");
    mount.pan = read_double(cam["pan"], "camera.pan", mount.pan);
    mount.tilt = read_double(cam["tilt"], "camera.tilt", mount.tilt);
    scene.camera = mount;
  }
  if (const auto objects = root["objects"]) {
    if (!objects.IsSequence()) throw ConfigParseError("objects", "expected a list");
    for (std::size_t i = 0; i < objects.size(); ++i) {
      const auto node = objects[i];
      const std::string prefix = "objects[" + std::to_string(i) + "]";
      SceneObject obj;
      const auto shape = node["shape"] ? node["shape"].as<std::string>() : "box";
      if (shape == "box") {
        obj.shape = Shape::kBox;
        obj.dimensions = read_vec3(node["size"], prefix + ".size");
      } else if (shape == "cylinder") {
        obj.shape = Shape::kCylinder;
        const double r = read_double(node["radius"], prefix + ".radius", 0.0);
        const double h = read_double(node["height"], prefix + ".height", 0.0);
        obj.dimensions = {r, r, h};
      } else {
        throw ValidationError(prefix + ".shape", "must be box or cylinder");
      }
      const Eigen::Vector3d pos = read_vec3(node["position"], prefix + ".position");
      const double yaw = read_double(node["yaw"], prefix + ".yaw", 0.0);
      obj.pose = SE3Pose::from_xyz_ypr(pos, yaw, 0.0, 0.0);
      try {
        obj.validate();
      } catch (const ValidationError& e) {
        throw ValidationError(prefix + "." + e.key(), "must be positive");
      }
      scene.objects.push_back(obj);
    }
  }
  return scene;
}

Scene load_scene(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open scene file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_scene(ss.str());
}

PointCloud render_point_cloud(const Scene& scene, const SE3Pose& camera_to_base,
                              const CameraIntrinsics& intrinsics,
                              const RenderParams& params) {
  if (!(params.density > 0.0)) throw ValidationError("density", "must be positive");
  RngStream sample_rng(derive_seed(params.seed, "camera.sampling"));
  RngStream depth_rng(derive_seed(params.seed, "camera.depth"));
  const Eigen::Vector3d eye = camera_to_base.translation();
  const SE3Pose base_to_camera = camera_to_base.inverse();

  PointCloud cloud;
  auto emit = [&](const Eigen::Vector3d& p, PointTag tag, int owner) {
    const Eigen::Vector3d pc = base_to_camera * p;
    const auto uv = project(intrinsics, pc);
    if (!uv || !in_image(intrinsics, *uv)) return;
    if (occluded(scene.objects, eye, p, owner)) return;
    const double noise = params.depth_sigma * depth_rng.normal();
    const Eigen::Vector3d ray = p - eye;
    cloud.push_back({p + ray.normalized() * noise, tag});
  };

  for (std::size_t i = 0; i < scene.objects.size(); ++i) {
    const SceneObject& o = scene.objects[i];
    if (o.shape == Shape::kBox) {
      for (const Face& f : box_faces(o)) {
        const double area = f.u.norm() * f.v.norm();
        const auto count = static_cast<long>(std::llround(area * params.density));
        for (long k = 0; k < count; ++k) {
          const double a = sample_rng.uniform();
          const double b = sample_rng.uniform();
          const Eigen::Vector3d p = f.origin + a * f.u + b * f.v;
          if (f.normal.dot(eye - p) <= 0.0) continue;
          emit(p, PointTag::kObject, static_cast<int>(i));
        }
      }
    } else {
      const double r = o.dimensions.x();
      const double h = o.dimensions.z();
      const Eigen::Vector3d up = o.pose.rotation() * Eigen::Vector3d::UnitZ();
      for (double sign : {-1.0, 1.0}) {
        const auto count = static_cast<long>(
            std::llround(std::numbers::pi * r * r * params.density));
        for (long k = 0; k < count; ++k) {
          const double rho = r * std::sqrt(sample_rng.uniform());
          const double phi = 2.0 * std::numbers::pi * sample_rng.uniform();
          const Eigen::Vector3d p =
              o.pose * Eigen::Vector3d(rho * std::cos(phi), rho * std::sin(phi),
                                       sign * 0.5 * h);
          if ((sign * up).dot(eye - p) <= 0.0) continue;
          emit(p, PointTag::kObject, static_cast<int>(i));
        }
      }
      const auto count = static_cast<long>(
          std::llround(2.0 * std::numbers::pi * r * h * params.density));
      for (long k = 0; k < count; ++k) {
        const double phi = 2.0 * std::numbers::pi * sample_rng.uniform();
        const double z = h * (sample_rng.uniform() - 0.5);
        const Eigen::Vector3d local(r * std::cos(phi), r * std::sin(phi), z);
        const Eigen::Vector3d p = o.pose * local;
        const Eigen::Vector3d n =
            o.pose.rotation() * Eigen::Vector3d(std::cos(phi), std::sin(phi), 0.0);
        if (n.dot(eye - p) <= 0.0) continue;
        emit(p, PointTag::kObject, static_cast<int>(i));
      }
    }
  }

  const double radius = scene.floor_radius;
  const auto floor_count = static_cast<long>(
      std::llround(std::numbers::pi * radius * radius * params.density));
  for (long k = 0; k < floor_count; ++k) {
    const double rho = radius * std::sqrt(sample_rng.uniform());
    const double phi = 2.0 * std::numbers::pi * sample_rng.uniform();
    const Eigen::Vector3d p(rho * std::cos(phi), rho * std::sin(phi), 0.0);
    if (eye.z() <= 0.0) continue;
    emit(p, PointTag::kFloor, -1);
  }
  return cloud;
}

}  // namespace robokit::sim

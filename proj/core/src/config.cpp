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
#include "robokit/config.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>

#include <yaml-cpp/yaml.h>

#include "robokit/errors.hpp"

#ifndef ROBOKIT_BUNDLED_CONFIG_DIR
#define ROBOKIT_BUNDLED_CONFIG_DIR "configs"
#endif

namespace robokit {

namespace {

class Section {
 public:
  Section(YAML::Node node, std::string path)
      : node_(std::move(node)), path_(std::move(path)) {
    if (node_ && !node_.IsNull() && !node_.IsMap()) {
      throw ConfigParseError(path_.empty() ? "<root>" : path_, "expected a mapping");
    }
  }

  bool present() const { return node_ && !node_.IsNull(); }
  bool has(const std::string& key) const { return present() && node_[key]; }
  std::string key(const std::string& k) const { return path_.empty() ? k : path_ + "." + k; }
  YAML::Node raw(const std::string& k) const {
    return present() ? node_[k] : YAML::Node(YAML::NodeType::Undefined);
  }
  Section child(const std::string& k) const { return {raw(k), key(k)}; }

  void allow(std::initializer_list<const char*> keys) const {
    if (!present()) return;
    const std::set<std::string> ok(keys.begin(), keys.end());
    for (const auto& kv : node_) {
      const auto name = kv.first.as<std::string>();
      if (!ok.count(name)) throw ValidationError(key(name), "unknown key");
    }
  }

  double number(const std::string& k, double fallback) const {
    const auto n = raw(k);
    if (!n) return fallback;
    return as_number(n, key(k));
  }
  double required_number(const std::string& k) const {
    if (!has(k)) throw ValidationError(key(k), "required");
    return number(k, 0.0);
  }
  double positive(const std::string& k, double fallback) const {
    const double v = number(k, fallback);
    if (!(v > 0.0) || !std::isfinite(v)) throw ValidationError(key(k), "must be positive");
    return v;
  }
  double non_negative(const std::string& k, double fallback) const {
    const double v = number(k, fallback);
    if (!(v >= 0.0) || !std::isfinite(v)) throw ValidationError(key(k), "must be >= 0");
    return v;
  }
  int integer(const std::string& k, int fallback) const {
    const auto n = raw(k);
    if (!n) return fallback;
    try {
      return n.as<int>();
    } catch (const YAML::Exception&) {
      throw ConfigParseError(key(k), "expected an integer");
    }
  }
  bool flag(const std::string& k, bool fallback) const {
    const auto n = raw(k);
    if (!n) return fallback;
    try {
      return n.as<bool>();
    } catch (const YAML::Exception&) {
      throw ConfigParseError(key(k), "expected true or false");
    }
  }
  std::string text(const std::string& k, const std::string& fallback) const {
    const auto n = raw(k);
    if (!n) return fallback;
    if (!n.IsScalar()) throw ConfigParseError(key(k), "expected a string");
    return n.as<std::string>();
  }
  std::vector<double> numbers(const std::string& k, std::size_t size) const {
    return as_numbers(raw(k), key(k), size);
  }

  static double as_number(const YAML::Node& n, const std::string& path) {
    try {
      return n.as<double>();
    } catch (const YAML::Exception&) {
      throw ConfigParseError(path, "expected a number");
    }
  }
  static std::vector<double> as_numbers(const YAML::Node& n, const std::string& path,
                                        std::size_t size) {
    if (!n || !n.IsSequence()) throw ConfigParseError(path, "expected a list of numbers");
    if (size != 0 && n.size() != size) {
      throw ValidationError(path, "expected " + std::to_string(size) + " values");
    }
    std::vector<double> out;
    for (std::size_t i = 0; i < n.size(); ++i) {
      out.push_back(as_number(n[i], path + "[" + std::to_string(i) + "]"));
    }
    return out;
  }

 private:
  YAML::Node node_;
  std::string path_;
};

Eigen::Vector3d vec3(const std::vector<double>& v) { return {v[0], v[1], v[2]}; }

SE3Pose read_transform(const Section& s) {
  const Eigen::Vector3d xyz = s.has("xyz") ? vec3(s.numbers("xyz", 3)) : Eigen::Vector3d::Zero();
  const Eigen::Vector3d rpy = s.has("rpy") ? vec3(s.numbers("rpy", 3)) : Eigen::Vector3d::Zero();
  return SE3Pose::from_xyz_ypr(xyz, rpy.z(), rpy.y(), rpy.x());
}

template <int N>
Eigen::Matrix<double, N, N> read_weight(const Section& s, const std::string& k,
                                        const Eigen::Matrix<double, N, N>& fallback) {
  const auto n = s.raw(k);
  if (!n) return fallback;
  const std::string path = s.key(k);
  if (!n.IsSequence() || n.size() != N) {
    throw ValidationError(path, "expected " + std::to_string(N) +
                                    " diagonal entries or an NxN matrix");
  }
  Eigen::Matrix<double, N, N> m = Eigen::Matrix<double, N, N>::Zero();
  if (n[0].IsSequence()) {
    for (int r = 0; r < N; ++r) {
      const auto row = Section::as_numbers(n[r], path + "[" + std::to_string(r) + "]", N);
      for (int c = 0; c < N; ++c) m(r, c) = row[c];
    }
  } else {
    const auto d = Section::as_numbers(n, path, N);
    for (int i = 0; i < N; ++i) m(i, i) = d[i];
  }
  return m;
}

LqrConfig read_lqr(const Section& s) {
  s.allow({"Q", "R", "Qf", "trajectory", "speed_fraction", "max_replans"});
  LqrConfig c;
  c.weights.Q = read_weight<3>(s, "Q", c.weights.Q);
  c.weights.R = read_weight<2>(s, "R", c.weights.R);
  c.weights.Qf = read_weight<3>(s, "Qf", 10.0 * c.weights.Q);
  try {
    c.weights.validate();
  } catch (const ValidationError& e) {
    throw ValidationError(s.key(e.key()), e.what());
  }
  const auto traj = s.text("trajectory", "sharp");
  if (traj == "sharp") {
    c.trajectory = TrajectoryKind::kSharp;
  } else if (traj == "smooth") {
    c.trajectory = TrajectoryKind::kSmooth;
  } else {
    throw ValidationError(s.key("trajectory"), "must be sharp or smooth");
  }
  c.speed_fraction = s.positive("speed_fraction", c.speed_fraction);
  if (c.speed_fraction > 1.0) throw ValidationError(s.key("speed_fraction"), "must be <= 1");
  c.max_replans = s.integer("max_replans", c.max_replans);
  if (c.max_replans < 0) throw ValidationError(s.key("max_replans"), "must be >= 0");
  return c;
}

ProportionalGains read_proportional(const Section& s) {
  s.allow({"k_lin", "k_ang", "bearing_threshold_deg", "distance_threshold",
           "heading_threshold_deg"});
  ProportionalGains g;
  g.k_lin = s.positive("k_lin", g.k_lin);
  g.k_ang = s.positive("k_ang", g.k_ang);
  g.bearing_threshold = deg2rad(s.positive("bearing_threshold_deg", 2.0));
  g.distance_threshold = s.positive("distance_threshold", g.distance_threshold);
  g.heading_threshold = deg2rad(s.positive("heading_threshold_deg", 0.5));
  return g;
}

DwaParams read_dwa(const Section& s) {
  s.allow({"v_samples", "w_samples", "horizon", "sim_step", "v_min", "xy_tolerance",
           "yaw_tolerance_deg", "robot_radius", "clearance_cap", "rotate_lookahead",
           "weights"});
  DwaParams p;
  p.v_samples = s.integer("v_samples", p.v_samples);
  if (p.v_samples < 1) throw ValidationError(s.key("v_samples"), "must be >= 1");
  p.w_samples = s.integer("w_samples", p.w_samples);
  if (p.w_samples < 1) throw ValidationError(s.key("w_samples"), "must be >= 1");
  p.horizon = s.positive("horizon", p.horizon);
  p.sim_step = s.positive("sim_step", p.sim_step);
  p.v_min = s.number("v_min", p.v_min);
  p.xy_tolerance = s.positive("xy_tolerance", p.xy_tolerance);
  p.yaw_tolerance = deg2rad(s.positive("yaw_tolerance_deg", 1.5));
  p.robot_radius = s.non_negative("robot_radius", p.robot_radius);
  p.clearance_cap = s.positive("clearance_cap", p.clearance_cap);
  p.rotate_lookahead = s.positive("rotate_lookahead", p.rotate_lookahead);
  const Section w = s.child("weights");
  w.allow({"heading", "distance", "velocity", "clearance"});
  p.weights.heading = w.non_negative("heading", p.weights.heading);
  p.weights.distance = w.non_negative("distance", p.weights.distance);
  p.weights.velocity = w.non_negative("velocity", p.weights.velocity);
  p.weights.clearance = w.non_negative("clearance", p.weights.clearance);
  return p;
}

void read_arm(const Section& s, RobotConfig& cfg) {
  s.allow({"joints", "end_effector", "ik", "cartesian_step", "sim_dt", "named_poses",
           "noise", "repeatability", "grasp"});
  ArmConfig& arm = cfg.arm;
  const auto joints = s.raw("joints");
  if (!joints || !joints.IsSequence() || joints.size() == 0) {
    throw ValidationError(s.key("joints"), "arm needs at least one joint");
  }
  std::vector<RevoluteJoint> chain;
  for (std::size_t i = 0; i < joints.size(); ++i) {
    const Section j(joints[i], s.key("joints[" + std::to_string(i) + "]"));
    j.allow({"name", "type", "xyz", "rpy", "axis", "limits", "max_velocity"});
    RevoluteJoint rj;
    rj.name = j.text("name", "joint_" + std::to_string(i + 1));
    const auto type = j.text("type", "revolute");
    if (type != "revolute") {
      throw ValidationError(j.key("type"), "only revolute joints are supported");
    }
    rj.parent_transform = read_transform(j);
    if (!j.has("axis")) throw ValidationError(j.key("axis"), "required");
    const Eigen::Vector3d axis = vec3(j.numbers("axis", 3));
    if (std::abs(axis.norm() - 1.0) > 1e-9) {
      throw ValidationError(j.key("axis"), "must be a unit vector");
    }
    rj.axis = axis;
    if (!j.has("limits")) throw ValidationError(j.key("limits"), "required");
    const auto lim = j.numbers("limits", 2);
    if (!(lim[0] < lim[1])) throw ValidationError(j.key("limits"), "need lower < upper");
    rj.lower = lim[0];
    rj.upper = lim[1];
    rj.max_velocity = j.positive("max_velocity", rj.max_velocity);
    chain.push_back(rj);
  }
  const Section ee = s.child("end_effector");
  ee.allow({"xyz", "rpy"});
  arm.chain = KinematicChain(std::move(chain), read_transform(ee));

  const Section ik = s.child("ik");
  ik.allow({"position_tolerance", "orientation_tolerance", "max_iterations", "damping",
            "max_step", "restarts"});
  arm.ik.position_tolerance = ik.positive("position_tolerance", arm.ik.position_tolerance);
  arm.ik.orientation_tolerance =
      ik.positive("orientation_tolerance", arm.ik.orientation_tolerance);
  arm.ik.max_iterations = ik.integer("max_iterations", arm.ik.max_iterations);
  if (arm.ik.max_iterations < 1) {
    throw ValidationError(ik.key("max_iterations"), "must be positive");
  }
  arm.ik.damping = ik.positive("damping", arm.ik.damping);
  arm.ik.max_step = ik.positive("max_step", arm.ik.max_step);
  arm.ik.restarts = ik.integer("restarts", arm.ik.restarts);
  if (arm.ik.restarts < 0) throw ValidationError(ik.key("restarts"), "must be >= 0");

  arm.cartesian_step = s.positive("cartesian_step", arm.cartesian_step);
  arm.sim_dt = s.positive("sim_dt", arm.sim_dt);

  const std::size_t dof = arm.chain.dof();
  arm.named_poses["home"] = JointVector::Zero(static_cast<Eigen::Index>(dof));
  if (const auto poses = s.raw("named_poses")) {
    if (!poses.IsMap()) throw ConfigParseError(s.key("named_poses"), "expected a mapping");
    for (const auto& kv : poses) {
      const auto name = kv.first.as<std::string>();
      const std::string path = s.key("named_poses." + name);
      const auto values = Section::as_numbers(kv.second, path, dof);
      const JointVector q = Eigen::Map<const JointVector>(values.data(),
                                                          static_cast<Eigen::Index>(dof));
      if (!arm.chain.within_limits(q)) {
        throw ValidationError(path, "outside the joint limits");
      }
      arm.named_poses[name] = q;
    }
  }

  const Section noise = s.child("noise");
  noise.allow({"sigma"});
  if (noise.has("sigma")) {
    arm.noise.sigma = vec3(noise.numbers("sigma", 3));
    if (!(arm.noise.sigma.minCoeff() >= 0.0)) {
      throw ValidationError(noise.key("sigma"), "must be >= 0");
    }
  }

  const Section rep = s.child("repeatability");
  rep.allow({"poses", "pitch", "roll"});
  if (const auto poses = rep.raw("poses")) {
    if (!poses.IsSequence()) throw ConfigParseError(rep.key("poses"), "expected a list");
    for (std::size_t i = 0; i < poses.size(); ++i) {
      arm.repeatability_poses.push_back(vec3(Section::as_numbers(
          poses[i], rep.key("poses[" + std::to_string(i) + "]"), 3)));
    }
  }
  arm.repeatability_pitch = rep.number("pitch", arm.repeatability_pitch);
  arm.repeatability_roll = rep.number("roll", arm.repeatability_roll);

  const Section grasp = s.child("grasp");
  grasp.allow({"pregrasp_height", "grasp_height"});
  arm.pregrasp_height = grasp.number("pregrasp_height", arm.pregrasp_height);
  arm.grasp_height = grasp.number("grasp_height", arm.grasp_height);
  if (arm.pregrasp_height < arm.grasp_height) {
    throw ValidationError(grasp.key("pregrasp_height"), "must not be below grasp_height");
  }
}

void read_base(const Section& s, RobotConfig& cfg) {
  s.allow({"dt", "limits", "tolerances", "noise", "tracking_speed", "default_controller",
           "controllers"});
  BaseConfig& base = cfg.base;
  base.dt = s.positive("dt", base.dt);
  const Section lim = s.child("limits");
  lim.allow({"v_max", "w_max", "a_max", "alpha_max"});
  base.limits.v_max = lim.positive("v_max", base.limits.v_max);
  base.limits.w_max = lim.positive("w_max", base.limits.w_max);
  base.limits.a_max = lim.positive("a_max", base.limits.a_max);
  base.limits.alpha_max = lim.positive("alpha_max", base.limits.alpha_max);

  const Section tol = s.child("tolerances");
  tol.allow({"position", "heading_deg", "timeout"});
  base.position_tolerance = tol.positive("position", base.position_tolerance);
  base.heading_tolerance = deg2rad(tol.positive("heading_deg", 0.5));
  base.timeout = tol.positive("timeout", base.timeout);

  const Section noise = s.child("noise");
  noise.allow({"actuation_v", "actuation_w", "odom_v", "odom_w", "odom_bias_v",
               "odom_bias_w", "odom_bias_spread"});
  base.noise.actuation_v = noise.non_negative("actuation_v", 0.0);
  base.noise.actuation_w = noise.non_negative("actuation_w", 0.0);
  base.noise.odom_v = noise.non_negative("odom_v", 0.0);
  base.noise.odom_w = noise.non_negative("odom_w", 0.0);
  base.noise.odom_bias_v = noise.number("odom_bias_v", 0.0);
  base.noise.odom_bias_w = noise.number("odom_bias_w", 0.0);
  base.noise.odom_bias_spread = noise.non_negative("odom_bias_spread", 0.0);

  base.tracking_speed = s.positive("tracking_speed", base.tracking_speed);

  const Section ctl = s.child("controllers");
  ctl.allow({"lqr", "proportional", "dwa"});
  if (!ctl.present()) {
    base.controllers.lqr = LqrConfig{};
    base.controllers.proportional = ProportionalGains{};
    base.controllers.dwa = DwaParams{};
  } else {
    if (ctl.has("lqr")) base.controllers.lqr = read_lqr(ctl.child("lqr"));
    if (ctl.has("proportional")) {
      base.controllers.proportional = read_proportional(ctl.child("proportional"));
    }
    if (ctl.has("dwa")) base.controllers.dwa = read_dwa(ctl.child("dwa"));
  }
  base.default_controller =
      canonical_controller_name(s.text("default_controller", base.default_controller));
  if (!base.controllers.has(base.default_controller)) {
    throw ValidationError(s.key("default_controller"),
                          "no parameter block for controller '" +
                              base.default_controller + "'");
  }
}

void read_camera(const Section& s, RobotConfig& cfg) {
  s.allow({"intrinsics", "mount", "depth_sigma", "density", "views"});
  CameraConfig& cam = cfg.camera;
  const Section k = s.child("intrinsics");
  k.allow({"fx", "fy", "cx", "cy", "width", "height"});
  cam.intrinsics.fx = k.positive("fx", cam.intrinsics.fx);
  cam.intrinsics.fy = k.positive("fy", cam.intrinsics.fy);
  cam.intrinsics.cx = k.number("cx", cam.intrinsics.cx);
  cam.intrinsics.cy = k.number("cy", cam.intrinsics.cy);
  cam.intrinsics.width = k.integer("width", cam.intrinsics.width);
  cam.intrinsics.height = k.integer("height", cam.intrinsics.height);
  cam.intrinsics.validate();
  const Section mount = s.child("mount");
  mount.allow({"position", "pan", "tilt"});
  if (mount.has("position")) cam.mount.position = vec3(mount.numbers("position", 3));
  cam.mount.pan = mount.number("pan", cam.mount.pan);
  cam.mount.tilt = mount.number("tilt", cam.mount.tilt);
  cam.depth_sigma = s.non_negative("depth_sigma", cam.depth_sigma);
  cam.density = s.positive("density", cam.density);
  if (const auto views = s.raw("views")) {
    if (!views.IsMap()) throw ConfigParseError(s.key("views"), "expected a mapping");
    for (const auto& kv : views) {
      const auto name = kv.first.as<std::string>();
      const auto v = Section::as_numbers(kv.second, s.key("views." + name), 2);
      cam.views[name] = {v[0], v[1]};
    }
  }
}

void read_push(const Section& s, RobotConfig& cfg) {
  s.allow({"z_floor", "max_range", "eps", "min_pts", "push_height", "pre_push_height"});
  skills::PushParams& p = cfg.push;
  p.z_floor = s.number("z_floor", p.z_floor);
  p.max_range = s.positive("max_range", p.max_range);
  p.dbscan.eps = s.positive("eps", p.dbscan.eps);
  p.dbscan.min_pts = s.integer("min_pts", p.dbscan.min_pts);
  if (p.dbscan.min_pts < 1) throw ValidationError(s.key("min_pts"), "must be >= 1");
  p.push_height = s.number("push_height", cfg.arm.grasp_height);
  p.pre_push_height = s.number("pre_push_height", cfg.arm.pregrasp_height);
  if (p.pre_push_height < p.push_height) {
    throw ValidationError(s.key("pre_push_height"), "must not be below push_height");
  }
}

}  // namespace

std::vector<std::string> ControllerSet::names() const {
  std::vector<std::string> out;
  if (lqr) out.emplace_back("lqr");
  if (proportional) out.emplace_back("proportional");
  if (dwa) out.emplace_back("dwa");
  return out;
}

bool ControllerSet::has(const std::string& name) const {
  const auto n = canonical_controller_name(name);
  return (n == "lqr" && lqr) || (n == "proportional" && proportional) ||
         (n == "dwa" && dwa);
}

std::string canonical_controller_name(const std::string& name) {
  return name == "prop" ? "proportional" : name;
}

JointVector ArmConfig::named_pose(const std::string& name) const {
  const auto it = named_poses.find(name);
  if (it == named_poses.end()) throw ValidationError(name, "unknown named arm pose");
  return it->second;
}

RobotConfig parse_config(const std::string& text) {
  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::Exception& e) {
    throw ConfigParseError("<root>", std::string("malformed config: ") + e.what());
  }
  if (!root || !root.IsMap()) throw ConfigParseError("<root>", "expected a mapping");
  const Section top(root, "");
  top.allow({"schema_version", "name", "backend", "use_arm", "use_base", "use_camera",
             "use_gripper", "frames", "arm", "base", "camera", "push"});
  RobotConfig cfg;
  cfg.schema_version = top.integer("schema_version", kConfigSchemaVersion);
  if (cfg.schema_version != kConfigSchemaVersion) {
    throw ValidationError("schema_version",
                          "unsupported version " + std::to_string(cfg.schema_version));
  }
  if (!top.has("name")) throw ValidationError("name", "required");
  cfg.name = top.text("name", "");
  if (cfg.name.empty()) throw ValidationError("name", "must not be empty");
  cfg.backend = top.text("backend", cfg.backend);
  cfg.use_arm = top.flag("use_arm", false);
  cfg.use_base = top.flag("use_base", false);
  cfg.use_camera = top.flag("use_camera", false);
  cfg.use_gripper = top.flag("use_gripper", false);
  const Section frames = top.child("frames");
  frames.allow({"base", "end_effector"});
  cfg.base_frame = frames.text("base", cfg.base_frame);
  cfg.ee_frame = frames.text("end_effector", cfg.ee_frame);

  if (cfg.use_arm || top.has("arm")) {
    if (!top.has("arm")) throw ValidationError("arm", "required when use_arm is true");
    read_arm(top.child("arm"), cfg);
  }
  read_base(top.child("base"), cfg);
  read_camera(top.child("camera"), cfg);
  read_push(top.child("push"), cfg);
  return cfg;
}

RobotConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigParseError(path, "cannot open config file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string bundled_config_dir() { return ROBOKIT_BUNDLED_CONFIG_DIR; }

std::string resolve_config_path(const std::string& name_or_path) {
  namespace fs = std::filesystem;
  if (fs::is_regular_file(name_or_path)) return name_or_path;
  const std::string file = name_or_path + ".yaml";
  if (const char* dir = std::getenv("ROBOKIT_CONFIG_DIR"); dir && *dir) {
    const fs::path p = fs::path(dir) / file;
    if (fs::is_regular_file(p)) return p.string();
  }
  const fs::path p = fs::path(bundled_config_dir()) / file;
  if (fs::is_regular_file(p)) return p.string();
  throw ValidationError("robot", "no config file or bundled config named '" +
                                     name_or_path + "'");
}

}  // namespace robokit

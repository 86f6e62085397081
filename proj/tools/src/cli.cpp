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
#include "robokit/cli/cli.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <functional>
#include <limits>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "robokit/bench/arm_bench.hpp"
#include "robokit/bench/base_bench.hpp"
#include "robokit/bench/report.hpp"
#include "robokit/bench/stats.hpp"
#include "robokit/bench/tracking_bench.hpp"
#include "robokit/config.hpp"
#include "robokit/errors.hpp"
#include "robokit/occupancy_grid.hpp"
#include "robokit/planner.hpp"
#include "robokit/point_cloud.hpp"
#include "robokit/robot.hpp"
#include "robokit/sim/backend.hpp"
#include "robokit/sim/rng.hpp"
#include "robokit/sim/scene.hpp"
#include "robokit/skills/execute.hpp"
#include "robokit/skills/grasp.hpp"

namespace robokit::cli {

namespace fs = std::filesystem;
using bench::exact_number;

namespace {

/// A failure that is neither bad input nor a library exception, e.g. a
/// motion that aborted; reported with exit code 2.
class RuntimeFailure : public Error {
 public:
  using Error::Error;
};

struct Common {
  std::string robot = "locobot";
  std::uint64_t seed = kDefaultSeed;
  std::string out = "robokit_out";
  std::string label;
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--robot", c.robot,
                  "Robot config: a YAML path or a bundled name (locobot, locobot_lite, "
                  "sawyer_sim); bare names are looked up in $ROBOKIT_CONFIG_DIR first")
      ->capture_default_str();
  app->add_option("--seed", c.seed, "Master seed (integer)")->capture_default_str();
  app->add_option("--out", c.out, "Output root directory")->capture_default_str();
  app->add_option("--label", c.label,
                  "Output sub-directory name (default: UTC timestamp YYYYmmdd-HHMMSS)");
}

enum class NoiseMode { kConfig, kZero, kUnbiased };

void add_noise(CLI::App* app, NoiseMode& mode) {
  app->add_option_function<std::string>(
         "--noise",
         [&mode](const std::string& v) {
           mode = v == "zero" ? NoiseMode::kZero
                  : v == "unbiased" ? NoiseMode::kUnbiased
                                    : NoiseMode::kConfig;
         },
         "Base noise: config (as shipped), zero (noise-free), unbiased (shipped Gaussian "
         "noise without the odometry bias)")
      ->check(CLI::IsMember({"config", "zero", "unbiased"}))
      ->default_str("config");
}

void apply_noise(RobotConfig& config, NoiseMode mode) {
  auto& n = config.base.noise;
  if (mode == NoiseMode::kZero) {
    const auto seed = n.seed;
    n = sim::BaseNoiseModel{};
    n.seed = seed;
  } else if (mode == NoiseMode::kUnbiased) {
    n.odom_bias_v = n.odom_bias_w = n.odom_bias_spread = 0.0;
  }
}

std::string timestamp_label() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y%m%d-%H%M%S", &tm);
  return buf;
}

fs::path output_dir(const Common& c, const std::string& subcommand) {
  return fs::path(c.out) / subcommand / (c.label.empty() ? timestamp_label() : c.label);
}

RobotConfig load_robot(const Common& c) { return load_config(resolve_config_path(c.robot)); }

bench::BackendFactory sim_factory(const RobotConfig& config) {
  return [config](std::uint64_t seed) -> std::shared_ptr<Backend> {
    return sim::make_sim_backend(config, seed);
  };
}

/// An existing path, or a file of that name in the bundled data directory.
std::string resolve_data_file(const std::string& name, const std::string& subdir) {
  if (fs::exists(name)) return name;
  const fs::path bundled = fs::path(bundled_config_dir()).parent_path() / subdir / name;
  if (fs::exists(bundled)) return bundled.string();
  throw ValidationError(subdir, "no such file '" + name + "'");
}

Pose2D parse_pose(const std::string& text, const std::string& key) {
  std::vector<double> xs;
  std::stringstream in(text);
  std::string cell;
  while (std::getline(in, cell, ',')) {
    try {
      std::size_t used = 0;
      xs.push_back(std::stod(cell, &used));
      if (used != cell.size()) throw std::invalid_argument(cell);
    } catch (const std::exception&) {
      throw ValidationError(key, "expected X,Y,THETA numbers, got '" + text + "'");
    }
  }
  if (xs.size() != 3) throw ValidationError(key, "expected X,Y,THETA, got '" + text + "'");
  return Pose2D::make(xs[0], xs[1], xs[2]);
}

std::string vec3(const Eigen::Vector3d& p) {
  return exact_number(p.x()) + "," + exact_number(p.y()) + "," + exact_number(p.z());
}

void finish(std::ostream& out, const std::string& summary, const fs::path& dir) {
  out << summary << "wrote " << dir.string() << "\n";
}

// bench base -----------------------------------------------------------------

struct BenchBaseArgs {
  Common common;
  std::string controller = "all";
  int threads = 1;
  int trials = 5;
  NoiseMode noise = NoiseMode::kConfig;
};

void run_bench_base(const BenchBaseArgs& a, std::ostream& out) {
  RobotConfig config = load_robot(a.common);
  apply_noise(config, a.noise);
  std::vector<std::string> controllers;
  if (a.controller == "all") {
    controllers = config.base.controllers.names();
  } else {
    controllers.push_back(a.controller);
  }
  auto protocol = bench::BaseTrialProtocol::standard();
  protocol.trials_per_target = a.trials;
  if (!config.use_base) throw CapabilityError("base", "disabled in config '" + config.name + "'");
  const auto report = bench::run_base_benchmark(config, sim_factory(config), controllers,
                                                protocol, a.common.seed, a.threads);
  const fs::path dir = output_dir(a.common, "bench_base");
  bench::write_report(report, dir);
  finish(out, bench::base_summary(report), dir);
}

// bench arm ------------------------------------------------------------------

struct BenchArmArgs {
  Common common;
  int reps = 10;
  std::vector<double> sigma_mm;
};

void run_bench_arm(const BenchArmArgs& a, std::ostream& out) {
  RobotConfig config = load_robot(a.common);
  if (!a.sigma_mm.empty()) {
    config.arm.noise.sigma =
        Eigen::Vector3d(a.sigma_mm[0], a.sigma_mm[1], a.sigma_mm[2]) / 1000.0;
  }
  config.arm.noise.validate();
  const auto result = bench::run_arm_repeatability(
      config, sim_factory(config), config.arm.repeatability_poses, a.reps, a.common.seed);
  const fs::path dir = output_dir(a.common, "bench_arm");
  bench::write_report(result, dir);
  finish(out, bench::arm_summary(result), dir);
}

// track ----------------------------------------------------------------------

struct TrackArgs {
  Common common;
  std::string shape = "circle";
  double radius = 0.4;
  std::string file;
  std::string controller = "lqr";
  NoiseMode noise = NoiseMode::kConfig;
};

void run_track(const TrackArgs& a, std::ostream& out) {
  RobotConfig config = load_robot(a.common);
  apply_noise(config, a.noise);
  TimedTrajectory reference;
  if (a.shape == "circle") {
    reference = bench::circle_reference(config, a.radius);
  } else {
    if (a.file.empty()) throw ValidationError("--file", "required for --shape file");
    reference = load_trajectory_csv(a.file);
  }
  const auto report =
      bench::run_tracking_benchmark(config, sim_factory(config), reference, a.controller,
                                    a.common.seed, a.shape, a.shape == "circle" ? a.radius : 0.0);
  const fs::path dir = output_dir(a.common, "track");
  bench::write_report(report, dir);
  finish(out, bench::tracking_summary(report), dir);
}

// plan -----------------------------------------------------------------------

struct PlanArgs {
  Common common;
  std::string map;
  std::string start;
  std::string goal;
  double inflation = 0.18;
};

std::string plan_svg(const OccupancyGrid& grid, const PlanResult& plan) {
  const double cell_px = std::max(4.0, std::floor(600.0 / std::max(grid.width(), grid.height())));
  const double w = cell_px * grid.width(), h = cell_px * grid.height();
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
      << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
  svg << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (int iy = 0; iy < grid.height(); ++iy) {
    for (int ix = 0; ix < grid.width(); ++ix) {
      const Cell c = grid.at(ix, iy);
      if (c == Cell::kFree) continue;
      svg << "  <rect x=\"" << ix * cell_px << "\" y=\"" << (grid.height() - 1 - iy) * cell_px
          << "\" width=\"" << cell_px << "\" height=\"" << cell_px << "\" fill=\""
          << (c == Cell::kOccupied ? "black" : "gray") << "\"/>\n";
    }
  }
  const double px_per_m = cell_px / grid.resolution();
  auto to_px = [&](const Eigen::Vector2d& p) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.2f,%.2f", (p.x() - grid.origin().x) * px_per_m,
                  h - (p.y() - grid.origin().y) * px_per_m);
    return std::string(buf);
  };
  if (!plan.waypoints.empty()) {
    svg << "  <polyline fill=\"none\" stroke=\"blue\" stroke-width=\"2\" points=\"";
    for (std::size_t i = 0; i < plan.waypoints.size(); ++i) {
      svg << (i ? " " : "") << to_px(plan.waypoints[i]);
    }
    svg << "\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

int run_plan(const PlanArgs& a, std::ostream& out, std::ostream& err) {
  const OccupancyGrid grid = load_grid(resolve_data_file(a.map, "maps"));
  const Pose2D start = parse_pose(a.start, "--start");
  const Pose2D goal = parse_pose(a.goal, "--goal");
  if (!(a.inflation >= 0.0)) throw ValidationError("--inflation", "must be >= 0");
  const PlanResult plan = plan_global(grid, start, goal, a.inflation);

  std::string csv = "# robokit plan schema " + std::to_string(bench::kReportSchemaVersion) +
                    " seed " + std::to_string(a.common.seed) + "\n";
  csv += "index,x_m,y_m\n";
  for (std::size_t i = 0; i < plan.waypoints.size(); ++i) {
    csv += std::to_string(i) + "," + exact_number(plan.waypoints[i].x()) + "," +
           exact_number(plan.waypoints[i].y()) + "\n";
  }
  std::ostringstream summary;
  summary << "map " << fs::path(a.map).filename().string() << ", inflation "
          << exact_number(a.inflation) << " m\n";
  if (plan.found) {
    summary << "waypoints " << plan.waypoints.size() << ", length (m) "
            << exact_number(plan.length) << ", raw A* cost (m) " << exact_number(plan.raw_cost)
            << "\n";
  } else {
    summary << "NoPath\n";
  }
  const fs::path dir = output_dir(a.common, "plan");
  fs::create_directories(dir);
  bench::write_text_file(dir / "plan.csv", csv);
  bench::write_text_file(dir / "plan.svg", plan_svg(grid, plan));
  bench::write_text_file(dir / "summary.txt", summary.str());
  finish(out, summary.str(), dir);
  if (!plan.found) {
    err << "NoPath: no collision-free path from start to goal\n";
    return kRuntimeFailure;
  }
  return kOk;
}

// demo push ------------------------------------------------------------------

struct PushArgs {
  Common common;
  std::string scene = "one_cube.yaml";
};

std::string motion_lines(const MotionResult& m) {
  std::string s = "phases";
  for (const auto& p : m.phases) s += " " + p;
  s += "\n";
  if (!m.reached) s += "failed in " + m.failed_phase + ": " + m.message + "\n";
  return s;
}

void run_demo_push(const PushArgs& a, std::ostream& out) {
  RobotConfig config = load_robot(a.common);
  sim::Scene scene = sim::load_scene(resolve_data_file(a.scene, "scenes"));
  auto backend = sim::make_sim_backend(config, a.common.seed);
  backend->set_scene(std::move(scene));
  RobotHandle robot = make_robot(config, backend);
  skills::PushParams params = config.push;
  params.seed = sim::derive_seed(a.common.seed, "skills.push");
  const skills::PushDemo demo = skills::run_push_pipeline(robot, params);

  const fs::path dir = output_dir(a.common, "demo_push");
  fs::create_directories(dir);
  save_xyz(demo.cloud, (dir / "cloud.xyz").string());
  std::string csv = "# robokit push schema " + std::to_string(bench::kReportSchemaVersion) +
                    " seed " + std::to_string(a.common.seed) + "\n";
  csv += "point,x_m,y_m,z_m\n";
  csv += "pre_push," + vec3(demo.plan.pre_push_pt) + "\n";
  csv += "push," + vec3(demo.plan.push_pt) + "\n";
  csv += "object_center," + vec3(demo.plan.obj_center) + "\n";
  csv += "sweep_start," + vec3(demo.sweep_start) + "\n";
  csv += "sweep_end," + vec3(demo.sweep_end) + "\n";
  bench::write_text_file(dir / "push.csv", csv);

  std::ostringstream summary;
  summary << "cloud points " << demo.cloud.size() << ", cluster " << demo.plan.cluster << "\n";
  summary << "push point (m) " << vec3(demo.plan.push_pt) << "\n";
  summary << "object center (m) " << vec3(demo.plan.obj_center) << "\n";
  summary << motion_lines(demo.motion);
  bench::write_text_file(dir / "summary.txt", summary.str());
  finish(out, summary.str(), dir);
  if (!demo.motion.reached) throw RuntimeFailure("IK abort: " + demo.motion.message);
}

// demo grasp -----------------------------------------------------------------

struct GraspArgs {
  Common common;
  skills::ImageGrasp grasp;
};

void run_demo_grasp(const GraspArgs& a, std::ostream& out) {
  RobotConfig config = load_robot(a.common);
  RobotHandle robot = make_robot(config, sim::make_sim_backend(config, a.common.seed));
  robot.camera().set_view("grasp");
  const skills::GraspPose pose =
      skills::backproject_grasp(a.grasp, robot.camera().intrinsics(), robot.camera().pose());
  const MotionResult m = skills::execute_grasp(robot, pose, config.arm.pregrasp_height,
                                               config.arm.grasp_height);

  const fs::path dir = output_dir(a.common, "demo_grasp");
  fs::create_directories(dir);
  std::string csv = "# robokit grasp schema " + std::to_string(bench::kReportSchemaVersion) +
                    " seed " + std::to_string(a.common.seed) + "\n";
  csv += "u_px,v_px,angle_rad,depth_m,x_m,y_m,z_m,roll_rad,reached\n";
  csv += exact_number(a.grasp.u) + "," + exact_number(a.grasp.v) + "," +
         exact_number(a.grasp.angle) + "," + exact_number(a.grasp.depth) + "," +
         vec3(pose.position) + "," + exact_number(pose.roll) + "," + (m.reached ? "1" : "0") +
         "\n";
  bench::write_text_file(dir / "grasp.csv", csv);
  std::ostringstream summary;
  summary << "grasp point (m) " << vec3(pose.position) << ", roll (rad) "
          << exact_number(pose.roll) << "\n";
  summary << motion_lines(m);
  bench::write_text_file(dir / "summary.txt", summary.str());
  finish(out, summary.str(), dir);
  if (!m.reached) throw RuntimeFailure("IK abort: " + m.message);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"robokit: simulated robot benchmarks, tracking, planning and skill demos"};
  app.name("robokit");
  app.require_subcommand(1);

  auto* bench_cmd = app.add_subcommand("bench", "Benchmarks (base accuracy, arm repeatability)");
  bench_cmd->require_subcommand(1);

  BenchBaseArgs bb;
  auto* bench_base = bench_cmd->add_subcommand(
      "base", "Base position accuracy over the standard target set; errors in mm and deg");
  add_common(bench_base, bb.common);
  bench_base->add_option("--controller", bb.controller, "Controller: lqr, prop, dwa or all")
      ->check(CLI::IsMember({"lqr", "prop", "proportional", "dwa", "all"}))
      ->capture_default_str();
  bench_base->add_option("--trials", bb.trials, "Trials per target (count)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench_base->add_option("--threads", bb.threads, "Worker threads (count)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_noise(bench_base, bb.noise);

  BenchArmArgs ba;
  auto* bench_arm = bench_cmd->add_subcommand(
      "arm", "Arm position repeatability (ISO 9283 RP, mm) at the grid poses and home");
  add_common(bench_arm, ba.common);
  bench_arm->add_option("--reps", ba.reps, "Repetitions per pose (count)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench_arm->add_option("--sigma-mm", ba.sigma_mm,
                        "Override per-axis settle noise: three std values X Y Z in mm")
      ->expected(3)
      ->delimiter(',');

  TrackArgs tr;
  auto* track = app.add_subcommand("track", "Trajectory tracking; cross-track error in mm");
  add_common(track, tr.common);
  track->add_option("--shape", tr.shape, "Reference: circle or file")
      ->check(CLI::IsMember({"circle", "file"}))
      ->capture_default_str();
  track->add_option("--radius", tr.radius, "Circle radius (m)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  track->add_option("--file", tr.file, "Trajectory CSV for --shape file (m, rad, m/s, rad/s)");
  track->add_option("--controller", tr.controller, "Controller: lqr or prop")
      ->check(CLI::IsMember({"lqr", "prop", "proportional"}))
      ->capture_default_str();
  add_noise(track, tr.noise);

  PlanArgs pl;
  auto* plan = app.add_subcommand("plan", "Global A* plan on an occupancy grid");
  add_common(plan, pl.common);
  plan->add_option("--map", pl.map, "Grid file path or bundled map name (e.g. walls.grid)")
      ->required();
  plan->add_option("--start", pl.start, "Start pose X,Y,THETA (m, m, rad)")->required();
  plan->add_option("--goal", pl.goal, "Goal pose X,Y,THETA (m, m, rad)")->required();
  plan->add_option("--inflation", pl.inflation, "Obstacle inflation radius (m)")
      ->capture_default_str();

  auto* demo = app.add_subcommand("demo", "Skill demos in simulation");
  demo->require_subcommand(1);

  PushArgs pu;
  auto* demo_push = demo->add_subcommand("push", "Perceive a scene and push one object");
  add_common(demo_push, pu.common);
  demo_push->add_option("--scene", pu.scene, "Scene YAML path or bundled scene name")
      ->capture_default_str();

  GraspArgs gr;
  auto* demo_grasp =
      demo->add_subcommand("grasp", "Back-project an image-space grasp and execute it");
  add_common(demo_grasp, gr.common);
  demo_grasp->add_option("--u", gr.grasp.u, "Pixel column (px)")->required();
  demo_grasp->add_option("--v", gr.grasp.v, "Pixel row (px)")->required();
  demo_grasp->add_option("--angle", gr.grasp.angle, "Grasp angle in the image plane (rad)")
      ->capture_default_str();
  demo_grasp->add_option("--depth", gr.grasp.depth, "Depth along the optical axis (m)")
      ->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kValidationFailure;
  }

  try {
    if (bench_base->parsed()) run_bench_base(bb, out);
    else if (bench_arm->parsed()) run_bench_arm(ba, out);
    else if (track->parsed()) run_track(tr, out);
    else if (plan->parsed()) return run_plan(pl, out, err);
    else if (demo_push->parsed()) run_demo_push(pu, out);
    else if (demo_grasp->parsed()) run_demo_grasp(gr, out);
    return kOk;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kValidationFailure;
  } catch (const CapabilityError& e) {
    err << "error: " << e.what() << "\n";
    return kValidationFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kRuntimeFailure;
  }
}

}  // namespace robokit::cli

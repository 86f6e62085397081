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
#include "robokit/sim/backend.hpp"

#include "robokit/errors.hpp"

namespace robokit {

std::string_view to_string(Subsystem s) {
  switch (s) {
    case Subsystem::kArm: return "arm";
    case Subsystem::kBase: return "base";
    case Subsystem::kCamera: return "camera";
    case Subsystem::kGripper: return "gripper";
  }
  return "unknown";
}

bool Backend::provides(Subsystem s) {
  switch (s) {
    case Subsystem::kArm: return arm() != nullptr;
    case Subsystem::kBase: return base() != nullptr;
    case Subsystem::kCamera: return camera() != nullptr;
    case Subsystem::kGripper: return gripper() != nullptr;
  }
  return false;
}

}  // namespace robokit

namespace robokit::sim {

class SimBackend::Arm : public ArmInterface {
 public:
  Arm(const ArmConfig& cfg, std::uint64_t seed)
      : chain_(cfg.chain), noise_(cfg.noise), dt_(cfg.sim_dt),
        rng_(derive_seed(seed, "arm")) {
    state_.q = JointVector::Zero(static_cast<Eigen::Index>(chain_.dof()));
    state_.target = state_.q;
  }
  const KinematicChain& chain() const override { return chain_; }
  JointVector joint_positions() const override { return state_.q; }
  double move_to(const JointVector& q) override {
    chain_.check(q);
    const double start = state_.time;
    state_.settled = false;
    do {
      state_ = step_arm(chain_, state_, q, dt_, noise_, rng_);
    } while (!state_.settled);
    return state_.time - start;
  }
  SE3Pose measured_ee_pose() const override {
    return forward_kinematics(chain_, state_.q);
  }

 private:
  KinematicChain chain_;
  ArmNoiseModel noise_;
  double dt_;
  RngStream rng_;
  ArmSimState state_;
};

class SimBackend::Base : public BaseInterface {
 public:
  Base(const BaseConfig& cfg, std::uint64_t seed)
      : limits_(cfg.limits), dt_(cfg.dt), noise_([&] {
          BaseNoiseModel m = cfg.noise;
          m.seed = seed;
          return m;
        }()) {}
  double control_period() const override { return dt_; }
  const BaseLimits& limits() const override { return limits_; }
  Pose2D odometry() const override { return state_.odom_pose; }
  Pose2D measured_pose() const override { return state_.true_pose; }
  ControlCommand velocity() const override { return state_.velocity; }
  double time() const override { return state_.time; }
  ControlCommand step(const ControlCommand& cmd) override {
    state_ = step_base(state_, cmd, dt_, limits_, noise_);
    return state_.velocity;
  }
  const DiffDriveSimState& state() const { return state_; }
  const BaseNoiseSource& noise() const { return noise_; }

 private:
  BaseLimits limits_;
  double dt_;
  BaseNoiseSource noise_;
  DiffDriveSimState state_;
};

class SimBackend::Camera : public CameraInterface {
 public:
  Camera(const CameraConfig& cfg, std::uint64_t seed, Scene scene)
      : cfg_(cfg), pan_(cfg.mount.pan), tilt_(cfg.mount.tilt),
        seed_(derive_seed(seed, "camera")), scene_(std::move(scene)) {}
  const CameraIntrinsics& intrinsics() const override { return cfg_.intrinsics; }
  SE3Pose pose() const override {
    const Eigen::Vector3d position =
        scene_.camera ? scene_.camera->position : cfg_.mount.position;
    return camera_pose(position, pan_, tilt_);
  }
  void set_pan_tilt(double pan, double tilt) override {
    pan_ = pan;
    tilt_ = tilt;
  }
  double pan() const override { return pan_; }
  double tilt() const override { return tilt_; }
  PointCloud point_cloud() override {
    RenderParams params;
    params.density = cfg_.density;
    params.depth_sigma = cfg_.depth_sigma;
    params.seed = derive_seed(seed_, captures_++);
    return render_point_cloud(scene_, pose(), cfg_.intrinsics, params);
  }
  void set_scene(Scene scene) {
    scene_ = std::move(scene);
    if (scene_.camera) set_pan_tilt(scene_.camera->pan, scene_.camera->tilt);
  }
  const Scene& scene() const { return scene_; }

 private:
  CameraConfig cfg_;
  double pan_;
  double tilt_;
  std::uint64_t seed_;
  std::uint64_t captures_ = 0;
  Scene scene_;
};

class SimBackend::Gripper : public GripperInterface {
 public:
  void open() override { closed_ = false; }
  void close() override { closed_ = true; }
  bool is_closed() const override { return closed_; }

 private:
  bool closed_ = false;
};

SimBackend::SimBackend(const RobotConfig& config, std::uint64_t seed,
                       SimCapabilities caps, Scene scene) {
  if (caps.arm) {
    if (config.arm.chain.empty()) {
      throw CapabilityError("arm", "config has no arm chain to simulate");
    }
    arm_ = std::make_unique<Arm>(config.arm, seed);
  }
  if (caps.base) base_ = std::make_unique<Base>(config.base, seed);
  if (caps.camera) {
    camera_ = std::make_unique<Camera>(config.camera, seed, Scene{});
    camera_->set_scene(std::move(scene));
  }
  if (caps.gripper) gripper_ = std::make_unique<Gripper>();
}

SimBackend::~SimBackend() = default;

ArmInterface* SimBackend::arm() { return arm_.get(); }
BaseInterface* SimBackend::base() { return base_.get(); }
CameraInterface* SimBackend::camera() { return camera_.get(); }
GripperInterface* SimBackend::gripper() { return gripper_.get(); }

void SimBackend::set_scene(Scene scene) {
  if (!camera_) throw CapabilityError("camera", "simulator built without a camera");
  camera_->set_scene(std::move(scene));
}

const Scene& SimBackend::scene() const {
  if (!camera_) throw CapabilityError("camera", "simulator built without a camera");
  return camera_->scene();
}

const DiffDriveSimState& SimBackend::base_state() const {
  if (!base_) throw CapabilityError("base", "simulator built without a base");
  return base_->state();
}

const BaseNoiseSource& SimBackend::base_noise() const {
  if (!base_) throw CapabilityError("base", "simulator built without a base");
  return base_->noise();
}

std::shared_ptr<SimBackend> make_sim_backend(const RobotConfig& config,
                                             std::uint64_t seed, SimCapabilities caps) {
  return std::make_shared<SimBackend>(config, seed, caps);
}

}  // namespace robokit::sim

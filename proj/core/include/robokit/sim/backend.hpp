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
#include <memory>
#include <optional>

#include "robokit/backend.hpp"
#include "robokit/config.hpp"
#include "robokit/sim/arm.hpp"
#include "robokit/sim/diff_drive.hpp"
#include "robokit/sim/scene.hpp"

namespace robokit::sim {

struct SimCapabilities {
  bool arm = true;
  bool base = true;
  bool camera = true;
  bool gripper = true;

  static SimCapabilities full() { return {}; }
  /// A manipulator bench: arm and gripper, no base or camera.
  static SimCapabilities arm_only() { return {true, false, false, true}; }
};

/// In-process simulator implementing every subsystem. Each instance owns
/// its random streams, derived from one seed; identical seeds and command
/// sequences give bitwise-identical traces.
class SimBackend : public Backend {
 public:
  SimBackend(const RobotConfig& config, std::uint64_t seed,
             SimCapabilities caps = SimCapabilities::full(), Scene scene = {});
  ~SimBackend() override;

  std::string id() const override { return "sim"; }
  ArmInterface* arm() override;
  BaseInterface* base() override;
  CameraInterface* camera() override;
  GripperInterface* gripper() override;

  void set_scene(Scene scene);
  const Scene& scene() const;

  /// Full simulator state of the base, for tests and benchmarks.
  const DiffDriveSimState& base_state() const;
  const BaseNoiseSource& base_noise() const;

 private:
  class Arm;
  class Base;
  class Camera;
  class Gripper;
  std::unique_ptr<Arm> arm_;
  std::unique_ptr<Base> base_;
  std::unique_ptr<Camera> camera_;
  std::unique_ptr<Gripper> gripper_;
};

std::shared_ptr<SimBackend> make_sim_backend(
    const RobotConfig& config, std::uint64_t seed,
    SimCapabilities caps = SimCapabilities::full());

}  // namespace robokit::sim

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
#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <numbers>
#include <random>

#include "robokit/camera.hpp"
#include "robokit/errors.hpp"
#include "robokit/point_cloud.hpp"
#include "robokit/sim/scene.hpp"

namespace robokit {
namespace {

TEST(Camera, BackprojectInvertsProject) {
  const CameraIntrinsics k;
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> u(0.0, 640.0), v(0.0, 480.0), d(0.2, 3.0);
  for (int i = 0; i < 100; ++i) {
    const double uu = u(rng), vv = v(rng), dd = d(rng);
    const Eigen::Vector3d p = backproject(k, uu, vv, dd);
    EXPECT_NEAR(p.z(), dd, 1e-15);
    const auto uv = project(k, p);
    ASSERT_TRUE(uv);
    EXPECT_NEAR(uv->x(), uu, 1e-9);
    EXPECT_NEAR(uv->y(), vv, 1e-9);
  }
  EXPECT_FALSE(project(k, {0.0, 0.0, -1.0}));
}

TEST(Camera, PrincipalPointLooksAlongTiltedAxis) {
  const double tilt = 0.7;
  const SE3Pose cam = camera_pose({0.0, 0.0, 0.6}, 0.0, tilt);
  const Eigen::Vector3d hit = cam * backproject(CameraIntrinsics{}, 320.0, 240.0, 1.0);
  EXPECT_NEAR(hit.x(), std::cos(tilt), 1e-12);
  EXPECT_NEAR(hit.y(), 0.0, 1e-12);
  EXPECT_NEAR(hit.z(), 0.6 - std::sin(tilt), 1e-12);
  // Image right maps to base -y when the camera looks along +x.
  const Eigen::Vector3d right = cam * backproject(CameraIntrinsics{}, 400.0, 240.0, 1.0);
  EXPECT_LT(right.y(), 0.0);
}

TEST(Camera, IntrinsicsValidation) {
  CameraIntrinsics k;
  k.fx = 0.0;
  EXPECT_THROW(k.validate(), ValidationError);
}

sim::Scene cube_scene() {
  sim::SceneObject cube;
  cube.pose = SE3Pose::from_translation({0.5, 0.0, 0.03});
  cube.dimensions = Eigen::Vector3d::Constant(0.06);
  sim::Scene scene;
  scene.objects = {cube};
  return scene;
}

TEST(Render, PointsLieOnSurfacesInsideFrustum) {
  const sim::Scene scene = cube_scene();
  const CameraIntrinsics k;
  const SE3Pose cam = camera_pose({0.0, 0.0, 0.6}, 0.0, 0.7);
  const PointCloud cloud = sim::render_point_cloud(scene, cam, k, {10000.0, 0.0, 1});
  ASSERT_FALSE(cloud.empty());
  int objects = 0;
  for (const auto& pt : cloud) {
    const auto uv = project(k, cam.inverse() * pt.p);
    ASSERT_TRUE(uv);
    EXPECT_TRUE(in_image(k, *uv));
    if (pt.tag == PointTag::kFloor) {
      EXPECT_NEAR(pt.p.z(), 0.0, 1e-12);
      EXPECT_LE(std::hypot(pt.p.x(), pt.p.y()), scene.floor_radius + 1e-12);
    } else {
      ++objects;
      const Eigen::Vector3d local = pt.p - Eigen::Vector3d(0.5, 0.0, 0.03);
      EXPECT_NEAR(local.cwiseAbs().maxCoeff(), 0.03, 1e-9);
      EXPECT_GT(local.x(), -0.03 - 1e-9);  // back face is hidden from the camera
    }
  }
  EXPECT_GT(objects, 30);
}

TEST(Render, FloorBehindCubeIsOccluded) {
  const sim::Scene scene = cube_scene();
  const SE3Pose cam = camera_pose({0.0, 0.0, 0.6}, 0.0, 0.7);
  const PointCloud cloud =
      sim::render_point_cloud(scene, cam, CameraIntrinsics{}, {20000.0, 0.0, 1});
  const Eigen::Vector3d eye = cam.translation();
  const auto& cube = scene.objects.front();
  for (const auto& pt : cloud) {
    if (pt.tag != PointTag::kFloor) continue;
    const Eigen::Vector3d dir = pt.p - eye;
    const auto hit = cube.intersect(eye, dir.normalized());
    if (hit) EXPECT_GE(*hit, dir.norm() - 1e-9);
  }
}

TEST(Render, DeterministicPerSeedAndNoiseAlongRay) {
  const sim::Scene scene = cube_scene();
  const SE3Pose cam = camera_pose({0.0, 0.0, 0.6}, 0.0, 0.7);
  const auto a = sim::render_point_cloud(scene, cam, CameraIntrinsics{}, {5000.0, 0.002, 3});
  const auto b = sim::render_point_cloud(scene, cam, CameraIntrinsics{}, {5000.0, 0.002, 3});
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].p, b[i].p);
}

TEST(SceneFile, ParsesObjectsAndRejectsUnknownKeys) {
  const sim::Scene s = sim::parse_scene(
      "schema_version: 1\n"
      "floor_radius: 2.0\n"
      "objects:\n"
      "  - {shape: box, size: [0.1, 0.2, 0.3], position: [1, 0, 0.15], yaw: 0.5}\n"
      "  - {shape: cylinder, radius: 0.04, height: 0.1, position: [0, 1, 0.05]}\n");
  ASSERT_EQ(s.objects.size(), 2u);
  EXPECT_EQ(s.floor_radius, 2.0);
  EXPECT_EQ(s.objects[1].shape, sim::Shape::kCylinder);
  EXPECT_THROW(sim::parse_scene("objects:\n  - {shape: box, colour: red}\n"), ValidationError);
  EXPECT_THROW(sim::parse_scene("objects: [\n"), ConfigParseError);
}

TEST(Xyz, RoundTripsExactly) {
  PointCloud cloud = {{{0.1, -0.2, 1.0 / 3.0}, PointTag::kObject},
                      {{1e-9, 2.5, 0.0}, PointTag::kFloor},
                      {{-7.0, 0.0, 3.25}, PointTag::kNone}};
  const auto path = std::filesystem::temp_directory_path() / "robokit_cloud.xyz";
  save_xyz(cloud, path.string());
  const PointCloud back = load_xyz(path.string());
  std::filesystem::remove(path);
  ASSERT_EQ(back.size(), cloud.size());
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    EXPECT_EQ(back[i].p, cloud[i].p);
    EXPECT_EQ(back[i].tag, cloud[i].tag);
  }
}

}  // namespace
}  // namespace robokit

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
#include "robokit/kinematics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <Eigen/Dense>

#include "robokit/errors.hpp"

namespace robokit {

KinematicChain::KinematicChain(std::vector<RevoluteJoint> joints,
                               SE3Pose ee_transform)
    : joints_(std::move(joints)), ee_transform_(ee_transform) {
  for (const auto& j : joints_) {
    if (std::abs(j.axis.norm() - 1.0) > 1e-9) {
      throw ValidationError(j.name + ".axis", "rotation axis must be unit norm");
    }
    if (!(j.lower < j.upper)) {
      throw ValidationError(j.name + ".limits", "lower limit must be below upper");
    }
    if (!(j.max_velocity > 0.0)) {
      throw ValidationError(j.name + ".max_velocity", "must be positive");
    }
  }
}

JointVector KinematicChain::lower_limits() const {
  JointVector v(dof());
  for (std::size_t i = 0; i < dof(); ++i) v[i] = joints_[i].lower;
  return v;
}

JointVector KinematicChain::upper_limits() const {
  JointVector v(dof());
  for (std::size_t i = 0; i < dof(); ++i) v[i] = joints_[i].upper;
  return v;
}

void KinematicChain::check_dimension(const JointVector& q) const {
  if (static_cast<std::size_t>(q.size()) != dof()) {
    throw DimensionError(dof(), static_cast<std::size_t>(q.size()));
  }
}

void KinematicChain::check(const JointVector& q) const {
  check_dimension(q);
  for (std::size_t i = 0; i < dof(); ++i) {
    const auto& j = joints_[i];
    if (!(q[i] >= j.lower && q[i] <= j.upper)) {
      throw JointLimitError(j.name, "position " + std::to_string(q[i]) +
                                        " outside [" + std::to_string(j.lower) +
                                        ", " + std::to_string(j.upper) + "]");
    }
  }
}

bool KinematicChain::within_limits(const JointVector& q) const {
  if (static_cast<std::size_t>(q.size()) != dof()) return false;
  for (std::size_t i = 0; i < dof(); ++i) {
    if (q[i] < joints_[i].lower || q[i] > joints_[i].upper) return false;
  }
  return true;
}

JointVector KinematicChain::clamp_to_limits(const JointVector& q) const {
  JointVector out = q;
  for (std::size_t i = 0; i < dof(); ++i) {
    out[i] = std::clamp(out[i], joints_[i].lower, joints_[i].upper);
  }
  return out;
}

std::vector<SE3Pose> joint_frames(const KinematicChain& chain,
                                  const JointVector& q) {
  chain.check_dimension(q);
  std::vector<SE3Pose> frames;
  frames.reserve(chain.dof() + 1);
  SE3Pose t;
  for (std::size_t i = 0; i < chain.dof(); ++i) {
    const auto& j = chain.joints()[i];
    t = t * j.parent_transform * SE3Pose::from_axis_angle(j.axis, q[i]);
    frames.push_back(t);
  }
  frames.push_back(t * chain.ee_transform());
  return frames;
}

SE3Pose forward_kinematics(const KinematicChain& chain, const JointVector& q) {
  return joint_frames(chain, q).back();
}

Jacobian jacobian(const KinematicChain& chain, const JointVector& q) {
  const auto frames = joint_frames(chain, q);
  const Eigen::Vector3d p_ee = frames.back().translation();
  Jacobian jac(6, static_cast<Eigen::Index>(chain.dof()));
  for (std::size_t i = 0; i < chain.dof(); ++i) {
    const Eigen::Vector3d z = frames[i].rotation() * chain.joints()[i].axis;
    const Eigen::Vector3d p = frames[i].translation();
    jac.block<3, 1>(0, static_cast<Eigen::Index>(i)) = z.cross(p_ee - p);
    jac.block<3, 1>(3, static_cast<Eigen::Index>(i)) = z;
  }
  return jac;
}

namespace {

struct Residual {
  Eigen::Matrix<double, 6, 1> error;
  double position = 0.0;
  double orientation = 0.0;
};

Residual residual(const SE3Pose& current, const SE3Pose& target,
                  bool position_only) {
  Residual r;
  r.error.head<3>() = target.translation() - current.translation();
  r.error.tail<3>() = position_only
                          ? Eigen::Vector3d::Zero()
                          : rotation_error(current.rotation(), target.rotation());
  r.position = r.error.head<3>().norm();
  r.orientation = r.error.tail<3>().norm();
  return r;
}

// Out-of-range angles are first shifted by whole turns, then clamped.
JointVector project_to_limits(const KinematicChain& chain, JointVector q) {
  constexpr double kTurn = 2.0 * std::numbers::pi;
  for (std::size_t i = 0; i < chain.dof(); ++i) {
    const auto& j = chain.joints()[i];
    double& a = q[static_cast<Eigen::Index>(i)];
    if (a > j.upper && a - kTurn >= j.lower) a -= kTurn;
    if (a < j.lower && a + kTurn <= j.upper) a += kTurn;
  }
  return chain.clamp_to_limits(q);
}

bool within(const Residual& r, const IkParams& p) {
  return r.position <= p.position_tolerance &&
         r.orientation <= p.orientation_tolerance;
}

// One damped least-squares descent from `q`. Returns true on convergence;
// `q`, `iterations` and `last` are updated in place.
bool descend(const KinematicChain& chain, const SE3Pose& target,
             const IkParams& params, JointVector& q, int& iterations,
             Residual& last) {
  const int rows = params.position_only ? 3 : 6;
  const double lambda2 = params.damping * params.damping;
  last = residual(forward_kinematics(chain, q), target, params.position_only);
  for (int it = 0; it < params.max_iterations; ++it) {
    if (within(last, params)) return true;
    const Jacobian full = jacobian(chain, q);
    const Eigen::MatrixXd jac = full.topRows(rows);
    const Eigen::VectorXd e = last.error.head(rows);
    const Eigen::MatrixXd jjt =
        jac * jac.transpose() + lambda2 * Eigen::MatrixXd::Identity(rows, rows);
    Eigen::VectorXd dq = jac.transpose() * jjt.ldlt().solve(e);
    const double biggest = dq.cwiseAbs().maxCoeff();
    if (biggest > params.max_step) dq *= params.max_step / biggest;
    q = project_to_limits(chain, q + dq);
    ++iterations;
    last = residual(forward_kinematics(chain, q), target, params.position_only);
  }
  return within(last, params);
}

}  // namespace

IkResult inverse_kinematics(const KinematicChain& chain, const SE3Pose& target,
                            const JointVector& seed, const IkParams& params) {
  chain.check(seed);
  IkResult result;
  JointVector q = seed;
  Residual last;
  bool ok = descend(chain, target, params, q, result.iterations, last);

  std::mt19937_64 rng(params.restart_seed);
  for (int r = 0; !ok && r < params.restarts; ++r) {
    JointVector reseed(chain.dof());
    for (std::size_t i = 0; i < chain.dof(); ++i) {
      const auto& j = chain.joints()[i];
      reseed[i] = std::uniform_real_distribution<double>(j.lower, j.upper)(rng);
    }
    JointVector candidate = reseed;
    Residual cand_res;
    const bool cand_ok =
        descend(chain, target, params, candidate, result.iterations, cand_res);
    if (cand_ok || cand_res.position + cand_res.orientation <
                       last.position + last.orientation) {
      q = candidate;
      last = cand_res;
      ok = cand_ok;
    }
  }

  result.converged = ok;
  result.q = q;
  result.position_residual = last.position;
  result.orientation_residual = last.orientation;
  return result;
}

SE3Pose pitch_roll_target(const KinematicChain& chain,
                          const Eigen::Vector3d& position, double pitch,
                          double roll) {
  Eigen::Vector2d axis_xy = Eigen::Vector2d::Zero();
  if (!chain.empty()) {
    axis_xy = chain.joints().front().parent_transform.translation().head<2>();
  }
  const double yaw =
      std::atan2(position.y() - axis_xy.y(), position.x() - axis_xy.x());
  return SE3Pose::from_xyz_ypr(position, yaw, pitch, roll);
}

}  // namespace robokit

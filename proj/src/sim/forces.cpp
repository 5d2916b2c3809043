// Copyright (c) 2026 tetherhop contributors
// SPDX-License-Identifier: Apache-2.0

#include "tetherhop/sim/forces.hpp"

#include <cmath>
#include <stdexcept>

namespace tetherhop::sim {

Eigen::Vector3d gravity_accel(const WorldParams& world) {
  return {0.0, -world.g * std::sin(world.slope_theta),
          -world.g * std::cos(world.slope_theta)};
}

Eigen::Matrix3d yaw_rotation(double phi) {
  const double c = std::cos(phi);
  const double s = std::sin(phi);
  Eigen::Matrix3d rot;
  rot << c, -s, 0.0, s, c, 0.0, 0.0, 0.0, 1.0;
  return rot;
}

Eigen::Vector3d attachment_world(const Eigen::Vector3d& payload_pos,
                                 double payload_yaw,
                                 const Eigen::Vector2d& attach_pt) {
  const Eigen::Vector3d p(attach_pt.x(), attach_pt.y(), 0.0);
  return payload_pos + yaw_rotation(payload_yaw) * p;
}

Eigen::Vector3d attachment_velocity(const Eigen::Vector3d& payload_vel,
                                    double payload_yaw, double yaw_rate,
                                    const Eigen::Vector2d& attach_pt) {
  const Eigen::Vector3d arm =
      yaw_rotation(payload_yaw) * Eigen::Vector3d(attach_pt.x(), attach_pt.y(), 0.0);
  return payload_vel + yaw_rate * Eigen::Vector3d::UnitZ().cross(arm);
}

Eigen::Vector3d tether_force(const Eigen::Vector3d& robot_pos,
                             const Eigen::Vector3d& robot_vel,
                             const Eigen::Vector3d& payload_pos,
                             const Eigen::Vector3d& payload_vel,
                             double payload_yaw, double yaw_rate,
                             const Eigen::Vector2d& attach_pt,
                             const TetherSpec& spec) {
  const Eigen::Vector3d l =
      attachment_world(payload_pos, payload_yaw, attach_pt) - robot_pos;
  const double len = l.norm();
  if (len <= spec.l_0 || len == 0.0) return Eigen::Vector3d::Zero();

  const Eigen::Vector3d u = l / len;
  const Eigen::Vector3d l_rate =
      attachment_velocity(payload_vel, payload_yaw, yaw_rate, attach_pt) -
      robot_vel;
  const double v_l = u.dot(l_rate);
  const double tension =
      std::max(0.0, spec.k_t * (len - spec.l_0) + spec.c_t * v_l);
  return tension * u;
}

double contact_force(double penetration_delta, double delta_rate,
                     const WorldParams& world) {
  if (penetration_delta < 0.0)
    throw std::invalid_argument("contact_force: negative penetration");
  if (penetration_delta == 0.0) return 0.0;
  const double f = world.k_c * std::pow(penetration_delta, world.contact_exp_n) +
                   world.c_c * delta_rate;
  return std::max(0.0, f);
}

Eigen::Vector3d friction_force(const Eigen::Vector3d& payload_vel,
                               const WorldParams& world) {
  return -world.mu_v * payload_vel;
}

}  // namespace tetherhop::sim

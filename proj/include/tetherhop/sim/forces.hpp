// Copyright (c) 2026 tetherhop contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

#include "tetherhop/sim/types.hpp"

namespace tetherhop::sim {

/// Gravitational acceleration in the incline frame:
/// [0, -g sin(theta), -g cos(theta)].
Eigen::Vector3d gravity_accel(const WorldParams& world);

/// Body-to-incline yaw rotation about the plane normal, embedded in 3D.
Eigen::Matrix3d yaw_rotation(double phi);

/// World position of a body-frame attachment point (z component zero).
Eigen::Vector3d attachment_world(const Eigen::Vector3d& payload_pos,
                                 double payload_yaw,
                                 const Eigen::Vector2d& attach_pt);

/// Velocity of an attachment point carried by the translating, yawing
/// payload.
Eigen::Vector3d attachment_velocity(const Eigen::Vector3d& payload_vel,
                                    double payload_yaw, double yaw_rate,
                                    const Eigen::Vector2d& attach_pt);

/// Kelvin-Voigt tether tension acting on the robot. Zero when slack
/// (|l| <= l_0) or degenerate (|l| == 0); clamped so the tether never
/// pushes. The payload receives the exact negation at the attachment.
Eigen::Vector3d tether_force(const Eigen::Vector3d& robot_pos,
                             const Eigen::Vector3d& robot_vel,
                             const Eigen::Vector3d& payload_pos,
                             const Eigen::Vector3d& payload_vel,
                             double payload_yaw, double yaw_rate,
                             const Eigen::Vector2d& attach_pt,
                             const TetherSpec& spec);

/// Hertz normal contact magnitude k_c d^n + c_c d_rate, clamped >= 0 so
/// the surface never pulls. Throws on negative penetration.
double contact_force(double penetration_delta, double delta_rate,
                     const WorldParams& world);

/// Viscous surface friction on the payload: -mu_v V.
Eigen::Vector3d friction_force(const Eigen::Vector3d& payload_vel,
                               const WorldParams& world);

}  // namespace tetherhop::sim

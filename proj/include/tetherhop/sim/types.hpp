// Copyright (c) 2026 tetherhop contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace tetherhop::sim {

/// Incline-frame convention used throughout: z is the plane normal,
/// -y points downslope, x is cross-slope.
struct WorldParams {
  double g = 9.81;             ///< gravitational acceleration [m/s^2]
  double slope_theta = 0.0;    ///< incline angle [rad], 0 <= theta < pi/2
  double mu_v = 0.0;           ///< viscous friction coefficient [N s/m]
  double k_c = 0.0;            ///< contact stiffness [N/m^n]
  double c_c = 0.0;            ///< contact damping [N s/m]
  double contact_exp_n = 1.5;  ///< contact exponent (3/2 for Hertz)

  void validate() const;
};

struct RobotSpec {
  double m_r = 1.0;         ///< mass [kg]
  double radius_rho = 0.1;  ///< collision radius [m]
  double f_load = 0.0;      ///< aggregate grip capacity [N]
  double sigmoid_k = 15.0;  ///< grip sigmoid steepness [1/N]
  double t_max = 1.0;       ///< maximum thrust magnitude [N]
  double fuel_budget = 0.0; ///< total thrust-impulse budget [N s]

  void validate() const;
};

struct PayloadSpec {
  double M = 1.0;           ///< mass [kg]
  double I_z = 1.0;         ///< yaw moment of inertia [kg m^2]
  double disk_radius = 1.0; ///< payload disk radius [m]
  double k_r = 0.5;         ///< yaw restoring stiffness [N m/rad]
  double c_r = 0.5;         ///< yaw restoring damping [N m s/rad]
  /// Body-frame 2D tether attachment points; each must lie on the disk
  /// perimeter (|p| == disk_radius within 1e-3 relative tolerance).
  std::vector<Eigen::Vector2d> attachments;

  void validate() const;
};

struct TetherSpec {
  double k_t = 0.0; ///< stiffness [N/m]
  double c_t = 0.0; ///< damping [N s/m]
  double l_0 = 1.0; ///< rest length [m]

  void validate() const;
};

/// Full kinematic/dynamic state of N robots plus the payload.
struct SystemState {
  double t = 0.0;
  std::vector<Eigen::Vector3d> r; ///< robot positions, incline frame [m]
  std::vector<Eigen::Vector3d> v; ///< robot velocities [m/s]
  Eigen::Vector3d R = Eigen::Vector3d::Zero(); ///< payload position [m]
  Eigen::Vector3d V = Eigen::Vector3d::Zero(); ///< payload velocity [m/s]
  double phi = 0.0;      ///< payload yaw [rad]
  double phi_dot = 0.0;  ///< yaw rate [rad/s]
  std::vector<std::uint8_t> gripped; ///< per-robot grip flags
  std::vector<double> fuel_used;     ///< consumed thrust impulse [N s]

  int robot_count() const { return static_cast<int>(r.size()); }
  void validate() const;
};

enum class SimEventType { Slip, FuelExhausted };

struct SimEvent {
  double t = 0.0;
  int robot = -1;
  SimEventType type = SimEventType::Slip;
  double detail = 0.0; ///< demanded load for slips, requested |T| for fuel
};

const char* to_string(SimEventType type);

/// One fixed-interval trajectory record: state snapshot plus the thrusts
/// that were applied over the step ending at this sample.
struct TrajectorySample {
  SystemState state;
  std::vector<Eigen::Vector3d> thrusts;
  double osc_angle = 0.0;
};

struct Trajectory {
  double sample_dt = 0.0; ///< spacing between samples [s]
  std::vector<TrajectorySample> samples;
  std::vector<SimEvent> events;
};

class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tetherhop::sim

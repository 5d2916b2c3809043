// Copyright (c) 2026 tetherhop contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include <Eigen/Core>

#include "tetherhop/sim/types.hpp"

namespace tetherhop::sim {

/// Everything static the stepper needs: world, one spec per robot, the
/// payload, and one tether spec per robot (attachment i pairs with robot i).
struct SimSpecs {
  WorldParams world;
  std::vector<RobotSpec> robots;
  PayloadSpec payload;
  std::vector<TetherSpec> tethers;

  int robot_count() const { return static_cast<int>(robots.size()); }
  void validate() const;
};

struct StepResult {
  SystemState state;
  std::vector<SimEvent> events;
  /// Sigmoid engagement force per robot (zero for ungripped robots).
  std::vector<double> grip_force_mag;
  /// Demanded load magnitude per gripped robot (tether + gravity + control).
  std::vector<double> grip_demand;
};

/// Advances the coupled system by one semi-implicit Euler step.
///
/// Robots with a set grip flag are held anchored (the microspines react
/// with whatever force the demanded load requires, up to capacity); a
/// gripped robot whose demanded load exceeds f_load slips: its flag
/// auto-clears, a slip event is recorded, and it integrates as free for
/// this step. Free robots feel tether + gravity + plane contact + thrust.
/// Thrust above t_max throws; thrust that would overrun the fuel budget
/// is coerced to zero and flagged.
StepResult step(const SystemState& state,
                const std::vector<Eigen::Vector3d>& thrusts,
                const std::vector<std::uint8_t>& grips, const SimSpecs& specs,
                double dt);

/// Unsigned angle between the -y incline axis and the CM->CG vector
/// projected onto the incline plane. Zero when CM and CG coincide.
double oscillation_angle(const SystemState& state);

/// Total mechanical energy: kinetic + gravitational + elastic tether +
/// yaw spring + contact spring terms, for the payload and all free robots.
/// Anchored robots contribute their (constant) potential only.
double mechanical_energy(const SystemState& state, const SimSpecs& specs);

}  // namespace tetherhop::sim

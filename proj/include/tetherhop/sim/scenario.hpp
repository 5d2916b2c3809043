// Copyright (c) 2026 tetherhop contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "tetherhop/sim/stepper.hpp"
#include "tetherhop/sim/types.hpp"

namespace tetherhop::sim {

/// Climb-controller settings: integration step, hop geometry and the
/// schedule timing knobs.
struct ControllerParams {
  double dt = 1e-3;          ///< integrator step [s]
  double hop_len = 1.0;      ///< per-hop displacement [m]
  int n_hops = 0;            ///< total hops in the schedule
  double settle_time = 1.0;  ///< gripped dwell after each landing [s]
  double tau_min = 0.2;      ///< flight-time search bounds [s]
  double tau_max = 1.0;
  int record_every = 10;     ///< trajectory sampling stride [steps]
  Eigen::Vector2d goal_dir{0.0, 1.0}; ///< in-plane hop direction

  void validate() const;
};

struct ScenarioSpec {
  SimSpecs specs;
  ControllerParams controller;
  Eigen::Vector3d payload_start = Eigen::Vector3d::Zero();
  double payload_yaw0 = 0.0;
  /// Explicit robot start positions; empty means nominal placement
  /// (radially outward from each attachment at tether rest length).
  std::vector<Eigen::Vector3d> robot_start;
  std::uint64_t master_seed = 0;

  void validate() const;
};

ScenarioSpec scenario_from_json(const nlohmann::json& j);
nlohmann::json scenario_to_json(const ScenarioSpec& scenario);
ScenarioSpec load_scenario(const std::string& path);

/// Builds the t = 0 state: robots at their start positions (explicit or
/// nominal radial), everyone gripped, all velocities zero.
SystemState initial_state(const ScenarioSpec& scenario);

}  // namespace tetherhop::sim

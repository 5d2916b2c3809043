// Copyright (c) 2026 tetherhop contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "tetherhop/gait/hop.hpp"
#include "tetherhop/sim/scenario.hpp"

namespace tetherhop::gait {

struct ClimbEntry {
  int robot = 0;
  HopSolution hop;
  Eigen::Vector3d target = Eigen::Vector3d::Zero();
  double dwell = 0.0; ///< gripped settle time after landing [s]
};

/// Strictly sequential hop plan: at most one robot is mid-hop at any
/// simulated instant; everyone else holds grip.
struct ClimbSchedule {
  std::vector<ClimbEntry> entries;
};

class ClimbInfeasible : public std::runtime_error {
 public:
  ClimbInfeasible(int robot, int hop_index, double min_required);
  int robot() const { return robot_; }
  int hop_index() const { return hop_index_; }
  double min_required_thrust() const { return min_required_; }

 private:
  int robot_;
  int hop_index_;
  double min_required_;
};

/// Round-robin schedule (lowest robot index first): each entry hops one
/// robot by hop_len along goal_dir from its planned rest position.
/// Throws ClimbInfeasible naming the robot and hop when any hop exceeds
/// t_max.
ClimbSchedule plan_climb_sequence(const sim::SystemState& state,
                                  const Eigen::Vector2d& goal_dir,
                                  double hop_len, int n_hops,
                                  const sim::SimSpecs& specs,
                                  const sim::ControllerParams& controller);

struct HopRecord {
  int robot = -1;
  Eigen::Vector3d target = Eigen::Vector3d::Zero();
  Eigen::Vector3d landed = Eigen::Vector3d::Zero();
  double landing_error = 0.0;
  bool tether_taut_in_flight = false;
};

struct EpisodeResult {
  sim::Trajectory trajectory;
  std::vector<HopRecord> hops;
  bool aborted = false;
  std::string abort_reason;

  const sim::SystemState& final_state() const;
};

/// Executes a schedule through the stepper: release grip, fly the constant
/// hop thrust for tau, re-grip on landing, dwell, repeat. Slip events and
/// landing errors are recorded; the episode aborts with a partial
/// trajectory if every robot loses grip at once.
EpisodeResult run_episode(const sim::ScenarioSpec& scenario,
                          const ClimbSchedule& schedule);

}  // namespace tetherhop::gait

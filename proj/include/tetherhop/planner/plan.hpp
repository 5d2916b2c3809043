// Copyright (c) 2026 tetherhop contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "tetherhop/planner/heightmap.hpp"

namespace tetherhop::planner {

using JointState = std::array<Eigen::Vector2d, 3>;

struct PlanProblem {
  JointState starts;
  JointState goals;
  double sep_p = 1.0;         ///< max allowed team separation p [m]
  double robot_radius = 0.1;  ///< [m]
  double payload_radius = 0.0;///< [m]
  double max_hop = 1.0;       ///< max per-robot edge length [m]
  double time_budget = 5.0;   ///< [s]

  void validate() const;
};

/// Per-robot waypoint sequences (equal length) plus the derived payload
/// (centroid) waypoints.
struct Path {
  std::array<std::vector<Eigen::Vector2d>, 3> robots;
  std::vector<Eigen::Vector2d> payload;

  std::size_t length() const { return robots[0].size(); }
  JointState waypoint(std::size_t k) const {
    return {robots[0][k], robots[1][k], robots[2][k]};
  }
};

/// The separation constraint exactly as formulated: |pos0 - pos1| < p/2
/// and |pos1 - pos2| < p/2 (pair (0,2) is bounded by the triangle
/// inequality, not checked directly).
bool separation_ok(const Eigen::Vector2d& pos0, const Eigen::Vector2d& pos1,
                   const Eigen::Vector2d& pos2, double sep_p);
bool separation_ok(const JointState& q, double sep_p);

struct PlanStats {
  long iterations = 0;
  int cells_created = 0;
  int tree_nodes = 0;
  int payload_rejections = 0;
  double seconds = 0.0;
};

enum class PlanStatus { Success, Timeout, Unreachable, InvalidEndpoints };

const char* to_string(PlanStatus status);

struct PlanResult {
  PlanStatus status = PlanStatus::Timeout;
  Path path;
  PlanStats stats;
  std::string message;
};

/// Bidirectional joint-space planner: tree growth guided by an
/// interior/exterior cell decomposition of the centroid projection,
/// constructive sampling inside the separation constraint, straight joint
/// edges of per-robot length <= max_hop, and lazy payload-sweep
/// validation with cell penalties on payload collisions. Deterministic
/// given (problem, mask, seed).
PlanResult plan(const PlanProblem& problem, const ObstacleMask& mask,
                std::uint64_t seed);

struct PayloadCheck {
  bool valid = true;
  int first_bad_segment = -1;
};

/// Sweeps a payload disk along the centroid waypoints against the mask;
/// reports the first colliding segment when invalid.
PayloadCheck validate_payload_path(const Path& path, const ObstacleMask& mask,
                                   double payload_radius);

std::vector<Eigen::Vector2d> payload_waypoints(const Path& path);

}  // namespace tetherhop::planner

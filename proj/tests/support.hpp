// Copyright (c) 2026 tetherhop contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>

#include "tetherhop/planner/heightmap.hpp"
#include "tetherhop/planner/plan.hpp"
#include "tetherhop/sim/scenario.hpp"

namespace tetherhop::testsupport {

/// 16 m x 16 m terrain at 0.25 m cells: two steep north-south ridges at
/// x = 4 and x = 12 with a gentle rising corridor up the middle.
inline planner::Heightmap two_ridge_map() {
  planner::Heightmap hm;
  hm.nx = 64;
  hm.ny = 64;
  hm.cell_size = 0.25;
  hm.origin = {0.0, 0.0};
  hm.heights.resize(64 * 64);
  const double amp = 3.0;
  const double width = 1.2;
  for (int iy = 0; iy < hm.ny; ++iy) {
    for (int ix = 0; ix < hm.nx; ++ix) {
      const double x = (ix + 0.5) * hm.cell_size;
      const double y = (iy + 0.5) * hm.cell_size;
      const double ridge1 = amp * std::exp(-std::pow(x - 4.0, 2) /
                                           (2.0 * width * width));
      const double ridge2 = amp * std::exp(-std::pow(x - 12.0, 2) /
                                           (2.0 * width * width));
      hm.at(ix, iy) = ridge1 + ridge2 + 0.05 * y;
    }
  }
  return hm;
}

inline planner::PlanProblem two_ridge_problem() {
  planner::PlanProblem problem;
  problem.starts = {Eigen::Vector2d(7.4, 1.0), Eigen::Vector2d(8.0, 1.2),
                    Eigen::Vector2d(8.6, 1.0)};
  problem.goals = {Eigen::Vector2d(7.4, 15.0), Eigen::Vector2d(8.0, 14.8),
                   Eigen::Vector2d(8.6, 15.0)};
  problem.sep_p = 3.0;
  problem.robot_radius = 0.3;
  problem.payload_radius = 0.8;
  problem.max_hop = 1.0;
  problem.time_budget = 5.0;
  return problem;
}

/// The slope-climb scenario: 15 deg incline, three 1 kg robots hauling a
/// 10 kg, 1 m disk with I_z = 5 via soft tethers, short full-thrust hops.
inline sim::ScenarioSpec climb_scenario(double start_y, double direction) {
  sim::ScenarioSpec sc;
  sc.specs.world.g = 9.81;
  sc.specs.world.slope_theta = 15.0 * M_PI / 180.0;
  sc.specs.world.mu_v = 2.0;
  sc.specs.world.k_c = 1e4;
  sc.specs.world.c_c = 50.0;
  sc.specs.payload.M = 10.0;
  sc.specs.payload.I_z = 5.0;
  sc.specs.payload.disk_radius = 1.0;
  sc.specs.payload.k_r = 0.5;
  sc.specs.payload.c_r = 0.5;
  for (double deg : {45.0, 90.0, 135.0}) {
    const double a = deg * M_PI / 180.0;
    sc.specs.payload.attachments.emplace_back(std::cos(a), std::sin(a));
  }
  sim::RobotSpec robot;
  robot.m_r = 1.0;
  robot.radius_rho = 0.1;
  robot.f_load = 300.0;
  robot.sigmoid_k = 15.0;
  robot.t_max = 70.0;
  robot.fuel_budget = 1e4;
  sc.specs.robots.assign(3, robot);
  sc.specs.tethers.assign(3, {20.0, 2.0, 1.5});
  sc.controller.dt = 1e-3;
  sc.controller.hop_len = 0.6;
  sc.controller.n_hops = 36;
  sc.controller.settle_time = 0.8;
  sc.controller.tau_min = 0.10;
  sc.controller.tau_max = 0.14;
  sc.controller.record_every = 10;
  sc.controller.goal_dir = {0.0, direction};
  sc.payload_start = {3.0, start_y, 0.0};
  for (const auto& p : sc.specs.payload.attachments) {
    const Eigen::Vector2d xy =
        sc.payload_start.head<2>() + p + p.normalized() * 1.3;
    sc.robot_start.push_back({xy.x(), xy.y(), 0.1});
  }
  return sc;
}

}  // namespace tetherhop::testsupport

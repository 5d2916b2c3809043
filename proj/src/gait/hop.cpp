// Copyright (c) 2026 tetherhop contributors
// SPDX-License-Identifier: Apache-2.0

#include "tetherhop/gait/hop.hpp"

#include <cmath>
#include <string>

namespace tetherhop::gait {

void HopProblem::validate() const {
  if (m_r <= 0.0) throw std::invalid_argument("HopProblem: m_r must be > 0");
  if (t_max <= 0.0) throw std::invalid_argument("HopProblem: t_max must be > 0");
  if (tau_min <= 0.0 || tau_max < tau_min)
    throw std::invalid_argument("HopProblem: require 0 < tau_min <= tau_max");
}

InfeasibleHop::InfeasibleHop(double min_required, double best_tau)
    : std::runtime_error("infeasible hop: requires thrust " +
                         std::to_string(min_required) + " N"),
      min_required_(min_required),
      best_tau_(best_tau) {}

Eigen::Vector3d hop_thrust_for_tau(const HopProblem& problem, double tau) {
  const Eigen::Vector3d delta = problem.r_tau - problem.r_0;
  return 2.0 * problem.m_r * delta / (tau * tau) - problem.m_r * problem.f_g;
}

HopSolution solve_hop(const HopProblem& problem) {
  problem.validate();
  const Eigen::Vector3d delta = problem.r_tau - problem.r_0;

  auto cost_at = [&](double tau) {
    return hop_thrust_for_tau(problem, tau).squaredNorm();
  };

  double best_tau;
  if (delta.norm() < 1e-12) {
    // Hover-cancel: thrust is tau-independent, so take the
    // impulse-minimizing flight time.
    best_tau = problem.tau_min;
  } else if (problem.tau_max == problem.tau_min) {
    best_tau = problem.tau_min;
  } else {
    // |T(tau)|^2 is a convex parabola in s = 1/tau^2, hence unimodal in tau.
    static constexpr double kInvPhi = 0.6180339887498949;
    double a = problem.tau_min;
    double b = problem.tau_max;
    double x1 = b - kInvPhi * (b - a);
    double x2 = a + kInvPhi * (b - a);
    double f1 = cost_at(x1);
    double f2 = cost_at(x2);
    for (int it = 0; it < 200 && (b - a) > 1e-13 * problem.tau_max; ++it) {
      if (f1 < f2) {
        b = x2;
        x2 = x1;
        f2 = f1;
        x1 = b - kInvPhi * (b - a);
        f1 = cost_at(x1);
      } else {
        a = x1;
        x1 = x2;
        f1 = f2;
        x2 = a + kInvPhi * (b - a);
        f2 = cost_at(x2);
      }
    }
    best_tau = 0.5 * (a + b);
    // The minimum may sit exactly on a bound.
    if (cost_at(problem.tau_min) < cost_at(best_tau)) best_tau = problem.tau_min;
    if (cost_at(problem.tau_max) < cost_at(best_tau)) best_tau = problem.tau_max;
  }

  HopSolution solution;
  solution.tau = best_tau;
  solution.thrust = hop_thrust_for_tau(problem, best_tau);
  solution.cost = solution.thrust.squaredNorm();
  const double required = std::sqrt(solution.cost);
  if (required > problem.t_max) throw InfeasibleHop(required, best_tau);
  return solution;
}

}  // namespace tetherhop::gait

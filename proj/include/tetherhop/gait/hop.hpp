// Copyright (c) 2026 tetherhop contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>

#include <Eigen/Core>

namespace tetherhop::gait {

/// One minimum-thrust hop: move a resting robot from r_0 to r_tau under
/// constant thrust plus gravity, flight time free within tau_bounds.
struct HopProblem {
  Eigen::Vector3d r_0 = Eigen::Vector3d::Zero();
  Eigen::Vector3d r_tau = Eigen::Vector3d::Zero();
  double m_r = 1.0;
  Eigen::Vector3d f_g = Eigen::Vector3d::Zero(); ///< gravity accel vector
  double t_max = 1.0;
  double tau_min = 0.1;
  double tau_max = 1.0;

  void validate() const;
};

struct HopSolution {
  Eigen::Vector3d thrust = Eigen::Vector3d::Zero();
  double tau = 0.0;
  double cost = 0.0; ///< Tx^2 + Ty^2 + Tz^2
};

class InfeasibleHop : public std::runtime_error {
 public:
  InfeasibleHop(double min_required, double best_tau);
  double min_required_thrust() const { return min_required_; }
  double best_tau() const { return best_tau_; }

 private:
  double min_required_;
  double best_tau_;
};

/// Constant thrust that lands exactly on target for a given flight time:
/// T(tau) = 2 m (r_tau - r_0) / tau^2 - m f_g.
Eigen::Vector3d hop_thrust_for_tau(const HopProblem& problem, double tau);

/// Minimizes |T|^2 over tau in [tau_min, tau_max] by golden-section search
/// (the cost is unimodal in tau). Zero-displacement problems return the
/// impulse-minimizing tau_min with the hover-cancel thrust. Throws
/// InfeasibleHop when even the best tau needs more than t_max.
HopSolution solve_hop(const HopProblem& problem);

}  // namespace tetherhop::gait

// Copyright (c) 2026 tetherhop contributors
// SPDX-License-Identifier: Apache-2.0

#include "tetherhop/sim/stepper.hpp"

#include <cmath>
#include <stdexcept>

#include "tetherhop/grip/spines.hpp"
#include "tetherhop/sim/forces.hpp"

namespace tetherhop::sim {

void SimSpecs::validate() const {
  world.validate();
  payload.validate();
  if (robots.empty()) throw ConfigError("SimSpecs: at least one robot required");
  if (payload.attachments.size() != robots.size() ||
      tethers.size() != robots.size()) {
    throw ConfigError(
        "SimSpecs: robots, tethers and payload attachments must have equal "
        "counts");
  }
  for (const auto& robot : robots) robot.validate();
  for (const auto& tether : tethers) tether.validate();
}

StepResult step(const SystemState& state,
                const std::vector<Eigen::Vector3d>& thrusts,
                const std::vector<std::uint8_t>& grips, const SimSpecs& specs,
                double dt) {
  if (dt <= 0.0) throw std::invalid_argument("step: dt must be > 0");
  const int n = state.robot_count();
  if (static_cast<int>(thrusts.size()) != n ||
      static_cast<int>(grips.size()) != n || specs.robot_count() != n) {
    throw std::invalid_argument("step: robot count mismatch");
  }
  state.validate();

  StepResult out;
  out.state = state;
  out.grip_force_mag.assign(n, 0.0);
  out.grip_demand.assign(n, 0.0);
  SystemState& next = out.state;

  const Eigen::Vector3d a_g = gravity_accel(specs.world);

  // Thrust limits and fuel budget. Over-budget thrust is coerced to zero.
  std::vector<Eigen::Vector3d> applied = thrusts;
  for (int i = 0; i < n; ++i) {
    const double mag = applied[i].norm();
    if (mag > specs.robots[i].t_max * (1.0 + 1e-12)) {
      throw std::invalid_argument("step: thrust exceeds t_max for robot " +
                                  std::to_string(i));
    }
    if (mag > 0.0 &&
        state.fuel_used[i] + mag * dt > specs.robots[i].fuel_budget) {
      applied[i].setZero();
      out.events.push_back(
          {state.t, i, SimEventType::FuelExhausted, mag});
    }
  }

  // Tether forces on each robot; the payload receives the negation.
  std::vector<Eigen::Vector3d> f_t(n);
  for (int i = 0; i < n; ++i) {
    f_t[i] = tether_force(state.r[i], state.v[i], state.R, state.V, state.phi,
                          state.phi_dot, specs.payload.attachments[i],
                          specs.tethers[i]);
  }

  // Payload translational and yaw dynamics.
  Eigen::Vector3d f_payload = specs.payload.M * a_g;
  double torque = -specs.payload.k_r * state.phi -
                  specs.payload.c_r * state.phi_dot;
  for (int i = 0; i < n; ++i) {
    f_payload -= f_t[i];
    const Eigen::Vector3d arm =
        yaw_rotation(state.phi) *
        Eigen::Vector3d(specs.payload.attachments[i].x(),
                        specs.payload.attachments[i].y(), 0.0);
    torque += arm.cross(-f_t[i]).z();
  }
  {
    const double delta = std::max(0.0, -state.R.z());
    if (delta > 0.0) {
      f_payload.z() += contact_force(delta, -state.V.z(), specs.world);
    }
  }
  f_payload += friction_force(state.V, specs.world);

  next.V = state.V + (f_payload / specs.payload.M) * dt;
  next.R = state.R + next.V * dt;
  next.phi_dot = state.phi_dot + (torque / specs.payload.I_z) * dt;
  next.phi = state.phi + next.phi_dot * dt;

  // Robots: anchored while gripped (with slip on overload), free otherwise.
  for (int i = 0; i < n; ++i) {
    const RobotSpec& spec = specs.robots[i];
    bool anchored = grips[i] != 0;
    if (anchored) {
      const Eigen::Vector3d demand_vec = f_t[i] + spec.m_r * a_g + applied[i];
      const double demand = demand_vec.norm();
      out.grip_demand[i] = demand;
      out.grip_force_mag[i] =
          grip::grip_force(demand, spec.f_load, spec.sigmoid_k);
      if (demand > spec.f_load) {
        anchored = false;
        out.grip_force_mag[i] = 0.0;
        out.events.push_back({state.t, i, SimEventType::Slip, demand});
      }
    }
    next.gripped[i] = anchored ? 1 : 0;

    if (anchored) {
      next.v[i].setZero();
      next.r[i] = state.r[i];
    } else {
      Eigen::Vector3d force = f_t[i] + spec.m_r * a_g + applied[i];
      const double delta = std::max(0.0, spec.radius_rho - state.r[i].z());
      if (delta > 0.0) {
        force.z() += contact_force(delta, -state.v[i].z(), specs.world);
      }
      next.v[i] = state.v[i] + (force / spec.m_r) * dt;
      next.r[i] = state.r[i] + next.v[i] * dt;
    }
    next.fuel_used[i] = state.fuel_used[i] + applied[i].norm() * dt;
  }

  next.t = state.t + dt;
  return out;
}

double oscillation_angle(const SystemState& state) {
  const int n = state.robot_count();
  if (n < 1) throw std::invalid_argument("oscillation_angle: no robots");
  Eigen::Vector2d cm = Eigen::Vector2d::Zero();
  for (const auto& r : state.r) cm += r.head<2>();
  cm /= n;
  const Eigen::Vector2d d = state.R.head<2>() - cm;
  const double len = d.norm();
  if (len < 1e-12) return 0.0;
  const double c = std::clamp(-d.y() / len, -1.0, 1.0);
  return std::acos(c);
}

double mechanical_energy(const SystemState& state, const SimSpecs& specs) {
  const WorldParams& world = specs.world;
  const double sin_t = std::sin(world.slope_theta);
  const double cos_t = std::cos(world.slope_theta);
  const double np1 = world.contact_exp_n + 1.0;

  auto potential = [&](const Eigen::Vector3d& pos, double mass) {
    return mass * world.g * (sin_t * pos.y() + cos_t * pos.z());
  };

  double e = 0.5 * specs.payload.M * state.V.squaredNorm() +
             0.5 * specs.payload.I_z * state.phi_dot * state.phi_dot +
             potential(state.R, specs.payload.M) +
             0.5 * specs.payload.k_r * state.phi * state.phi;
  {
    const double delta = std::max(0.0, -state.R.z());
    e += world.k_c * std::pow(delta, np1) / np1;
  }
  for (int i = 0; i < state.robot_count(); ++i) {
    e += potential(state.r[i], specs.robots[i].m_r);
    if (!state.gripped[i]) {
      e += 0.5 * specs.robots[i].m_r * state.v[i].squaredNorm();
      const double delta =
          std::max(0.0, specs.robots[i].radius_rho - state.r[i].z());
      e += world.k_c * std::pow(delta, np1) / np1;
    }
    const Eigen::Vector3d l =
        attachment_world(state.R, state.phi, specs.payload.attachments[i]) -
        state.r[i];
    const double stretch = std::max(0.0, l.norm() - specs.tethers[i].l_0);
    e += 0.5 * specs.tethers[i].k_t * stretch * stretch;
  }
  return e;
}

}  // namespace tetherhop::sim

// Copyright (c) 2026 tetherhop contributors
// SPDX-License-Identifier: Apache-2.0

#include "tetherhop/sim/types.hpp"

#include <cmath>

namespace tetherhop::sim {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw ConfigError(what);
}

}  // namespace

void WorldParams::validate() const {
  require(g > 0, "WorldParams: g must be > 0");
  require(slope_theta >= 0 && slope_theta < M_PI / 2,
          "WorldParams: slope_theta must be in [0, pi/2)");
  require(k_c >= 0, "WorldParams: k_c must be >= 0");
  require(c_c >= 0, "WorldParams: c_c must be >= 0");
  require(mu_v >= 0, "WorldParams: mu_v must be >= 0");
  require(contact_exp_n > 0, "WorldParams: contact_exp_n must be > 0");
}

void RobotSpec::validate() const {
  require(m_r > 0, "RobotSpec: m_r must be > 0");
  require(radius_rho > 0, "RobotSpec: radius_rho must be > 0");
  require(f_load >= 0, "RobotSpec: f_load must be >= 0");
  require(sigmoid_k > 0, "RobotSpec: sigmoid_k must be > 0");
  require(t_max > 0, "RobotSpec: t_max must be > 0");
  require(fuel_budget >= 0, "RobotSpec: fuel_budget must be >= 0");
}

void PayloadSpec::validate() const {
  require(M > 0, "PayloadSpec: M must be > 0");
  require(I_z > 0, "PayloadSpec: I_z must be > 0");
  require(disk_radius > 0, "PayloadSpec: disk_radius must be > 0");
  require(k_r >= 0, "PayloadSpec: k_r must be >= 0");
  require(c_r >= 0, "PayloadSpec: c_r must be >= 0");
  for (const auto& p : attachments) {
    require(std::abs(p.norm() - disk_radius) <= 1e-3 * disk_radius,
            "PayloadSpec: attachment point must lie on the disk perimeter");
  }
}

void TetherSpec::validate() const {
  require(k_t >= 0, "TetherSpec: k_t must be >= 0");
  require(c_t >= 0, "TetherSpec: c_t must be >= 0");
  require(l_0 > 0, "TetherSpec: l_0 must be > 0");
}

void SystemState::validate() const {
  const auto n = r.size();
  require(v.size() == n && gripped.size() == n && fuel_used.size() == n,
          "SystemState: per-robot array lengths must all equal N");
}

const char* to_string(SimEventType type) {
  switch (type) {
    case SimEventType::Slip:
      return "slip";
    case SimEventType::FuelExhausted:
      return "fuel_exhausted";
  }
  return "unknown";
}

}  // namespace tetherhop::sim

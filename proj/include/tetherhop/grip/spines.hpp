// Copyright (c) 2026 tetherhop contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "tetherhop/grip/surface.hpp"

namespace tetherhop::grip {

/// Microspine tip and material model. Material constants have no physical
/// defaults; every field must be set explicitly.
struct SpineModel {
  double r_s = 0.0;       ///< tip radius [m]
  double psi_load = 0.0;  ///< load angle [rad]
  double mu_f = 0.0;      ///< spine-surface friction coefficient
  double sigma_max = 0.0; ///< tensile strength [Pa]
  double E_mod = 0.0;     ///< elastic modulus [Pa]
  double nu = 0.0;        ///< Poisson-type coefficient, 0 <= nu < 0.5
  int count_s = 0;        ///< spines per robot

  void validate() const;
};

struct GripSiteReport {
  std::vector<int> site_indices;     ///< profile indices where psi > psi_min
  std::vector<double> traced;        ///< spine-center traced profile [m]
  std::vector<double> psi_profile;   ///< traced normal inclination [rad]
  std::vector<double> per_site_fmax; ///< load capacity at each site [N]
};

/// Traced profile of a spine tip of radius r_s rolling over the profile:
/// morphological dilation by the tip disk, reported at the tip center.
std::vector<double> trace_profile(const std::vector<double>& profile,
                                  double r_s, double resolution);

/// Minimum grippable normal angle: psi_load + arccot(mu_f).
double min_grip_angle(double psi_load, double mu_f);

/// Indices of the traced profile whose normal inclination (from the
/// central-difference slope) exceeds psi_min. Endpoints are skipped.
std::vector<int> find_grip_sites(const std::vector<double>& traced,
                                 double resolution, double psi_min);

/// Normal inclination profile of a traced surface; endpoints are zero.
std::vector<double> normal_angle_profile(const std::vector<double>& traced,
                                         double resolution);

/// Effective radius of two contacting curvatures: 1/R = 1/r_s + 1/r_a.
double effective_radius(double r_s, double r_a);

/// Maximum sustainable load of one spine on an asperity of radius r_a.
double spine_max_load(const SpineModel& spine, double r_a);

/// Sigmoid grip force for a demanded load magnitude: strictly increasing,
/// bounded in (0, f_load), crossing f_load/2 at demand = f_load/2.
double grip_force(double demand, double f_load, double k);

/// Full single-profile spine analysis: trace, normal angles, grip sites
/// and per-site capacities (asperity radii from local curvature of the
/// raw profile, floored at resolution).
GripSiteReport analyze_profile(const std::vector<double>& profile,
                               const SpineModel& spine, double resolution);

/// Aggregate capacity of count_s spines engaging the surface's middle-row
/// profile: each spine engages a uniformly random detected site (with
/// replacement); returns the sum of per-spine max loads. Zero when the
/// profile has no grip sites. Deterministic under a fixed seed.
double aggregate_load(const SpineModel& spine, const MicroSurface& surface,
                      double psi_min, std::uint64_t seed);

}  // namespace tetherhop::grip

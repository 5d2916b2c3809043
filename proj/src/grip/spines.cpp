// Copyright (c) 2026 tetherhop contributors
// SPDX-License-Identifier: Apache-2.0

#include "tetherhop/grip/spines.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace tetherhop::grip {

void SpineModel::validate() const {
  if (r_s <= 0.0) throw std::invalid_argument("SpineModel: r_s must be > 0");
  if (mu_f <= 0.0) throw std::invalid_argument("SpineModel: mu_f must be > 0");
  if (sigma_max <= 0.0)
    throw std::invalid_argument("SpineModel: sigma_max must be > 0");
  if (E_mod <= 0.0) throw std::invalid_argument("SpineModel: E_mod must be > 0");
  if (nu < 0.0 || nu >= 0.5)
    throw std::invalid_argument("SpineModel: nu must be in [0, 0.5)");
  if (count_s < 1) throw std::invalid_argument("SpineModel: count_s must be >= 1");
}

std::vector<double> trace_profile(const std::vector<double>& profile,
                                  double r_s, double resolution) {
  if (profile.empty())
    throw std::invalid_argument("trace_profile: empty profile");
  if (r_s <= 0.0) throw std::invalid_argument("trace_profile: r_s must be > 0");
  if (resolution <= 0.0)
    throw std::invalid_argument("trace_profile: resolution must be > 0");

  const int n = static_cast<int>(profile.size());
  const int w = static_cast<int>(std::floor(r_s / resolution));
  std::vector<double> traced(profile.size());
  for (int j = 0; j < n; ++j) {
    double best = profile[j] + r_s;
    const int lo = std::max(0, j - w);
    const int hi = std::min(n - 1, j + w);
    for (int k = lo; k <= hi; ++k) {
      const double dx = (j - k) * resolution;
      const double arg = r_s * r_s - dx * dx;
      if (arg <= 0.0) continue;
      best = std::max(best, profile[k] + std::sqrt(arg));
    }
    traced[j] = best;
  }
  return traced;
}

double min_grip_angle(double psi_load, double mu_f) {
  if (mu_f <= 0.0)
    throw std::invalid_argument("min_grip_angle: mu_f must be > 0");
  return psi_load + std::atan(1.0 / mu_f);
}

std::vector<double> normal_angle_profile(const std::vector<double>& traced,
                                         double resolution) {
  if (traced.size() < 3)
    throw std::invalid_argument("normal_angle_profile: need >= 3 samples");
  std::vector<double> psi(traced.size(), 0.0);
  for (std::size_t j = 1; j + 1 < traced.size(); ++j) {
    const double slope = (traced[j + 1] - traced[j - 1]) / (2.0 * resolution);
    psi[j] = std::atan(std::abs(slope));
  }
  return psi;
}

std::vector<int> find_grip_sites(const std::vector<double>& traced,
                                 double resolution, double psi_min) {
  const std::vector<double> psi = normal_angle_profile(traced, resolution);
  std::vector<int> sites;
  for (std::size_t j = 1; j + 1 < psi.size(); ++j) {
    if (psi[j] > psi_min) sites.push_back(static_cast<int>(j));
  }
  return sites;
}

double effective_radius(double r_s, double r_a) {
  if (r_s <= 0.0 || r_a <= 0.0)
    throw std::invalid_argument("effective_radius: radii must be > 0");
  return 1.0 / (1.0 / r_s + 1.0 / r_a);
}

double spine_max_load(const SpineModel& spine, double r_a) {
  if (r_a <= 0.0) throw std::invalid_argument("spine_max_load: r_a must be > 0");
  if (spine.nu >= 0.5)
    throw std::invalid_argument("spine_max_load: nu >= 0.5 is singular");
  const double r_eff = effective_radius(spine.r_s, r_a);
  const double stress_term = M_PI * spine.sigma_max / (1.0 - 2.0 * spine.nu);
  return std::pow(stress_term, 3.0) / (2.0 * spine.E_mod * spine.E_mod) *
         r_eff * r_eff;
}

double grip_force(double demand, double f_load, double k) {
  return f_load / (1.0 + std::exp(-k * (demand - f_load / 2.0)));
}

GripSiteReport analyze_profile(const std::vector<double>& profile,
                               const SpineModel& spine, double resolution) {
  GripSiteReport report;
  report.traced = trace_profile(profile, spine.r_s, resolution);
  report.psi_profile = normal_angle_profile(report.traced, resolution);
  const double psi_min = min_grip_angle(spine.psi_load, spine.mu_f);
  report.site_indices = find_grip_sites(report.traced, resolution, psi_min);

  report.per_site_fmax.reserve(report.site_indices.size());
  for (int j : report.site_indices) {
    // Asperity radius from the raw profile's local second-difference
    // curvature, floored at the sample spacing.
    const double curv =
        std::abs(profile[j - 1] - 2.0 * profile[j] + profile[j + 1]) /
        (resolution * resolution);
    double r_a = curv > 1e-300 ? 1.0 / curv : 1e12;
    r_a = std::max(r_a, resolution);
    report.per_site_fmax.push_back(spine_max_load(spine, r_a));
  }
  return report;
}

double aggregate_load(const SpineModel& spine, const MicroSurface& surface,
                      double psi_min, std::uint64_t seed) {
  spine.validate();
  if (surface.nx < 3 || surface.ny < 1)
    throw std::invalid_argument("aggregate_load: surface too small");

  const std::vector<double> profile = surface.row(surface.ny / 2);
  const std::vector<double> traced =
      trace_profile(profile, spine.r_s, surface.resolution);
  const std::vector<int> sites =
      find_grip_sites(traced, surface.resolution, psi_min);
  if (sites.empty()) return 0.0;

  std::vector<double> fmax(sites.size());
  for (std::size_t s = 0; s < sites.size(); ++s) {
    const int j = sites[s];
    const double curv =
        std::abs(profile[j - 1] - 2.0 * profile[j] + profile[j + 1]) /
        (surface.resolution * surface.resolution);
    double r_a = curv > 1e-300 ? 1.0 / curv : 1e12;
    r_a = std::max(r_a, surface.resolution);
    fmax[s] = spine_max_load(spine, r_a);
  }

  // Each spine engages a uniformly random detected site, with replacement.
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, sites.size() - 1);
  double total = 0.0;
  for (int s = 0; s < spine.count_s; ++s) total += fmax[pick(rng)];
  return total;
}

}  // namespace tetherhop::grip

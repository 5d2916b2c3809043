// Copyright (c) 2026 tetherhop contributors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <random>

#include <doctest.h>

#include "tetherhop/grip/spines.hpp"
#include "tetherhop/grip/surface.hpp"

using namespace tetherhop;

namespace {

// Shared microsurface scale for the trend tests: 10 um sampling, 50 um
// correlation length.
grip::SurfaceParams trend_params(double rms, std::uint64_t seed) {
  grip::SurfaceParams params;
  params.target_rms = rms;
  params.extent = 5e-3;
  params.resolution = 10e-6;
  params.correlation_cells = 5.0;
  params.seed = seed;
  return params;
}

grip::SpineModel test_spine(double r_s) {
  grip::SpineModel spine;
  spine.r_s = r_s;
  spine.psi_load = 0.0;
  spine.mu_f = 1.0;
  spine.sigma_max = 1e9;
  spine.E_mod = 200e9;
  spine.nu = 0.3;
  spine.count_s = 10;
  return spine;
}

}  // namespace

TEST_CASE("gen_surface: flat at zero roughness, RMS matched, deterministic") {
  const auto flat = grip::gen_surface(0.0, 1e-3, 50e-6, 42);
  for (double h : flat.heights) CHECK(h == 0.0);

  const auto rough = grip::gen_surface(100e-6, 5e-3, 10e-6, 42);
  CHECK(rough.measured_rms() >= 95e-6);
  CHECK(rough.measured_rms() <= 105e-6);
  CHECK(rough.nx >= 2);
  CHECK(rough.ny >= 2);

  const auto again = grip::gen_surface(100e-6, 5e-3, 10e-6, 42);
  CHECK(rough.heights == again.heights); // bit-identical under one seed

  const auto other = grip::gen_surface(100e-6, 5e-3, 10e-6, 43);
  CHECK(rough.heights != other.heights);

  CHECK_THROWS_AS(grip::gen_surface(1e-6, 0.0, 1e-6, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(grip::gen_surface(1e-6, 1e-3, -1.0, 0),
                  std::invalid_argument);
}

TEST_CASE("surface CSV round trip") {
  const auto surface = grip::gen_surface(80e-6, 2e-3, 20e-6, 21);
  const auto path =
      (std::filesystem::temp_directory_path() / "surface_rt.csv").string();
  grip::save_surface_csv(surface, path);
  const auto back = grip::load_surface_csv(path, surface.resolution);
  REQUIRE(back.nx == surface.nx);
  REQUIRE(back.ny == surface.ny);
  CHECK(back.heights == surface.heights);
}

TEST_CASE("trace_profile: plane, dominance, tip-radius monotonicity") {
  const double res = 10e-6;

  std::vector<double> flat(64, 3e-4);
  const auto traced_flat = grip::trace_profile(flat, 50e-6, res);
  for (double h : traced_flat) CHECK(h == doctest::Approx(3e-4 + 50e-6));

  std::mt19937_64 rng(99);
  std::normal_distribution<double> gauss(0.0, 60e-6);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> profile(128);
    for (double& h : profile) h = gauss(rng);

    const auto t_small = grip::trace_profile(profile, 20e-6, res);
    const auto t_large = grip::trace_profile(profile, 80e-6, res);
    for (std::size_t j = 0; j < profile.size(); ++j) {
      CHECK(t_small[j] >= profile[j]);
      // Larger tip rides at or above the smaller tip everywhere.
      CHECK(t_large[j] >= t_small[j] - 1e-15);
    }
    // At local maxima the tip rests directly on the peak.
    for (std::size_t j = 1; j + 1 < profile.size(); ++j) {
      if (profile[j] > profile[j - 1] && profile[j] > profile[j + 1]) {
        CHECK(t_small[j] >= profile[j] + 20e-6 - 1e-15);
      }
    }
  }

  CHECK_THROWS_AS(grip::trace_profile({}, 1e-5, res), std::invalid_argument);
}

TEST_CASE("min_grip_angle: arccot law") {
  CHECK(grip::min_grip_angle(0.0, 1.0) == doctest::Approx(M_PI / 4));
  CHECK(grip::min_grip_angle(20.0 * M_PI / 180.0, 1.0) ==
        doctest::Approx(65.0 * M_PI / 180.0));
  // Frictionless-limit asymptote: psi_min -> psi_load as mu -> infinity.
  CHECK(grip::min_grip_angle(0.3, 1e9) == doctest::Approx(0.3).epsilon(1e-8));
  CHECK_THROWS_AS(grip::min_grip_angle(0.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(grip::min_grip_angle(0.0, -2.0), std::invalid_argument);

  // Strictly decreasing in mu at fixed psi_load.
  double prev = grip::min_grip_angle(0.1, 0.25);
  for (double mu = 0.5; mu < 16.0; mu *= 2.0) {
    const double psi = grip::min_grip_angle(0.1, mu);
    CHECK(psi < prev);
    prev = psi;
  }
}

TEST_CASE("find_grip_sites: flat, step edge, threshold monotonicity") {
  const double res = 1e-3;

  const std::vector<double> flat(32, 0.5);
  CHECK(grip::find_grip_sites(flat, res, 0.1).empty());

  // Single step of rise 5 mm over one sample: the brute-force slope scan
  // puts sites exactly at the two indices whose central difference spans
  // the step.
  std::vector<double> step(32, 0.0);
  for (std::size_t j = 16; j < step.size(); ++j) step[j] = 5e-3;
  const auto sites = grip::find_grip_sites(step, res, 30.0 * M_PI / 180.0);
  std::vector<int> expected;
  for (int j = 1; j + 1 < static_cast<int>(step.size()); ++j) {
    const double slope = (step[j + 1] - step[j - 1]) / (2.0 * res);
    if (std::atan(std::abs(slope)) > 30.0 * M_PI / 180.0)
      expected.push_back(j);
  }
  CHECK(sites == expected);
  CHECK(sites == std::vector<int>{15, 16});

  // Raising the threshold can only shrink the site set.
  const auto surface = grip::gen_surface(100e-6, 2e-3, 10e-6, 7);
  const auto traced =
      grip::trace_profile(surface.row(surface.ny / 2), 20e-6, 10e-6);
  const auto loose = grip::find_grip_sites(traced, 10e-6, 0.3);
  const auto tight = grip::find_grip_sites(traced, 10e-6, 0.8);
  CHECK(std::includes(loose.begin(), loose.end(), tight.begin(), tight.end()));
}

TEST_CASE("spine_max_load: effective radius and quadratic scaling") {
  CHECK(grip::effective_radius(2e-5, 2e-5) == doctest::Approx(1e-5));

  auto spine = test_spine(2e-5);
  const double f1 = grip::spine_max_load(spine, 2e-5);

  // Doubling both radii doubles R_eff and quadruples f_max, exactly.
  auto spine2 = spine;
  spine2.r_s = 4e-5;
  const double f2 = grip::spine_max_load(spine2, 4e-5);
  CHECK(f2 / f1 == doctest::Approx(4.0).epsilon(1e-14));

  // Hand-evaluated reference at R_eff = 10 um.
  const double stress = M_PI * 1e9 / (1.0 - 2.0 * 0.3);
  const double expected =
      stress * stress * stress / (2.0 * 200e9 * 200e9) * 1e-5 * 1e-5;
  CHECK(f1 == doctest::Approx(expected).epsilon(1e-12));

  auto bad = spine;
  bad.nu = 0.5;
  CHECK_THROWS_AS(grip::spine_max_load(bad, 1e-5), std::invalid_argument);
  CHECK_THROWS_AS(grip::spine_max_load(spine, 0.0), std::invalid_argument);
}

TEST_CASE("grip_force: sigmoid midpoint, saturation, bounds, symmetry") {
  const double f_load = 20.0;
  const double k = 15.0;
  CHECK(grip::grip_force(f_load / 2, f_load, k) == doctest::Approx(f_load / 2));
  CHECK(grip::grip_force(1e9, f_load, k) == doctest::Approx(f_load));

  // Open range (0, f_load) and strict monotonicity, checked where the
  // sigmoid is resolvable in doubles (it saturates to f_load exactly a
  // few 1/k beyond the midpoint).
  double prev = -1.0;
  for (double d = 0.0; d <= f_load / 2 + 2.0; d += 0.05) {
    const double g = grip::grip_force(d, f_load, k);
    CHECK(g > 0.0);
    CHECK(g < f_load);
    CHECK(g > prev);
    prev = g;
  }
  for (double d = f_load / 2 + 2.0; d <= 2.0 * f_load; d += 0.5) {
    CHECK(grip::grip_force(d, f_load, k) <= f_load);
  }

  // Symmetric about (f_load/2, f_load/2).
  for (double x = 0.1; x < f_load / 2; x += 0.7) {
    CHECK(grip::grip_force(f_load / 2 + x, f_load, k) +
              grip::grip_force(f_load / 2 - x, f_load, k) ==
          doctest::Approx(f_load).epsilon(1e-12));
  }
}

TEST_CASE("grip-site count trend across tip radii (20-seed ensemble)") {
  const double psi_min = grip::min_grip_angle(0.0, 1.0); // 45 deg
  double mean10 = 0.0, mean50 = 0.0, mean100 = 0.0;
  const int seeds = 20;
  for (int s = 0; s < seeds; ++s) {
    const auto surface = grip::gen_surface(trend_params(100e-6, 1000 + s));
    const auto profile = surface.row(surface.ny / 2);
    const auto count = [&](double r_s) {
      const auto traced =
          grip::trace_profile(profile, r_s, surface.resolution);
      return static_cast<double>(
          grip::find_grip_sites(traced, surface.resolution, psi_min).size());
    };
    mean10 += count(10e-6);
    mean50 += count(50e-6);
    mean100 += count(100e-6);
  }
  mean10 /= seeds;
  mean50 /= seeds;
  mean100 /= seeds;
  CHECK(mean10 > mean50);
  CHECK(mean50 > mean100);
}

TEST_CASE("aggregate_load: empty, singleton, and roughness trend") {
  // A flat surface has no grip sites at all.
  const auto flat = grip::gen_surface(0.0, 1e-3, 10e-6, 3);
  const auto spine = test_spine(2e-6);
  const double psi_min = grip::min_grip_angle(spine.psi_load, spine.mu_f);
  CHECK(grip::aggregate_load(spine, flat, psi_min, 5) == 0.0);

  // One spine on one engaged site contributes exactly its f_max.
  auto single = spine;
  single.count_s = 1;
  const auto rough = grip::gen_surface(trend_params(100e-6, 11));
  const auto report =
      grip::analyze_profile(rough.row(rough.ny / 2), single, rough.resolution);
  REQUIRE(!report.site_indices.empty());
  const double load = grip::aggregate_load(single, rough, psi_min, 17);
  const bool matches_some_site =
      std::any_of(report.per_site_fmax.begin(), report.per_site_fmax.end(),
                  [&](double f) { return f == load; });
  CHECK(matches_some_site);
  for (double f : report.per_site_fmax) CHECK(f > 0.0);

  // Monte-Carlo trend: mean capacity falls as the surface smooths.
  const int seeds = 25;
  double mean_hi = 0.0, mean_mid = 0.0, mean_lo = 0.0;
  for (int s = 0; s < seeds; ++s) {
    mean_hi += grip::aggregate_load(
        spine, grip::gen_surface(trend_params(50e-6, 300 + s)), psi_min, s);
    mean_mid += grip::aggregate_load(
        spine, grip::gen_surface(trend_params(25e-6, 300 + s)), psi_min, s);
    mean_lo += grip::aggregate_load(
        spine, grip::gen_surface(trend_params(12e-6, 300 + s)), psi_min, s);
  }
  CHECK(mean_hi > mean_mid);
  CHECK(mean_mid > mean_lo);
}

// Copyright (c) 2026 tetherhop contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tetherhop::grip {

/// Sampled rough-surface height field. Heights are mean-removed and
/// rescaled so the measured RMS matches target_rms within 5%.
struct MicroSurface {
  std::vector<double> heights; ///< row-major, ny rows of nx samples [m]
  int nx = 0;
  int ny = 0;
  double resolution = 0.0; ///< sample spacing [m]
  double target_rms = 0.0; ///< requested RMS roughness [m]
  std::uint64_t seed = 0;

  double at(int ix, int iy) const { return heights[static_cast<std::size_t>(iy) * nx + ix]; }
  double& at(int ix, int iy) { return heights[static_cast<std::size_t>(iy) * nx + ix]; }
  /// RMS of heights about their mean.
  double measured_rms() const;
  /// One row as a 1D profile for spine analysis.
  std::vector<double> row(int iy) const;
};

struct SurfaceParams {
  double target_rms = 0.0;  ///< [m]
  double extent = 0.0;      ///< side length [m]
  double resolution = 0.0;  ///< sample spacing [m]
  /// Isotropic Gaussian correlation length as a multiple of resolution.
  double correlation_cells = 10.0;
  std::uint64_t seed = 0;
};

/// Gaussian spectral-synthesis rough surface: seeded white noise filtered
/// with an isotropic Gaussian kernel, mean-removed and RMS-rescaled.
/// Identical seeds give bit-identical grids.
MicroSurface gen_surface(const SurfaceParams& params);

MicroSurface gen_surface(double target_rms, double extent, double resolution,
                         std::uint64_t seed);

void save_surface_csv(const MicroSurface& surface, const std::string& path);
MicroSurface load_surface_csv(const std::string& path, double resolution);

}  // namespace tetherhop::grip

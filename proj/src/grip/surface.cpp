// Copyright (c) 2026 tetherhop contributors
// SPDX-License-Identifier: Apache-2.0

#include "tetherhop/grip/surface.hpp"

#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace tetherhop::grip {

double MicroSurface::measured_rms() const {
  if (heights.empty()) return 0.0;
  double mean = 0.0;
  for (double h : heights) mean += h;
  mean /= static_cast<double>(heights.size());
  double ss = 0.0;
  for (double h : heights) ss += (h - mean) * (h - mean);
  return std::sqrt(ss / static_cast<double>(heights.size()));
}

std::vector<double> MicroSurface::row(int iy) const {
  std::vector<double> out(nx);
  for (int ix = 0; ix < nx; ++ix) out[ix] = at(ix, iy);
  return out;
}

namespace {

// Separable Gaussian filter with truncated-kernel renormalization at the
// borders.
void gaussian_filter(std::vector<double>& grid, int nx, int ny, double sigma) {
  const int radius = std::max(1, static_cast<int>(std::ceil(3.0 * sigma)));
  std::vector<double> kernel(2 * radius + 1);
  for (int k = -radius; k <= radius; ++k) {
    kernel[k + radius] = std::exp(-0.5 * (k * k) / (sigma * sigma));
  }

  std::vector<double> tmp(grid.size());
  auto pass = [&](const std::vector<double>& src, std::vector<double>& dst,
                  bool along_x) {
    for (int iy = 0; iy < ny; ++iy) {
      for (int ix = 0; ix < nx; ++ix) {
        double acc = 0.0;
        double wsum = 0.0;
        for (int k = -radius; k <= radius; ++k) {
          const int jx = along_x ? ix + k : ix;
          const int jy = along_x ? iy : iy + k;
          if (jx < 0 || jx >= nx || jy < 0 || jy >= ny) continue;
          const double w = kernel[k + radius];
          acc += w * src[static_cast<std::size_t>(jy) * nx + jx];
          wsum += w;
        }
        dst[static_cast<std::size_t>(iy) * nx + ix] = acc / wsum;
      }
    }
  };
  pass(grid, tmp, true);
  pass(tmp, grid, false);
}

}  // namespace

MicroSurface gen_surface(const SurfaceParams& params) {
  if (params.extent <= params.resolution || params.resolution <= 0.0) {
    throw std::invalid_argument(
        "gen_surface: require extent > resolution > 0");
  }
  if (params.target_rms < 0.0) {
    throw std::invalid_argument("gen_surface: target_rms must be >= 0");
  }

  const int n =
      static_cast<int>(std::llround(params.extent / params.resolution)) + 1;
  MicroSurface surface;
  surface.nx = n;
  surface.ny = n;
  surface.resolution = params.resolution;
  surface.target_rms = params.target_rms;
  surface.seed = params.seed;
  surface.heights.assign(static_cast<std::size_t>(n) * n, 0.0);

  if (params.target_rms == 0.0) return surface;

  std::mt19937_64 rng(params.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (double& h : surface.heights) h = gauss(rng);

  gaussian_filter(surface.heights, n, n, params.correlation_cells);

  double mean = 0.0;
  for (double h : surface.heights) mean += h;
  mean /= static_cast<double>(surface.heights.size());
  for (double& h : surface.heights) h -= mean;

  const double rms = surface.measured_rms();
  if (rms > 0.0) {
    const double scale = params.target_rms / rms;
    for (double& h : surface.heights) h *= scale;
  }
  return surface;
}

MicroSurface gen_surface(double target_rms, double extent, double resolution,
                         std::uint64_t seed) {
  SurfaceParams params;
  params.target_rms = target_rms;
  params.extent = extent;
  params.resolution = resolution;
  params.seed = seed;
  return gen_surface(params);
}

void save_surface_csv(const MicroSurface& surface, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("save_surface_csv: cannot open " + path);
  out.precision(17);
  for (int iy = 0; iy < surface.ny; ++iy) {
    for (int ix = 0; ix < surface.nx; ++ix) {
      if (ix) out << ',';
      out << surface.at(ix, iy);
    }
    out << '\n';
  }
}

MicroSurface load_surface_csv(const std::string& path, double resolution) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_surface_csv: cannot open " + path);
  MicroSurface surface;
  surface.resolution = resolution;
  std::string line;
  int nx = -1;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string cell;
    int count = 0;
    while (std::getline(ss, cell, ',')) {
      surface.heights.push_back(std::stod(cell));
      ++count;
    }
    if (nx < 0) {
      nx = count;
    } else if (count != nx) {
      throw std::runtime_error("load_surface_csv: ragged row in " + path);
    }
    ++surface.ny;
  }
  surface.nx = std::max(nx, 0);
  surface.target_rms = surface.measured_rms();
  return surface;
}

}  // namespace tetherhop::grip

// Copyright (c) 2026 tetherhop contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include <Eigen/Core>

namespace tetherhop::planner {

/// Gridded terrain elevations. Cell (ix, iy) is centered at
/// origin + ((ix + 0.5) c, (iy + 0.5) c).
struct Heightmap {
  std::vector<double> heights; ///< row-major, ny rows of nx [m]
  int nx = 0;
  int ny = 0;
  double cell_size = 1.0;
  Eigen::Vector2d origin = Eigen::Vector2d::Zero();

  double at(int ix, int iy) const {
    return heights[static_cast<std::size_t>(iy) * nx + ix];
  }
  double& at(int ix, int iy) {
    return heights[static_cast<std::size_t>(iy) * nx + ix];
  }
  double width() const { return nx * cell_size; }
  double height_extent() const { return ny * cell_size; }
  void validate() const;
};

/// Loads a heightmap from a CSV grid or a PGM (P2/P5, 8/16-bit) image.
/// PGM pixels map linearly to [0, vscale]; a `# vscale <v>` comment in
/// the header overrides the argument. Malformed input throws with
/// row/column context.
Heightmap load_heightmap(const std::string& path, double cell_size,
                         const Eigen::Vector2d& origin = {0.0, 0.0},
                         double vscale = 1.0);

void save_heightmap_csv(const Heightmap& hm, const std::string& path);

struct ObstacleMask {
  std::vector<std::uint8_t> blocked;
  int nx = 0;
  int ny = 0;
  double cell_size = 1.0;
  Eigen::Vector2d origin = Eigen::Vector2d::Zero();
  double grad_threshold = 0.0;

  bool blocked_at(int ix, int iy) const {
    return blocked[static_cast<std::size_t>(iy) * nx + ix] != 0;
  }
  void set_blocked(int ix, int iy, bool value = true) {
    blocked[static_cast<std::size_t>(iy) * nx + ix] = value ? 1 : 0;
  }
  Eigen::Vector2d cell_center(int ix, int iy) const {
    return origin + Eigen::Vector2d((ix + 0.5) * cell_size,
                                    (iy + 0.5) * cell_size);
  }
  int blocked_count() const;
};

ObstacleMask make_empty_mask(int nx, int ny, double cell_size,
                             const Eigen::Vector2d& origin = {0.0, 0.0});

/// Marks cells whose central-difference gradient magnitude exceeds the
/// threshold (one-sided differences at the borders).
ObstacleMask gradient_obstacles(const Heightmap& hm, double grad_threshold);

void save_mask_csv(const ObstacleMask& mask, const std::string& path);

/// True if a disk of the given radius centered at `point` overlaps any
/// blocked cell square (strict: a zero radius never collides).
bool disk_collides(const ObstacleMask& mask, const Eigen::Vector2d& point,
                   double radius);

}  // namespace tetherhop::planner

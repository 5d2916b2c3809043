// Copyright (c) 2026 tetherhop contributors
// SPDX-License-Identifier: Apache-2.0

#include "tetherhop/planner/heightmap.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace tetherhop::planner {

void Heightmap::validate() const {
  if (nx < 2 || ny < 2)
    throw std::invalid_argument("Heightmap: grid must be at least 2x2");
  if (cell_size <= 0.0)
    throw std::invalid_argument("Heightmap: cell_size must be > 0");
  if (heights.size() != static_cast<std::size_t>(nx) * ny)
    throw std::invalid_argument("Heightmap: size mismatch");
}

namespace {

Heightmap load_csv(const std::string& path, double cell_size,
                   const Eigen::Vector2d& origin) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_heightmap: cannot open " + path);
  Heightmap hm;
  hm.cell_size = cell_size;
  hm.origin = origin;
  std::string line;
  int row = 0;
  int nx = -1;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string cell;
    int col = 0;
    while (std::getline(ss, cell, ',')) {
      try {
        hm.heights.push_back(std::stod(cell));
      } catch (const std::exception&) {
        throw std::runtime_error("load_heightmap: bad value at row " +
                                 std::to_string(row) + ", column " +
                                 std::to_string(col) + " of " + path);
      }
      ++col;
    }
    if (nx < 0) {
      nx = col;
    } else if (col != nx) {
      throw std::runtime_error("load_heightmap: row " + std::to_string(row) +
                               " has " + std::to_string(col) +
                               " columns, expected " + std::to_string(nx) +
                               " in " + path);
    }
    ++row;
  }
  hm.nx = std::max(nx, 0);
  hm.ny = row;
  hm.validate();
  return hm;
}

struct PgmHeader {
  bool binary = false;
  int width = 0;
  int height = 0;
  int maxval = 255;
  double vscale_comment = -1.0;
};

PgmHeader read_pgm_header(std::istream& in, const std::string& path) {
  PgmHeader header;
  std::string magic;
  in >> magic;
  if (magic == "P2") {
    header.binary = false;
  } else if (magic == "P5") {
    header.binary = true;
  } else {
    throw std::runtime_error("load_heightmap: " + path +
                             " is not a P2/P5 PGM file");
  }

  int fields[3];
  int got = 0;
  while (got < 3) {
    int c = in.peek();
    if (c == EOF)
      throw std::runtime_error("load_heightmap: truncated PGM header in " +
                               path);
    if (std::isspace(c)) {
      in.get();
    } else if (c == '#') {
      std::string comment;
      std::getline(in, comment);
      std::stringstream cs(comment);
      std::string hash, key;
      double value;
      cs >> hash;
      if (hash == "#") {
        cs >> key >> value;
      } else {
        key = hash.substr(1);
        cs >> value;
      }
      if (key == "vscale" && cs) header.vscale_comment = value;
    } else {
      if (!(in >> fields[got]))
        throw std::runtime_error("load_heightmap: bad PGM header in " + path);
      ++got;
    }
  }
  header.width = fields[0];
  header.height = fields[1];
  header.maxval = fields[2];
  if (header.binary) in.get(); // single whitespace after maxval
  return header;
}

Heightmap load_pgm(const std::string& path, double cell_size,
                   const Eigen::Vector2d& origin, double vscale) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("load_heightmap: cannot open " + path);
  const PgmHeader header = read_pgm_header(in, path);
  if (header.vscale_comment > 0.0) vscale = header.vscale_comment;
  if (header.maxval <= 0 || header.maxval > 65535)
    throw std::runtime_error("load_heightmap: unsupported PGM maxval in " +
                             path);

  Heightmap hm;
  hm.cell_size = cell_size;
  hm.origin = origin;
  hm.nx = header.width;
  hm.ny = header.height;
  hm.heights.resize(static_cast<std::size_t>(hm.nx) * hm.ny);

  const double scale = vscale / header.maxval;
  const std::size_t total = hm.heights.size();
  for (std::size_t k = 0; k < total; ++k) {
    long pixel;
    if (header.binary) {
      if (header.maxval > 255) {
        const int hi = in.get();
        const int lo = in.get();
        if (lo == EOF)
          throw std::runtime_error("load_heightmap: truncated PGM data at "
                                   "pixel " + std::to_string(k) + " of " +
                                   path);
        pixel = (hi << 8) | lo; // 16-bit big-endian per the format
      } else {
        const int b = in.get();
        if (b == EOF)
          throw std::runtime_error("load_heightmap: truncated PGM data at "
                                   "pixel " + std::to_string(k) + " of " +
                                   path);
        pixel = b;
      }
    } else {
      if (!(in >> pixel))
        throw std::runtime_error("load_heightmap: truncated PGM data at "
                                 "pixel " + std::to_string(k) + " of " + path);
    }
    if (pixel < 0 || pixel > header.maxval)
      throw std::runtime_error("load_heightmap: pixel out of range at " +
                               std::to_string(k) + " of " + path);
    // PGM row 0 is the top edge; store row 0 at the grid's y=0 bottom.
    const std::size_t row = k / hm.nx;
    const std::size_t col = k % hm.nx;
    const std::size_t flipped = (hm.ny - 1 - row) * hm.nx + col;
    hm.heights[flipped] = pixel * scale;
  }
  hm.validate();
  return hm;
}

}  // namespace

Heightmap load_heightmap(const std::string& path, double cell_size,
                         const Eigen::Vector2d& origin, double vscale) {
  if (cell_size <= 0.0)
    throw std::invalid_argument("load_heightmap: cell_size must be > 0");
  const auto dot = path.find_last_of('.');
  const std::string ext = dot == std::string::npos ? "" : path.substr(dot);
  if (ext == ".pgm" || ext == ".PGM")
    return load_pgm(path, cell_size, origin, vscale);
  return load_csv(path, cell_size, origin);
}

void save_heightmap_csv(const Heightmap& hm, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("save_heightmap_csv: cannot open " + path);
  out.precision(17);
  for (int iy = 0; iy < hm.ny; ++iy) {
    for (int ix = 0; ix < hm.nx; ++ix) {
      if (ix) out << ',';
      out << hm.at(ix, iy);
    }
    out << '\n';
  }
}

int ObstacleMask::blocked_count() const {
  int count = 0;
  for (auto b : blocked) count += b ? 1 : 0;
  return count;
}

ObstacleMask make_empty_mask(int nx, int ny, double cell_size,
                             const Eigen::Vector2d& origin) {
  ObstacleMask mask;
  mask.nx = nx;
  mask.ny = ny;
  mask.cell_size = cell_size;
  mask.origin = origin;
  mask.blocked.assign(static_cast<std::size_t>(nx) * ny, 0);
  return mask;
}

ObstacleMask gradient_obstacles(const Heightmap& hm, double grad_threshold) {
  hm.validate();
  if (grad_threshold <= 0.0)
    throw std::invalid_argument(
        "gradient_obstacles: grad_threshold must be > 0");

  ObstacleMask mask = make_empty_mask(hm.nx, hm.ny, hm.cell_size, hm.origin);
  mask.grad_threshold = grad_threshold;
  for (int iy = 0; iy < hm.ny; ++iy) {
    for (int ix = 0; ix < hm.nx; ++ix) {
      const int xm = std::max(0, ix - 1);
      const int xp = std::min(hm.nx - 1, ix + 1);
      const int ym = std::max(0, iy - 1);
      const int yp = std::min(hm.ny - 1, iy + 1);
      const double gx = (hm.at(xp, iy) - hm.at(xm, iy)) /
                        ((xp - xm) * hm.cell_size);
      const double gy = (hm.at(ix, yp) - hm.at(ix, ym)) /
                        ((yp - ym) * hm.cell_size);
      if (std::hypot(gx, gy) > grad_threshold) mask.set_blocked(ix, iy);
    }
  }
  return mask;
}

void save_mask_csv(const ObstacleMask& mask, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("save_mask_csv: cannot open " + path);
  for (int iy = 0; iy < mask.ny; ++iy) {
    for (int ix = 0; ix < mask.nx; ++ix) {
      if (ix) out << ',';
      out << (mask.blocked_at(ix, iy) ? 1 : 0);
    }
    out << '\n';
  }
}

bool disk_collides(const ObstacleMask& mask, const Eigen::Vector2d& point,
                   double radius) {
  if (radius < 0.0)
    throw std::invalid_argument("disk_collides: radius must be >= 0");
  const double c = mask.cell_size;
  const int ix_lo = static_cast<int>(
      std::floor((point.x() - radius - mask.origin.x()) / c));
  const int ix_hi = static_cast<int>(
      std::floor((point.x() + radius - mask.origin.x()) / c));
  const int iy_lo = static_cast<int>(
      std::floor((point.y() - radius - mask.origin.y()) / c));
  const int iy_hi = static_cast<int>(
      std::floor((point.y() + radius - mask.origin.y()) / c));
  for (int iy = std::max(0, iy_lo); iy <= std::min(mask.ny - 1, iy_hi); ++iy) {
    for (int ix = std::max(0, ix_lo); ix <= std::min(mask.nx - 1, ix_hi);
         ++ix) {
      if (!mask.blocked_at(ix, iy)) continue;
      const double x0 = mask.origin.x() + ix * c;
      const double y0 = mask.origin.y() + iy * c;
      const double dx =
          std::max({x0 - point.x(), 0.0, point.x() - (x0 + c)});
      const double dy =
          std::max({y0 - point.y(), 0.0, point.y() - (y0 + c)});
      if (std::hypot(dx, dy) < radius) return true;
    }
  }
  return false;
}

}  // namespace tetherhop::planner

// Copyright (c) 2026 tetherhop contributors
// SPDX-License-Identifier: Apache-2.0

#include "tetherhop/evo/genotype.hpp"

#include <cmath>
#include <stdexcept>

namespace tetherhop::evo {

int Genotype::robot_count() const {
  int count = 0;
  for (auto b : bits) count += b ? 1 : 0;
  return count;
}

std::string Genotype::to_string() const {
  std::string s(bits.size(), '0');
  for (std::size_t i = 0; i < bits.size(); ++i) s[i] = bits[i] ? '1' : '0';
  return s;
}

int genotype_length(double alpha_node) {
  if (alpha_node <= 0.0)
    throw std::invalid_argument("genotype_length: alpha_node must be > 0");
  const double m = 360.0 / alpha_node;
  const double rounded = std::round(m);
  if (std::abs(m - rounded) > 1e-9 || rounded < 1.0)
    throw std::invalid_argument(
        "genotype_length: alpha_node must divide 360 exactly");
  return static_cast<int>(rounded);
}

Genotype make_genotype(double alpha_node) {
  Genotype g;
  g.alpha_node = alpha_node;
  g.bits.assign(genotype_length(alpha_node), 0);
  return g;
}

AttachmentConfig decode(const Genotype& genotype,
                        const sim::PayloadSpec& payload) {
  if (genotype.length() != genotype_length(genotype.alpha_node))
    throw std::invalid_argument("decode: genotype length mismatch");

  AttachmentConfig config;
  const double alpha_rad = genotype.alpha_node * M_PI / 180.0;
  for (int j = 0; j < genotype.length(); ++j) {
    if (!genotype.bits[j]) continue;
    const double ang = j * alpha_rad;
    config.points.emplace_back(payload.disk_radius * std::cos(ang),
                               payload.disk_radius * std::sin(ang));
    config.nodes.push_back(j);
  }
  config.robot_count = static_cast<int>(config.points.size());
  config.feasible = config.robot_count >= 1;
  return config;
}

namespace {

double cross2(const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
  return a.x() * b.y() - a.y() * b.x();
}

/// Proper (interior-to-both) segment intersection test.
bool segments_cross(const Eigen::Vector2d& p1, const Eigen::Vector2d& p2,
                    const Eigen::Vector2d& q1, const Eigen::Vector2d& q2) {
  const Eigen::Vector2d r = p2 - p1;
  const Eigen::Vector2d s = q2 - q1;
  const double denom = cross2(r, s);
  const Eigen::Vector2d qp = q1 - p1;
  if (std::abs(denom) < 1e-15) {
    // Parallel; collinear overlap with positive length counts as crossing.
    if (std::abs(cross2(qp, r)) > 1e-12) return false;
    const double rr = r.squaredNorm();
    if (rr < 1e-24) return false;
    double t0 = qp.dot(r) / rr;
    double t1 = (q2 - p1).dot(r) / rr;
    if (t0 > t1) std::swap(t0, t1);
    return std::max(t0, 0.0) < std::min(t1, 1.0) - 1e-12;
  }
  const double t = cross2(qp, s) / denom;
  const double u = cross2(qp, r) / denom;
  const double eps = 1e-12;
  return t > eps && t < 1.0 - eps && u > eps && u < 1.0 - eps;
}

}  // namespace

bool tethers_cross(const std::vector<Eigen::Vector2d>& attach_points,
                   const std::vector<Eigen::Vector2d>& robot_positions) {
  if (attach_points.size() != robot_positions.size())
    throw std::invalid_argument("tethers_cross: size mismatch");
  const std::size_t n = attach_points.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (segments_cross(attach_points[i], robot_positions[i],
                         attach_points[j], robot_positions[j]))
        return true;
    }
  }
  return false;
}

}  // namespace tetherhop::evo

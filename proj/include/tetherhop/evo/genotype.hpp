// Copyright (c) 2026 tetherhop contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "tetherhop/sim/types.hpp"

namespace tetherhop::evo {

/// Binary perimeter-attachment encoding: bit j set means a robot is
/// tethered to the node at angle j * alpha_node on the payload disk.
struct Genotype {
  std::vector<std::uint8_t> bits;
  double alpha_node = 15.0; ///< node spacing [deg]; m = 360 / alpha_node

  int length() const { return static_cast<int>(bits.size()); }
  int robot_count() const;
  std::string to_string() const; ///< e.g. "010010..."
};

/// Number of genotype bits for a node spacing; throws unless alpha_node
/// divides 360 exactly.
int genotype_length(double alpha_node);

Genotype make_genotype(double alpha_node);

struct AttachmentConfig {
  std::vector<Eigen::Vector2d> points; ///< body-frame perimeter points
  std::vector<int> nodes;              ///< set bit indices
  int robot_count = 0;
  bool feasible = false; ///< false for the all-zero genotype
};

AttachmentConfig decode(const Genotype& genotype,
                        const sim::PayloadSpec& payload);

/// True if any two tether chords (attachment point -> robot position,
/// both in incline-plane 2D coordinates) intersect at a point interior
/// to both segments.
bool tethers_cross(const std::vector<Eigen::Vector2d>& attach_points,
                   const std::vector<Eigen::Vector2d>& robot_positions);

}  // namespace tetherhop::evo

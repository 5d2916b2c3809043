// Copyright (c) 2026 tetherhop contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

namespace tetherhop::evo {

/// Oriented objectives: f1 maximized (distance), f2 and f3 minimized
/// (peak and mean payload oscillation).
struct EvalResult {
  double f1 = 0.0;
  double f2 = 0.0;
  double f3 = 0.0;
  bool feasible = false;
  int robots_used = 0;
};

struct GAParams {
  int pop_A = 50;
  int off_B = 50;
  double p_cross = 0.8;
  double p_mut = 0.2; ///< per-bit flip probability
  int generations = 21;
  std::array<double, 3> weights{0.5, 0.25, 0.25};
  std::uint64_t seed = 0;

  void validate() const;
};

/// Constrained domination: a feasible individual dominates any infeasible
/// one; two feasible individuals compare by Pareto domination on the
/// oriented objectives; two infeasible ones never dominate each other.
bool dominates(const EvalResult& a, const EvalResult& b);

struct SortResult {
  std::vector<int> rank;
  std::vector<double> crowding;
  std::vector<std::vector<int>> fronts; ///< fronts[0] is non-dominated
};

/// Fast non-dominated sort with per-front crowding distances (front
/// extremes get infinite distance).
SortResult nondominated_sort(const std::vector<EvalResult>& results);

/// Per-individual weighted fitness in [0, 1]: objectives min-max
/// normalized over the generation, minimized objectives entering as
/// (1 - normalized) so higher fitness is always better. Degenerate
/// spread maps to 0.5.
std::vector<double> scalar_fitness(const std::vector<EvalResult>& results,
                                   const std::array<double, 3>& weights);

struct IndividualRecord {
  std::vector<std::uint8_t> bits;
  EvalResult result;
  int rank = 0;
  double crowding = 0.0;
  double fitness = 0.0;
};

struct EvoHistory {
  /// One entry per generation, each holding the full surviving population.
  std::vector<std::vector<IndividualRecord>> generations;
  /// Feasible rank-0 members of the final population, deduplicated.
  std::vector<IndividualRecord> archive;
};

using EvalFn = std::function<EvalResult(const std::vector<std::uint8_t>&)>;

/// NSGA-II main loop: binary tournament on (rank, crowding), one-point
/// crossover, per-bit mutation, combined parent+offspring survival of the
/// top pop_A by (rank, crowding). Fully deterministic under params.seed.
EvoHistory evolve_core(const GAParams& params, int genotype_bits,
                       const EvalFn& evaluate);

}  // namespace tetherhop::evo

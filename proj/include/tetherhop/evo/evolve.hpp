// Copyright (c) 2026 tetherhop contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "tetherhop/evo/genotype.hpp"
#include "tetherhop/evo/nsga2.hpp"
#include "tetherhop/sim/scenario.hpp"

namespace tetherhop::evo {

/// Runs the climb episode for one attachment genotype and scores it:
/// f1 = |R_final - R_0| (maximize), f2 = peak oscillation angle,
/// f3 = mean oscillation angle (both minimized). Infeasible when the
/// genotype decodes to zero robots, any two tethers cross at any recorded
/// sample, the episode aborts, or the schedule is infeasible. The robot
/// and tether entries of `scenario` act as templates replicated per
/// attachment; the scenario's fuel budget is the fixed energy allowance.
EvalResult evaluate(const Genotype& genotype,
                    const sim::ScenarioSpec& scenario);

/// NSGA-II search over perimeter-attachment genotypes of spacing
/// alpha_node degrees on the given climb scenario.
EvoHistory evolve(const GAParams& params, const sim::ScenarioSpec& scenario,
                  double alpha_node);

}  // namespace tetherhop::evo

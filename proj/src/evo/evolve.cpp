// Copyright (c) 2026 tetherhop contributors
// SPDX-License-Identifier: Apache-2.0

#include "tetherhop/evo/evolve.hpp"

#include <algorithm>

#include "tetherhop/gait/climb.hpp"
#include "tetherhop/sim/forces.hpp"

namespace tetherhop::evo {

namespace {

/// Incline-plane chord endpoints for the crossing test at one state.
bool state_has_crossing(const sim::SystemState& state,
                        const sim::SimSpecs& specs) {
  const int n = state.robot_count();
  if (n < 2) return false;
  std::vector<Eigen::Vector2d> attach(n), robots(n);
  for (int i = 0; i < n; ++i) {
    attach[i] = sim::attachment_world(state.R, state.phi,
                                      specs.payload.attachments[i])
                    .head<2>();
    robots[i] = state.r[i].head<2>();
  }
  return tethers_cross(attach, robots);
}

}  // namespace

EvalResult evaluate(const Genotype& genotype,
                    const sim::ScenarioSpec& scenario) {
  EvalResult result;
  const AttachmentConfig config = decode(genotype, scenario.specs.payload);
  result.robots_used = config.robot_count;
  if (!config.feasible) return result;
  if (scenario.specs.robots.empty() || scenario.specs.tethers.empty())
    throw sim::ConfigError("evaluate: scenario needs robot/tether templates");

  sim::ScenarioSpec variant = scenario;
  variant.specs.payload.attachments = config.points;
  variant.specs.robots.assign(config.robot_count, scenario.specs.robots[0]);
  variant.specs.tethers.assign(config.robot_count, scenario.specs.tethers[0]);
  variant.robot_start.clear();

  const sim::SystemState start = sim::initial_state(variant);
  if (state_has_crossing(start, variant.specs)) return result;

  gait::ClimbSchedule schedule;
  try {
    schedule = gait::plan_climb_sequence(
        start, variant.controller.goal_dir, variant.controller.hop_len,
        variant.controller.n_hops, variant.specs, variant.controller);
  } catch (const gait::ClimbInfeasible&) {
    return result;
  }

  const gait::EpisodeResult episode = gait::run_episode(variant, schedule);

  const auto& samples = episode.trajectory.samples;
  result.f1 = (episode.final_state().R - start.R).norm();
  bool crossed = false;
  double sum = 0.0;
  for (const auto& sample : samples) {
    result.f2 = std::max(result.f2, sample.osc_angle);
    sum += sample.osc_angle;
    crossed = crossed || state_has_crossing(sample.state, variant.specs);
  }
  result.f3 = samples.empty() ? 0.0 : sum / static_cast<double>(samples.size());
  result.feasible = !episode.aborted && !crossed;
  return result;
}

EvoHistory evolve(const GAParams& params, const sim::ScenarioSpec& scenario,
                  double alpha_node) {
  const int m = genotype_length(alpha_node);
  const EvalFn eval_fn = [&](const std::vector<std::uint8_t>& bits) {
    Genotype genotype;
    genotype.bits = bits;
    genotype.alpha_node = alpha_node;
    return evaluate(genotype, scenario);
  };
  return evolve_core(params, m, eval_fn);
}

}  // namespace tetherhop::evo

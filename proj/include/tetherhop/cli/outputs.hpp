// Copyright (c) 2026 tetherhop contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "tetherhop/evo/nsga2.hpp"
#include "tetherhop/gait/climb.hpp"
#include "tetherhop/grip/spines.hpp"
#include "tetherhop/planner/plan.hpp"
#include "tetherhop/sim/scenario.hpp"

namespace tetherhop::cli {

/// One row per sample: time, per-robot kinematics/grip/fuel/thrust, then
/// payload state and the oscillation angle.
void write_trajectory_csv(const sim::Trajectory& trajectory,
                          const std::string& path);

/// Staircase plot data: t, y_robot0..N-1, y_payload.
void write_staircase_csv(const sim::Trajectory& trajectory,
                         const std::string& path);

nlohmann::json episode_summary_json(const sim::ScenarioSpec& scenario,
                                    const gait::EpisodeResult& episode);

/// Full per-generation history: gen, individual, bits, objectives,
/// feasibility, rank, crowding, fitness.
void write_history_csv(const evo::EvoHistory& history,
                       const std::string& path);

/// Fitness-vs-generation data with one mean row per generation.
void write_fitness_csv(const evo::EvoHistory& history, const std::string& path);

nlohmann::json archive_json(const evo::EvoHistory& history);

/// Profile/trace/site data for one surface row at several tip radii:
/// x, surface_h, then traced_<r>um and site_<r>um columns per radius.
void write_profile_csv(const std::vector<double>& profile, double resolution,
                       const std::vector<double>& tip_radii,
                       const std::vector<grip::GripSiteReport>& reports,
                       const std::string& path);

/// Per-robot waypoint CSVs plus the payload (centroid) waypoints; returns
/// the file paths written.
std::vector<std::string> write_path_csvs(const planner::Path& path,
                                         const std::string& out_dir);

nlohmann::json plan_meta_json(const planner::PlanResult& result);

}  // namespace tetherhop::cli

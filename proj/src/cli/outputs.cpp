// Copyright (c) 2026 tetherhop contributors
// SPDX-License-Identifier: Apache-2.0

#include "tetherhop/cli/outputs.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>

#include <nlohmann/json.hpp>

#include "tetherhop/io/csv.hpp"
#include "tetherhop/sim/stepper.hpp"

namespace tetherhop::cli {

using nlohmann::json;

void write_trajectory_csv(const sim::Trajectory& trajectory,
                          const std::string& path) {
  if (trajectory.samples.empty()) return;
  const int n = trajectory.samples.front().state.robot_count();

  std::vector<std::string> header = {"t"};
  for (int i = 0; i < n; ++i) {
    const std::string r = std::to_string(i);
    for (const char* f : {"r", "v"}) {
      for (const char* axis : {"x", "y", "z"}) {
        header.push_back(std::string(f) + r + "_" + axis);
      }
    }
    header.push_back("grip" + r);
    header.push_back("fuel" + r);
    for (const char* axis : {"x", "y", "z"}) {
      header.push_back("T" + r + "_" + axis);
    }
  }
  for (const char* c : {"R_x", "R_y", "R_z", "V_x", "V_y", "V_z", "phi",
                        "phi_dot", "theta_osc"}) {
    header.push_back(c);
  }

  io::CsvWriter csv(path, header);
  for (const auto& sample : trajectory.samples) {
    const sim::SystemState& s = sample.state;
    csv.begin_row();
    csv.field(s.t);
    for (int i = 0; i < n; ++i) {
      for (int a = 0; a < 3; ++a) csv.field(s.r[i][a]);
      for (int a = 0; a < 3; ++a) csv.field(s.v[i][a]);
      csv.field(static_cast<long>(s.gripped[i]));
      csv.field(s.fuel_used[i]);
      for (int a = 0; a < 3; ++a) csv.field(sample.thrusts[i][a]);
    }
    for (int a = 0; a < 3; ++a) csv.field(s.R[a]);
    for (int a = 0; a < 3; ++a) csv.field(s.V[a]);
    csv.field(s.phi);
    csv.field(s.phi_dot);
    csv.field(sample.osc_angle);
    csv.end_row();
  }
}

void write_staircase_csv(const sim::Trajectory& trajectory,
                         const std::string& path) {
  if (trajectory.samples.empty()) return;
  const int n = trajectory.samples.front().state.robot_count();
  std::vector<std::string> header = {"t"};
  for (int i = 0; i < n; ++i) header.push_back("y_robot" + std::to_string(i));
  header.push_back("y_payload");

  io::CsvWriter csv(path, header);
  for (const auto& sample : trajectory.samples) {
    csv.begin_row();
    csv.field(sample.state.t);
    for (int i = 0; i < n; ++i) csv.field(sample.state.r[i].y());
    csv.field(sample.state.R.y());
    csv.end_row();
  }
}

json episode_summary_json(const sim::ScenarioSpec& scenario,
                          const gait::EpisodeResult& episode) {
  const auto& samples = episode.trajectory.samples;
  json j;
  j["aborted"] = episode.aborted;
  j["abort_reason"] = episode.abort_reason;

  if (!samples.empty()) {
    const sim::SystemState& last = samples.back().state;
    const Eigen::Vector3d displacement = last.R - scenario.payload_start;
    j["duration"] = last.t;
    j["payload"] = {
        {"start",
         {scenario.payload_start.x(), scenario.payload_start.y(),
          scenario.payload_start.z()}},
        {"final", {last.R.x(), last.R.y(), last.R.z()}},
        {"displacement",
         {displacement.x(), displacement.y(), displacement.z()}},
        {"distance", displacement.norm()},
        {"yaw", last.phi},
    };

    double osc_max = 0.0, osc_sum = 0.0;
    for (const auto& s : samples) {
      osc_max = std::max(osc_max, s.osc_angle);
      osc_sum += s.osc_angle;
    }
    j["oscillation"] = {{"max", osc_max},
                        {"mean", osc_sum / static_cast<double>(samples.size())}};

    json fuel = json::array();
    for (double f : last.fuel_used) fuel.push_back(f);
    j["fuel_used"] = fuel;

    json robots = json::array();
    for (int i = 0; i < last.robot_count(); ++i) {
      robots.push_back({{"r", {last.r[i].x(), last.r[i].y(), last.r[i].z()}},
                        {"gripped", last.gripped[i] != 0}});
    }
    j["robots_final"] = robots;

    // Energy ledger over the recorded samples.
    double e0 = 0.0, e1 = 0.0, emin = 0.0, emax = 0.0;
    e0 = emin = emax = sim::mechanical_energy(samples.front().state,
                                              scenario.specs);
    for (const auto& s : samples) {
      const double e = sim::mechanical_energy(s.state, scenario.specs);
      emin = std::min(emin, e);
      emax = std::max(emax, e);
      e1 = e;
    }
    j["energy"] = {
        {"initial", e0}, {"final", e1}, {"min", emin}, {"max", emax}};
  }

  json events = json::array();
  for (const auto& e : episode.trajectory.events) {
    events.push_back({{"t", e.t},
                      {"robot", e.robot},
                      {"type", sim::to_string(e.type)},
                      {"detail", e.detail}});
  }
  j["events"] = events;

  json hops = json::array();
  for (const auto& h : episode.hops) {
    hops.push_back({{"robot", h.robot},
                    {"target", {h.target.x(), h.target.y(), h.target.z()}},
                    {"landed", {h.landed.x(), h.landed.y(), h.landed.z()}},
                    {"landing_error", h.landing_error},
                    {"tether_taut_in_flight", h.tether_taut_in_flight}});
  }
  j["hops"] = hops;
  return j;
}

namespace {

std::string bits_string(const std::vector<std::uint8_t>& bits) {
  std::string s(bits.size(), '0');
  for (std::size_t i = 0; i < bits.size(); ++i) s[i] = bits[i] ? '1' : '0';
  return s;
}

}  // namespace

void write_history_csv(const evo::EvoHistory& history,
                       const std::string& path) {
  io::CsvWriter csv(path, {"gen", "individual", "bits", "f1", "f2", "f3",
                           "feasible", "robots", "rank", "crowding",
                           "fitness"});
  for (std::size_t g = 0; g < history.generations.size(); ++g) {
    const auto& gen = history.generations[g];
    for (std::size_t i = 0; i < gen.size(); ++i) {
      const auto& rec = gen[i];
      csv.begin_row();
      csv.field(static_cast<long>(g));
      csv.field(static_cast<long>(i));
      csv.field(bits_string(rec.bits));
      csv.field(rec.result.f1);
      csv.field(rec.result.f2);
      csv.field(rec.result.f3);
      csv.field(static_cast<long>(rec.result.feasible ? 1 : 0));
      csv.field(static_cast<long>(rec.result.robots_used));
      csv.field(static_cast<long>(rec.rank));
      csv.field(rec.crowding);
      csv.field(rec.fitness);
      csv.end_row();
    }
  }
}

void write_fitness_csv(const evo::EvoHistory& history, const std::string& path) {
  io::CsvWriter csv(path, {"gen", "individual", "fitness"});
  for (std::size_t g = 0; g < history.generations.size(); ++g) {
    const auto& gen = history.generations[g];
    double sum = 0.0;
    for (std::size_t i = 0; i < gen.size(); ++i) {
      csv.begin_row();
      csv.field(static_cast<long>(g));
      csv.field(std::to_string(i));
      csv.field(gen[i].fitness);
      csv.end_row();
      sum += gen[i].fitness;
    }
    csv.begin_row();
    csv.field(static_cast<long>(g));
    csv.field(std::string("mean"));
    csv.field(sum / static_cast<double>(gen.size()));
    csv.end_row();
  }
}

json archive_json(const evo::EvoHistory& history) {
  json arr = json::array();
  for (const auto& rec : history.archive) {
    json nodes = json::array();
    for (std::size_t k = 0; k < rec.bits.size(); ++k) {
      if (rec.bits[k]) nodes.push_back(static_cast<int>(k));
    }
    arr.push_back({{"bits", bits_string(rec.bits)},
                   {"nodes", nodes},
                   {"robots", rec.result.robots_used},
                   {"f1", rec.result.f1},
                   {"f2", rec.result.f2},
                   {"f3", rec.result.f3},
                   {"fitness", rec.fitness}});
  }
  return {{"archive", arr}};
}

void write_profile_csv(const std::vector<double>& profile, double resolution,
                       const std::vector<double>& tip_radii,
                       const std::vector<grip::GripSiteReport>& reports,
                       const std::string& path) {
  std::vector<std::string> header = {"x", "surface_h"};
  auto radius_label = [](double r_s) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", r_s * 1e6);
    return std::string(buf) + "um";
  };
  for (double r_s : tip_radii) {
    header.push_back("traced_" + radius_label(r_s));
    header.push_back("site_" + radius_label(r_s));
  }

  io::CsvWriter csv(path, header);
  for (std::size_t j = 0; j < profile.size(); ++j) {
    csv.begin_row();
    csv.field(static_cast<double>(j) * resolution);
    csv.field(profile[j]);
    for (std::size_t t = 0; t < tip_radii.size(); ++t) {
      csv.field(reports[t].traced[j]);
      const bool site =
          std::binary_search(reports[t].site_indices.begin(),
                             reports[t].site_indices.end(),
                             static_cast<int>(j));
      csv.field(static_cast<long>(site ? 1 : 0));
    }
    csv.end_row();
  }
}

std::vector<std::string> write_path_csvs(const planner::Path& path,
                                         const std::string& out_dir) {
  std::vector<std::string> files;
  for (int r = 0; r < 3; ++r) {
    const std::string file =
        (std::filesystem::path(out_dir) /
         ("path_robot" + std::to_string(r) + ".csv"))
            .string();
    io::CsvWriter csv(file, {"wp", "x", "y"});
    for (std::size_t k = 0; k < path.robots[r].size(); ++k) {
      csv.begin_row();
      csv.field(static_cast<long>(k));
      csv.field(path.robots[r][k].x());
      csv.field(path.robots[r][k].y());
      csv.end_row();
    }
    files.push_back(file);
  }
  const std::string file =
      (std::filesystem::path(out_dir) / "path_payload.csv").string();
  io::CsvWriter csv(file, {"wp", "x", "y"});
  const auto payload = path.payload.size() == path.length()
                           ? path.payload
                           : planner::payload_waypoints(path);
  for (std::size_t k = 0; k < payload.size(); ++k) {
    csv.begin_row();
    csv.field(static_cast<long>(k));
    csv.field(payload[k].x());
    csv.field(payload[k].y());
    csv.end_row();
  }
  files.push_back(file);
  return files;
}

json plan_meta_json(const planner::PlanResult& result) {
  return {{"status", planner::to_string(result.status)},
          {"message", result.message},
          {"iterations", result.stats.iterations},
          {"cells_explored", result.stats.cells_created},
          {"tree_nodes", result.stats.tree_nodes},
          {"payload_rejections", result.stats.payload_rejections},
          {"waypoints", result.path.length()}};
}

}  // namespace tetherhop::cli

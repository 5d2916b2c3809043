// Copyright (c) 2026 tetherhop contributors
// SPDX-License-Identifier: Apache-2.0

#include "tetherhop/cli/commands.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "tetherhop/cli/manifest.hpp"
#include "tetherhop/cli/outputs.hpp"
#include "tetherhop/evo/evolve.hpp"
#include "tetherhop/gait/climb.hpp"
#include "tetherhop/grip/spines.hpp"
#include "tetherhop/grip/surface.hpp"
#include "tetherhop/io/csv.hpp"
#include "tetherhop/planner/heightmap.hpp"
#include "tetherhop/planner/plan.hpp"
#include "tetherhop/sim/scenario.hpp"

namespace tetherhop::cli {

using nlohmann::json;

namespace {

namespace fs = std::filesystem;

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(Clock::now() - start_).count();
  }

 private:
  using Clock = std::chrono::steady_clock;
  Clock::time_point start_ = Clock::now();
};

std::string resolve_out_dir(const std::string& flag_value) {
  std::string dir = flag_value;
  if (dir.empty()) {
    if (const char* env = std::getenv("TETHERHOP_OUT_DIR")) dir = env;
  }
  if (dir.empty()) dir = "tetherhop_out";
  fs::create_directories(dir);
  return dir;
}

std::string join_path(const std::string& dir, const std::string& name) {
  return (fs::path(dir) / name).string();
}

Eigen::Vector3d parse_vec3(const std::string& text, const char* flag) {
  Eigen::Vector3d v;
  std::stringstream ss(text);
  std::string part;
  for (int i = 0; i < 3; ++i) {
    if (!std::getline(ss, part, ','))
      throw sim::ConfigError(std::string(flag) + ": expected x,y,z");
    v[i] = std::stod(part);
  }
  return v;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw sim::ConfigError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw sim::ConfigError("JSON parse error in " + path + ": " + e.what());
  }
  return j;
}

// ---------------------------------------------------------------------
// simulate

struct SimulateOpts {
  std::string scenario_file;
  std::string out;
  std::optional<int> n_hops;
  std::optional<double> hop_len;
  std::optional<double> settle;
  std::optional<double> dt;
  std::optional<int> record_every;
  std::optional<std::uint64_t> seed;
  std::string goal_dir;
};

int run_simulate(const SimulateOpts& opts) {
  Timer total;
  auto scenario = sim::load_scenario(opts.scenario_file);
  if (opts.n_hops) scenario.controller.n_hops = *opts.n_hops;
  if (opts.hop_len) scenario.controller.hop_len = *opts.hop_len;
  if (opts.settle) scenario.controller.settle_time = *opts.settle;
  if (opts.dt) scenario.controller.dt = *opts.dt;
  if (opts.record_every) scenario.controller.record_every = *opts.record_every;
  if (opts.seed) scenario.master_seed = *opts.seed;
  if (!opts.goal_dir.empty()) {
    const Eigen::Vector3d v = parse_vec3(opts.goal_dir + ",0", "--goal-dir");
    scenario.controller.goal_dir = v.head<2>();
  }
  scenario.validate();

  const std::string out_dir = resolve_out_dir(opts.out);
  RunManifest manifest;
  manifest.subcommand = "simulate";
  manifest.config = sim::scenario_to_json(scenario);
  manifest.seed = scenario.master_seed;

  const auto state0 = sim::initial_state(scenario);
  gait::ClimbSchedule schedule;
  try {
    Timer planning;
    schedule = gait::plan_climb_sequence(
        state0, scenario.controller.goal_dir, scenario.controller.hop_len,
        scenario.controller.n_hops, scenario.specs, scenario.controller);
    manifest.timings_s["plan_schedule"] = planning.seconds();
  } catch (const gait::ClimbInfeasible& e) {
    const json err = {{"error", "infeasible_hop"},
                      {"robot", e.robot()},
                      {"hop", e.hop_index()},
                      {"min_required_thrust", e.min_required_thrust()}};
    io::write_text_file(join_path(out_dir, "summary.json"),
                        err.dump(2) + "\n");
    manifest.outputs.push_back(join_path(out_dir, "summary.json"));
    manifest.timings_s["total"] = total.seconds();
    manifest.write(out_dir);
    std::cout << err.dump(2) << "\n";
    return 1;
  }

  Timer sim_timer;
  const auto episode = gait::run_episode(scenario, schedule);
  manifest.timings_s["simulate"] = sim_timer.seconds();

  const std::string traj_path = join_path(out_dir, "trajectory.csv");
  const std::string stairs_path = join_path(out_dir, "staircase.csv");
  const std::string summary_path = join_path(out_dir, "summary.json");
  write_trajectory_csv(episode.trajectory, traj_path);
  write_staircase_csv(episode.trajectory, stairs_path);
  io::write_text_file(summary_path,
                      episode_summary_json(scenario, episode).dump(2) + "\n");
  manifest.outputs = {traj_path, stairs_path, summary_path};
  manifest.timings_s["total"] = total.seconds();
  manifest.write(out_dir);

  std::cout << "simulate: " << episode.trajectory.samples.size()
            << " samples, " << episode.hops.size() << " hops -> " << out_dir
            << "\n";
  return episode.aborted ? 1 : 0;
}

// ---------------------------------------------------------------------
// hopsolve

struct HopsolveOpts {
  std::string r0 = "0,0,0";
  std::string r_tau;
  double mass = 1.0;
  double g = 9.81;
  double theta_deg = 0.0;
  double t_max = 10.0;
  double tau_min = 0.1;
  double tau_max = 1.0;
  std::string out;
};

int run_hopsolve(const HopsolveOpts& opts) {
  Timer total;
  gait::HopProblem problem;
  problem.r_0 = parse_vec3(opts.r0, "--r0");
  problem.r_tau = parse_vec3(opts.r_tau, "--rtau");
  problem.m_r = opts.mass;
  const double theta = opts.theta_deg * M_PI / 180.0;
  problem.f_g = {0.0, -opts.g * std::sin(theta), -opts.g * std::cos(theta)};
  problem.t_max = opts.t_max;
  problem.tau_min = opts.tau_min;
  problem.tau_max = opts.tau_max;
  problem.validate();

  const std::string out_dir = resolve_out_dir(opts.out);
  RunManifest manifest;
  manifest.subcommand = "hopsolve";
  manifest.config = {{"r0", opts.r0},          {"rtau", opts.r_tau},
                     {"m", opts.mass},         {"g", opts.g},
                     {"theta_deg", opts.theta_deg}, {"t_max", opts.t_max},
                     {"tau_min", opts.tau_min}, {"tau_max", opts.tau_max}};

  json result;
  int status = 0;
  try {
    const auto sol = gait::solve_hop(problem);
    result = {{"feasible", true},
              {"thrust", {sol.thrust.x(), sol.thrust.y(), sol.thrust.z()}},
              {"thrust_norm", sol.thrust.norm()},
              {"tau", sol.tau},
              {"cost", sol.cost}};
  } catch (const gait::InfeasibleHop& e) {
    result = {{"feasible", false},
              {"error", "infeasible_hop"},
              {"min_required_thrust", e.min_required_thrust()},
              {"t_max", problem.t_max}};
    status = 1;
  }

  const std::string sol_path = join_path(out_dir, "hop_solution.json");
  io::write_text_file(sol_path, result.dump(2) + "\n");
  manifest.outputs = {sol_path};
  manifest.timings_s["total"] = total.seconds();
  manifest.write(out_dir);
  std::cout << result.dump(2) << "\n";
  return status;
}

// ---------------------------------------------------------------------
// surface

struct SurfaceOpts {
  double rms = 100e-6;
  double extent = 5e-3;
  double resolution = 10e-6;
  double corr_cells = 10.0;
  std::uint64_t seed = 0;
  std::vector<double> tip_radii_um = {10.0, 50.0, 100.0};
  double psi_load_deg = 0.0;
  double mu_f = 1.0;
  std::optional<double> sigma_max;
  std::optional<double> e_mod;
  std::optional<double> nu;
  std::optional<int> count_s;
  std::string out;
};

int run_surface(const SurfaceOpts& opts) {
  Timer total;
  grip::SurfaceParams params;
  params.target_rms = opts.rms;
  params.extent = opts.extent;
  params.resolution = opts.resolution;
  params.correlation_cells = opts.corr_cells;
  params.seed = opts.seed;

  const bool material_given = opts.sigma_max || opts.e_mod || opts.nu ||
                              opts.count_s;
  const bool material_complete = opts.sigma_max && opts.e_mod && opts.nu &&
                                 opts.count_s;
  if (material_given && !material_complete) {
    throw sim::ConfigError(
        "surface: material constants have no defaults; give all of "
        "--sigma-max, --emod, --nu, --spines or none");
  }

  const auto surface = grip::gen_surface(params);
  const auto profile = surface.row(surface.ny / 2);
  const double psi_min =
      grip::min_grip_angle(opts.psi_load_deg * M_PI / 180.0, opts.mu_f);

  std::vector<double> tip_radii;
  for (double um : opts.tip_radii_um) tip_radii.push_back(um * 1e-6);

  std::vector<grip::GripSiteReport> reports;
  json per_radius = json::array();
  for (double r_s : tip_radii) {
    grip::GripSiteReport report;
    report.traced = grip::trace_profile(profile, r_s, surface.resolution);
    report.psi_profile =
        grip::normal_angle_profile(report.traced, surface.resolution);
    report.site_indices =
        grip::find_grip_sites(report.traced, surface.resolution, psi_min);

    json entry = {{"tip_radius", r_s},
                  {"site_count", report.site_indices.size()},
                  {"site_indices", report.site_indices}};
    if (material_complete) {
      grip::SpineModel spine;
      spine.r_s = r_s;
      spine.psi_load = opts.psi_load_deg * M_PI / 180.0;
      spine.mu_f = opts.mu_f;
      spine.sigma_max = *opts.sigma_max;
      spine.E_mod = *opts.e_mod;
      spine.nu = *opts.nu;
      spine.count_s = *opts.count_s;
      spine.validate();
      const auto full =
          grip::analyze_profile(profile, spine, surface.resolution);
      report.per_site_fmax = full.per_site_fmax;
      entry["f_load"] =
          grip::aggregate_load(spine, surface, psi_min, params.seed);
      entry["per_site_fmax"] = full.per_site_fmax;
    }
    per_radius.push_back(entry);
    reports.push_back(std::move(report));
  }

  const std::string out_dir = resolve_out_dir(opts.out);
  const std::string grid_path = join_path(out_dir, "surface.csv");
  const std::string profile_path = join_path(out_dir, "profile.csv");
  const std::string report_path = join_path(out_dir, "report.json");

  grip::save_surface_csv(surface, grid_path);
  write_profile_csv(profile, surface.resolution, tip_radii, reports,
                    profile_path);
  const json report = {{"target_rms", opts.rms},
                       {"measured_rms", surface.measured_rms()},
                       {"resolution", surface.resolution},
                       {"psi_min", psi_min},
                       {"per_radius", per_radius}};
  io::write_text_file(report_path, report.dump(2) + "\n");

  RunManifest manifest;
  manifest.subcommand = "surface";
  manifest.config = {{"rms", opts.rms},
                     {"extent", opts.extent},
                     {"resolution", opts.resolution},
                     {"corr_cells", opts.corr_cells},
                     {"tip_radii_um", opts.tip_radii_um},
                     {"psi_load_deg", opts.psi_load_deg},
                     {"mu_f", opts.mu_f}};
  manifest.seed = opts.seed;
  manifest.outputs = {grid_path, profile_path, report_path};
  manifest.timings_s["total"] = total.seconds();
  manifest.write(out_dir);

  std::cout << "surface: rms " << surface.measured_rms() << " m, "
            << per_radius.size() << " tip radii -> " << out_dir << "\n";
  return 0;
}

// ---------------------------------------------------------------------
// evolve

struct EvolveOpts {
  std::string scenario_file;
  double alpha_node = 15.0;
  int pop = 50;
  int offspring = 50;
  int generations = 21;
  double p_cross = 0.8;
  double p_mut = 0.2;
  std::vector<double> weights = {0.5, 0.25, 0.25};
  std::uint64_t seed = 0;
  std::string out;
};

int run_evolve(const EvolveOpts& opts) {
  Timer total;
  auto scenario = sim::load_scenario(opts.scenario_file);
  scenario.master_seed = opts.seed;

  evo::GAParams params;
  params.pop_A = opts.pop;
  params.off_B = opts.offspring;
  params.generations = opts.generations;
  params.p_cross = opts.p_cross;
  params.p_mut = opts.p_mut;
  if (opts.weights.size() != 3)
    throw sim::ConfigError("evolve: --weights needs three values");
  params.weights = {opts.weights[0], opts.weights[1], opts.weights[2]};
  params.seed = opts.seed;
  params.validate();

  Timer evolve_timer;
  const auto history = evo::evolve(params, scenario, opts.alpha_node);

  const std::string out_dir = resolve_out_dir(opts.out);
  const std::string history_path = join_path(out_dir, "history.csv");
  const std::string fitness_path = join_path(out_dir, "fitness.csv");
  const std::string archive_path = join_path(out_dir, "archive.json");
  write_history_csv(history, history_path);
  write_fitness_csv(history, fitness_path);
  io::write_text_file(archive_path, archive_json(history).dump(2) + "\n");

  RunManifest manifest;
  manifest.subcommand = "evolve";
  manifest.config = {{"scenario", sim::scenario_to_json(scenario)},
                     {"alpha_node", opts.alpha_node},
                     {"pop", params.pop_A},
                     {"offspring", params.off_B},
                     {"generations", params.generations},
                     {"p_cross", params.p_cross},
                     {"p_mut", params.p_mut},
                     {"weights", opts.weights}};
  manifest.seed = opts.seed;
  manifest.outputs = {history_path, fitness_path, archive_path};
  manifest.timings_s["evolve"] = evolve_timer.seconds();
  manifest.timings_s["total"] = total.seconds();
  manifest.write(out_dir);

  std::cout << "evolve: " << history.generations.size() << " generations, "
            << history.archive.size() << " archive members -> " << out_dir
            << "\n";
  return 0;
}

// ---------------------------------------------------------------------
// plan

struct PlanOpts {
  std::string heightmap_file;
  std::string config_file;
  std::uint64_t seed = 0;
  std::string out;
  bool emit_mask = false;
};

int run_plan(const PlanOpts& opts) {
  Timer total;
  const json config = load_json_file(opts.config_file);

  auto require = [&](const char* key) {
    if (!config.contains(key))
      throw sim::ConfigError(std::string("plan config: missing ") + key);
    return config.at(key);
  };

  const double cell_size = require("cell_size").get<double>();
  Eigen::Vector2d origin(0.0, 0.0);
  if (config.contains("origin")) {
    origin = {config["origin"][0].get<double>(),
              config["origin"][1].get<double>()};
  }
  const double vscale =
      config.contains("vscale") ? config["vscale"].get<double>() : 1.0;

  Timer load_timer;
  const auto hm =
      planner::load_heightmap(opts.heightmap_file, cell_size, origin, vscale);
  const auto mask =
      planner::gradient_obstacles(hm, require("grad_threshold").get<double>());

  planner::PlanProblem problem;
  auto read_triplet = [&](const char* key, planner::JointState& dst) {
    const json& arr = require(key);
    if (!arr.is_array() || arr.size() != 3)
      throw sim::ConfigError(std::string("plan config: ") + key +
                             " needs exactly 3 [x,y] pairs");
    for (int i = 0; i < 3; ++i) {
      dst[i] = {arr[i][0].get<double>(), arr[i][1].get<double>()};
    }
  };
  read_triplet("starts", problem.starts);
  read_triplet("goals", problem.goals);
  problem.sep_p = require("sep_p").get<double>();
  problem.robot_radius = require("robot_radius").get<double>();
  problem.payload_radius = require("payload_radius").get<double>();
  problem.max_hop = require("max_hop").get<double>();
  if (config.contains("time_budget"))
    problem.time_budget = config["time_budget"].get<double>();
  problem.validate();

  Timer plan_timer;
  const auto result = planner::plan(problem, mask, opts.seed);

  const std::string out_dir = resolve_out_dir(opts.out);
  RunManifest manifest;
  manifest.subcommand = "plan";
  manifest.config = config;
  manifest.config["heightmap"] = opts.heightmap_file;
  manifest.seed = opts.seed;
  manifest.timings_s["load"] = load_timer.seconds();
  manifest.timings_s["plan"] = result.stats.seconds;

  const std::string meta_path = join_path(out_dir, "plan_meta.json");
  io::write_text_file(meta_path, plan_meta_json(result).dump(2) + "\n");
  manifest.outputs.push_back(meta_path);

  if (result.status == planner::PlanStatus::Success) {
    for (const auto& file : write_path_csvs(result.path, out_dir)) {
      manifest.outputs.push_back(file);
    }
  }
  if (opts.emit_mask) {
    const std::string mask_path = join_path(out_dir, "mask.csv");
    planner::save_mask_csv(mask, mask_path);
    manifest.outputs.push_back(mask_path);
  }
  manifest.timings_s["total"] = total.seconds();
  manifest.write(out_dir);

  std::cout << "plan: " << planner::to_string(result.status) << " ("
            << result.stats.iterations << " iterations, "
            << result.path.length() << " waypoints) -> " << out_dir << "\n";
  return result.status == planner::PlanStatus::Success ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"tethered hopping-robot payload transport toolkit"};
  app.require_subcommand(1);

  SimulateOpts sim_opts;
  auto* sim_cmd = app.add_subcommand(
      "simulate", "run a climb episode from a scenario config");
  sim_cmd->add_option("--scenario", sim_opts.scenario_file,
                      "scenario JSON file")->required();
  sim_cmd->add_option("--out", sim_opts.out, "output directory");
  sim_cmd->add_option("--n-hops", sim_opts.n_hops, "override hop count");
  sim_cmd->add_option("--hop-len", sim_opts.hop_len, "override hop length");
  sim_cmd->add_option("--settle", sim_opts.settle, "override settle time");
  sim_cmd->add_option("--dt", sim_opts.dt, "override integrator step");
  sim_cmd->add_option("--record-every", sim_opts.record_every,
                      "override sampling stride");
  sim_cmd->add_option("--seed", sim_opts.seed, "override master seed");
  sim_cmd->add_option("--goal-dir", sim_opts.goal_dir,
                      "override hop direction as x,y");

  HopsolveOpts hop_opts;
  auto* hop_cmd =
      app.add_subcommand("hopsolve", "solve one minimum-thrust hop");
  hop_cmd->add_option("--r0", hop_opts.r0, "start position x,y,z");
  hop_cmd->add_option("--rtau", hop_opts.r_tau, "target position x,y,z")
      ->required();
  hop_cmd->add_option("--m", hop_opts.mass, "robot mass [kg]");
  hop_cmd->add_option("--g", hop_opts.g, "gravity [m/s^2]");
  hop_cmd->add_option("--theta-deg", hop_opts.theta_deg, "slope angle [deg]");
  hop_cmd->add_option("--tmax", hop_opts.t_max, "max thrust [N]");
  hop_cmd->add_option("--tau-min", hop_opts.tau_min, "min flight time [s]");
  hop_cmd->add_option("--tau-max", hop_opts.tau_max, "max flight time [s]");
  hop_cmd->add_option("--out", hop_opts.out, "output directory");

  SurfaceOpts surf_opts;
  auto* surf_cmd = app.add_subcommand(
      "surface", "generate a rough surface and trace spine grip sites");
  surf_cmd->add_option("--rms", surf_opts.rms, "target RMS roughness [m]");
  surf_cmd->add_option("--extent", surf_opts.extent, "surface side [m]");
  surf_cmd->add_option("--resolution", surf_opts.resolution,
                       "sample spacing [m]");
  surf_cmd->add_option("--corr-cells", surf_opts.corr_cells,
                       "correlation length in cells");
  surf_cmd->add_option("--seed", surf_opts.seed, "surface seed");
  surf_cmd->add_option("--rs-um", surf_opts.tip_radii_um,
                       "spine tip radii [um]");
  surf_cmd->add_option("--psi-load-deg", surf_opts.psi_load_deg,
                       "spine load angle [deg]");
  surf_cmd->add_option("--mu-f", surf_opts.mu_f,
                       "spine-surface friction coefficient");
  surf_cmd->add_option("--sigma-max", surf_opts.sigma_max,
                       "spine tensile strength [Pa]");
  surf_cmd->add_option("--emod", surf_opts.e_mod, "elastic modulus [Pa]");
  surf_cmd->add_option("--nu", surf_opts.nu, "Poisson-type coefficient");
  surf_cmd->add_option("--spines", surf_opts.count_s, "spines per robot");
  surf_cmd->add_option("--out", surf_opts.out, "output directory");

  EvolveOpts evo_opts;
  auto* evo_cmd = app.add_subcommand(
      "evolve", "NSGA-II search over attachment genotypes");
  evo_cmd->add_option("--scenario", evo_opts.scenario_file,
                      "scenario JSON file")->required();
  evo_cmd->add_option("--alpha", evo_opts.alpha_node,
                      "node spacing [deg], must divide 360");
  evo_cmd->add_option("--pop", evo_opts.pop, "population size A");
  evo_cmd->add_option("--offspring", evo_opts.offspring, "offspring size B");
  evo_cmd->add_option("--gens", evo_opts.generations, "generation count");
  evo_cmd->add_option("--pcross", evo_opts.p_cross, "crossover probability");
  evo_cmd->add_option("--pmut", evo_opts.p_mut,
                      "per-bit mutation probability");
  evo_cmd->add_option("--weights", evo_opts.weights,
                      "fitness weights a1 a2 a3");
  evo_cmd->add_option("--seed", evo_opts.seed, "run seed")->required();
  evo_cmd->add_option("--out", evo_opts.out, "output directory");

  PlanOpts plan_opts;
  auto* plan_cmd = app.add_subcommand(
      "plan", "separation-constrained multi-robot path planning");
  plan_cmd->add_option("--heightmap", plan_opts.heightmap_file,
                       "terrain CSV or PGM")->required();
  plan_cmd->add_option("--config", plan_opts.config_file,
                       "plan problem JSON")->required();
  plan_cmd->add_option("--seed", plan_opts.seed, "planner seed")->required();
  plan_cmd->add_option("--out", plan_opts.out, "output directory");
  plan_cmd->add_flag("--emit-mask", plan_opts.emit_mask,
                     "also export the obstacle mask CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (sim_cmd->parsed()) return run_simulate(sim_opts);
    if (hop_cmd->parsed()) return run_hopsolve(hop_opts);
    if (surf_cmd->parsed()) return run_surface(surf_opts);
    if (evo_cmd->parsed()) return run_evolve(evo_opts);
    if (plan_cmd->parsed()) return run_plan(plan_opts);
  } catch (const sim::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace tetherhop::cli

// Copyright (c) 2026 tetherhop contributors
// SPDX-License-Identifier: Apache-2.0

#include "tetherhop/sim/scenario.hpp"

#include <cmath>
#include <fstream>

#include <nlohmann/json.hpp>

#include "tetherhop/sim/forces.hpp"

namespace tetherhop::sim {

using nlohmann::json;

void ControllerParams::validate() const {
  if (dt <= 0.0) throw ConfigError("controller: dt must be > 0");
  if (hop_len <= 0.0) throw ConfigError("controller: hop_len must be > 0");
  if (n_hops < 0) throw ConfigError("controller: n_hops must be >= 0");
  if (settle_time < 0.0) throw ConfigError("controller: settle_time must be >= 0");
  if (tau_min <= 0.0 || tau_max < tau_min)
    throw ConfigError("controller: require 0 < tau_min <= tau_max");
  if (record_every < 1) throw ConfigError("controller: record_every must be >= 1");
  if (goal_dir.norm() < 1e-12)
    throw ConfigError("controller: goal_dir must be nonzero");
}

void ScenarioSpec::validate() const {
  specs.validate();
  controller.validate();
  if (!robot_start.empty() &&
      robot_start.size() != specs.robots.size()) {
    throw ConfigError("scenario: robot_start count must match robots");
  }
}

namespace {

Eigen::Vector2d vec2_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2)
    throw ConfigError("scenario: expected a 2-element array");
  return {j[0].get<double>(), j[1].get<double>()};
}

Eigen::Vector3d vec3_from_json(const json& j) {
  if (!j.is_array() || j.size() != 3)
    throw ConfigError("scenario: expected a 3-element array");
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

template <typename T>
T get_or(const json& j, const char* key, T fallback) {
  if (j.contains(key)) return j.at(key).get<T>();
  return fallback;
}

double require_num(const json& j, const char* section, const char* key) {
  if (!j.contains(key))
    throw ConfigError(std::string("scenario: missing ") + section + "." + key);
  return j.at(key).get<double>();
}

WorldParams world_from_json(const json& j) {
  WorldParams world;
  world.g = require_num(j, "world", "g");
  if (j.contains("slope_theta_deg")) {
    world.slope_theta = j.at("slope_theta_deg").get<double>() * M_PI / 180.0;
  } else {
    world.slope_theta = require_num(j, "world", "slope_theta");
  }
  world.mu_v = get_or(j, "mu_v", 0.0);
  world.k_c = get_or(j, "k_c", 0.0);
  world.c_c = get_or(j, "c_c", 0.0);
  world.contact_exp_n = get_or(j, "contact_exp_n", 1.5);
  return world;
}

RobotSpec robot_from_json(const json& j) {
  RobotSpec robot;
  robot.m_r = require_num(j, "robot", "m_r");
  robot.radius_rho = require_num(j, "robot", "radius_rho");
  robot.f_load = require_num(j, "robot", "f_load");
  robot.sigmoid_k = get_or(j, "sigmoid_k", 15.0);
  robot.t_max = require_num(j, "robot", "t_max");
  robot.fuel_budget = require_num(j, "robot", "fuel_budget");
  return robot;
}

TetherSpec tether_from_json(const json& j) {
  TetherSpec tether;
  tether.k_t = require_num(j, "tether", "k_t");
  tether.c_t = require_num(j, "tether", "c_t");
  tether.l_0 = require_num(j, "tether", "l_0");
  return tether;
}

}  // namespace

ScenarioSpec scenario_from_json(const json& j) {
  ScenarioSpec scenario;
  if (!j.contains("world") || !j.contains("payload"))
    throw ConfigError("scenario: world and payload sections are required");

  scenario.specs.world = world_from_json(j.at("world"));

  const json& jp = j.at("payload");
  PayloadSpec& payload = scenario.specs.payload;
  payload.M = require_num(jp, "payload", "M");
  payload.I_z = require_num(jp, "payload", "I_z");
  payload.disk_radius = require_num(jp, "payload", "disk_radius");
  payload.k_r = get_or(jp, "k_r", 0.5);
  payload.c_r = get_or(jp, "c_r", 0.5);
  if (jp.contains("attachments_deg")) {
    for (const auto& a : jp.at("attachments_deg")) {
      const double ang = a.get<double>() * M_PI / 180.0;
      payload.attachments.emplace_back(payload.disk_radius * std::cos(ang),
                                       payload.disk_radius * std::sin(ang));
    }
  } else if (jp.contains("attachments")) {
    for (const auto& a : jp.at("attachments"))
      payload.attachments.push_back(vec2_from_json(a));
  }

  // Robots: either an explicit array or a template replicated per
  // attachment.
  if (j.contains("robots")) {
    for (const auto& r : j.at("robots"))
      scenario.specs.robots.push_back(robot_from_json(r));
  } else if (j.contains("robot")) {
    const RobotSpec robot = robot_from_json(j.at("robot"));
    scenario.specs.robots.assign(payload.attachments.size(), robot);
  } else {
    throw ConfigError("scenario: robots[] or robot template required");
  }

  if (j.contains("tethers")) {
    for (const auto& t : j.at("tethers"))
      scenario.specs.tethers.push_back(tether_from_json(t));
  } else if (j.contains("tether")) {
    const TetherSpec tether = tether_from_json(j.at("tether"));
    scenario.specs.tethers.assign(scenario.specs.robots.size(), tether);
  } else {
    throw ConfigError("scenario: tethers[] or tether template required");
  }

  if (j.contains("controller")) {
    const json& jc = j.at("controller");
    ControllerParams& ctrl = scenario.controller;
    ctrl.dt = get_or(jc, "dt", ctrl.dt);
    ctrl.hop_len = get_or(jc, "hop_len", ctrl.hop_len);
    ctrl.n_hops = get_or(jc, "n_hops", ctrl.n_hops);
    ctrl.settle_time = get_or(jc, "settle_time", ctrl.settle_time);
    ctrl.tau_min = get_or(jc, "tau_min", ctrl.tau_min);
    ctrl.tau_max = get_or(jc, "tau_max", ctrl.tau_max);
    ctrl.record_every = get_or(jc, "record_every", ctrl.record_every);
    if (jc.contains("goal_dir")) ctrl.goal_dir = vec2_from_json(jc.at("goal_dir"));
  }

  if (j.contains("initial")) {
    const json& ji = j.at("initial");
    if (ji.contains("payload_pos"))
      scenario.payload_start = vec3_from_json(ji.at("payload_pos"));
    scenario.payload_yaw0 = get_or(ji, "payload_yaw", 0.0);
    if (ji.contains("robot_pos")) {
      for (const auto& r : ji.at("robot_pos"))
        scenario.robot_start.push_back(vec3_from_json(r));
    }
  }

  if (j.contains("seeds")) {
    scenario.master_seed = get_or<std::uint64_t>(j.at("seeds"), "master", 0);
  }

  scenario.validate();
  return scenario;
}

nlohmann::json scenario_to_json(const ScenarioSpec& scenario) {
  json j;
  const WorldParams& w = scenario.specs.world;
  j["world"] = {{"g", w.g},
                {"slope_theta", w.slope_theta},
                {"mu_v", w.mu_v},
                {"k_c", w.k_c},
                {"c_c", w.c_c},
                {"contact_exp_n", w.contact_exp_n}};
  const PayloadSpec& p = scenario.specs.payload;
  json attachments = json::array();
  for (const auto& a : p.attachments) attachments.push_back({a.x(), a.y()});
  j["payload"] = {{"M", p.M},
                  {"I_z", p.I_z},
                  {"disk_radius", p.disk_radius},
                  {"k_r", p.k_r},
                  {"c_r", p.c_r},
                  {"attachments", attachments}};
  j["robots"] = json::array();
  for (const auto& r : scenario.specs.robots) {
    j["robots"].push_back({{"m_r", r.m_r},
                           {"radius_rho", r.radius_rho},
                           {"f_load", r.f_load},
                           {"sigmoid_k", r.sigmoid_k},
                           {"t_max", r.t_max},
                           {"fuel_budget", r.fuel_budget}});
  }
  j["tethers"] = json::array();
  for (const auto& t : scenario.specs.tethers) {
    j["tethers"].push_back({{"k_t", t.k_t}, {"c_t", t.c_t}, {"l_0", t.l_0}});
  }
  const ControllerParams& c = scenario.controller;
  j["controller"] = {{"dt", c.dt},
                     {"hop_len", c.hop_len},
                     {"n_hops", c.n_hops},
                     {"settle_time", c.settle_time},
                     {"tau_min", c.tau_min},
                     {"tau_max", c.tau_max},
                     {"record_every", c.record_every},
                     {"goal_dir", {c.goal_dir.x(), c.goal_dir.y()}}};
  json initial;
  initial["payload_pos"] = {scenario.payload_start.x(),
                            scenario.payload_start.y(),
                            scenario.payload_start.z()};
  initial["payload_yaw"] = scenario.payload_yaw0;
  if (!scenario.robot_start.empty()) {
    json rp = json::array();
    for (const auto& r : scenario.robot_start) rp.push_back({r.x(), r.y(), r.z()});
    initial["robot_pos"] = rp;
  }
  j["initial"] = initial;
  j["seeds"] = {{"master", scenario.master_seed}};
  return j;
}

ScenarioSpec load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open scenario file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ConfigError("scenario parse error in " + path + ": " + e.what());
  }
  return scenario_from_json(j);
}

SystemState initial_state(const ScenarioSpec& scenario) {
  scenario.validate();
  const int n = scenario.specs.robot_count();
  SystemState state;
  state.t = 0.0;
  state.R = scenario.payload_start;
  state.V.setZero();
  state.phi = scenario.payload_yaw0;
  state.phi_dot = 0.0;
  state.r.resize(n);
  state.v.assign(n, Eigen::Vector3d::Zero());
  state.gripped.assign(n, 1);
  state.fuel_used.assign(n, 0.0);

  for (int i = 0; i < n; ++i) {
    if (!scenario.robot_start.empty()) {
      state.r[i] = scenario.robot_start[i];
      continue;
    }
    const Eigen::Vector3d attach = attachment_world(
        scenario.payload_start, scenario.payload_yaw0,
        scenario.specs.payload.attachments[i]);
    Eigen::Vector2d dir = (attach - scenario.payload_start).head<2>();
    if (dir.norm() < 1e-12) dir = Eigen::Vector2d(0.0, 1.0);
    dir.normalize();
    const Eigen::Vector2d xy =
        attach.head<2>() + scenario.specs.tethers[i].l_0 * dir;
    state.r[i] = {xy.x(), xy.y(), scenario.specs.robots[i].radius_rho};
  }
  return state;
}

}  // namespace tetherhop::sim

// Copyright (c) 2026 tetherhop contributors
// SPDX-License-Identifier: Apache-2.0

#include "tetherhop/gait/climb.hpp"

#include <cmath>
#include <stdexcept>

#include "tetherhop/sim/forces.hpp"

namespace tetherhop::gait {

using sim::SimEvent;
using sim::SimEventType;
using sim::SystemState;

const sim::SystemState& EpisodeResult::final_state() const {
  if (trajectory.samples.empty())
    throw std::logic_error("EpisodeResult: empty trajectory");
  return trajectory.samples.back().state;
}

ClimbInfeasible::ClimbInfeasible(int robot, int hop_index, double min_required)
    : std::runtime_error("hop " + std::to_string(hop_index) + " for robot " +
                         std::to_string(robot) +
                         " is infeasible: requires thrust " +
                         std::to_string(min_required) + " N"),
      robot_(robot),
      hop_index_(hop_index),
      min_required_(min_required) {}

ClimbSchedule plan_climb_sequence(const SystemState& state,
                                  const Eigen::Vector2d& goal_dir,
                                  double hop_len, int n_hops,
                                  const sim::SimSpecs& specs,
                                  const sim::ControllerParams& controller) {
  if (hop_len <= 0.0)
    throw std::invalid_argument("plan_climb_sequence: hop_len must be > 0");
  if (n_hops < 0)
    throw std::invalid_argument("plan_climb_sequence: n_hops must be >= 0");
  if (goal_dir.norm() < 1e-12)
    throw std::invalid_argument("plan_climb_sequence: goal_dir must be nonzero");
  const int n = state.robot_count();
  for (int i = 0; i < n; ++i) {
    if (!state.gripped[i])
      throw std::invalid_argument(
          "plan_climb_sequence: all robots must start gripped");
  }

  const Eigen::Vector2d dir = goal_dir.normalized();
  const Eigen::Vector3d step3(dir.x() * hop_len, dir.y() * hop_len, 0.0);
  const Eigen::Vector3d f_g = sim::gravity_accel(specs.world);

  ClimbSchedule schedule;
  std::vector<Eigen::Vector3d> pos = state.r;
  for (int k = 0; k < n_hops; ++k) {
    const int robot = k % n;
    HopProblem problem;
    problem.r_0 = pos[robot];
    problem.r_tau = pos[robot] + step3;
    problem.m_r = specs.robots[robot].m_r;
    problem.f_g = f_g;
    problem.t_max = specs.robots[robot].t_max;
    problem.tau_min = controller.tau_min;
    problem.tau_max = controller.tau_max;
    try {
      ClimbEntry entry;
      entry.robot = robot;
      entry.hop = solve_hop(problem);
      entry.target = problem.r_tau;
      entry.dwell = controller.settle_time;
      schedule.entries.push_back(entry);
    } catch (const InfeasibleHop& e) {
      throw ClimbInfeasible(robot, k, e.min_required_thrust());
    }
    pos[robot] = problem.r_tau;
  }
  return schedule;
}

namespace {

class EpisodeRunner {
 public:
  EpisodeRunner(const sim::ScenarioSpec& scenario, EpisodeResult& result)
      : specs_(scenario.specs),
        dt_(scenario.controller.dt),
        record_every_(scenario.controller.record_every),
        result_(result),
        state_(sim::initial_state(scenario)) {
    const int n = state_.robot_count();
    thrusts_.assign(n, Eigen::Vector3d::Zero());
    commanded_.assign(n, 1);
    prev_commanded_.assign(n, 1);
    fuel_flagged_.assign(n, 0);
    result_.trajectory.sample_dt = dt_ * record_every_;
    record_sample();
  }

  const SystemState& state() const { return state_; }
  bool aborted() const { return result_.aborted; }

  void set_grip(int robot, bool on) { commanded_[robot] = on ? 1 : 0; }
  void set_thrust(int robot, const Eigen::Vector3d& thrust) {
    thrusts_[robot] = thrust;
  }

  /// Runs for a duration, stepping on the fixed grid.
  void run(double duration) {
    const long steps = std::lround(duration / dt_);
    for (long s = 0; s < steps && !result_.aborted; ++s) single_step();
  }

  void single_step() {
    const std::vector<std::uint8_t> prev_actual = state_.gripped;
    sim::StepResult step_out =
        sim::step(state_, thrusts_, commanded_, specs_, dt_);
    state_ = std::move(step_out.state);
    ++step_count_;

    for (const SimEvent& event : step_out.events) {
      if (event.type == SimEventType::Slip) {
        const bool regrip_attempt = commanded_[event.robot] &&
                                    !prev_commanded_[event.robot];
        if (prev_actual[event.robot] || regrip_attempt)
          result_.trajectory.events.push_back(event);
      } else if (event.type == SimEventType::FuelExhausted) {
        if (!fuel_flagged_[event.robot]) {
          fuel_flagged_[event.robot] = 1;
          result_.trajectory.events.push_back(event);
        }
      }
    }
    prev_commanded_ = commanded_;

    if (step_count_ % record_every_ == 0) record_sample();

    int gripped_count = 0;
    for (auto g : state_.gripped) gripped_count += g;
    if (gripped_count == 0) {
      result_.aborted = true;
      result_.abort_reason = "slip cascade: all robots lost grip";
    }
  }

  /// Advances on the grid until the next sample boundary so the last
  /// recorded sample reflects the episode end.
  void pad_to_sample_boundary() {
    while (step_count_ % record_every_ != 0 && !result_.aborted) single_step();
  }

  bool tether_taut(int robot) const {
    const Eigen::Vector3d l =
        sim::attachment_world(state_.R, state_.phi,
                              specs_.payload.attachments[robot]) -
        state_.r[robot];
    return l.norm() > specs_.tethers[robot].l_0;
  }

 private:
  void record_sample() {
    sim::TrajectorySample sample;
    sample.state = state_;
    sample.thrusts = thrusts_;
    sample.osc_angle = sim::oscillation_angle(state_);
    result_.trajectory.samples.push_back(std::move(sample));
  }

  const sim::SimSpecs& specs_;
  double dt_;
  int record_every_;
  EpisodeResult& result_;
  SystemState state_;
  std::vector<Eigen::Vector3d> thrusts_;
  std::vector<std::uint8_t> commanded_;
  std::vector<std::uint8_t> prev_commanded_;
  std::vector<std::uint8_t> fuel_flagged_;
  long step_count_ = 0;
};

}  // namespace

EpisodeResult run_episode(const sim::ScenarioSpec& scenario,
                          const ClimbSchedule& schedule) {
  scenario.validate();
  const int n = scenario.specs.robot_count();
  for (const ClimbEntry& entry : schedule.entries) {
    if (entry.robot < 0 || entry.robot >= n)
      throw std::invalid_argument("run_episode: schedule robot out of range");
  }

  EpisodeResult result;
  EpisodeRunner runner(scenario, result);

  // Let the initial tether transients settle before the first hop.
  runner.run(scenario.controller.settle_time);

  for (const ClimbEntry& entry : schedule.entries) {
    if (runner.aborted()) break;

    HopRecord record;
    record.robot = entry.robot;
    record.target = entry.target;

    runner.set_grip(entry.robot, false);
    runner.set_thrust(entry.robot, entry.hop.thrust);
    const long flight_steps =
        std::max<long>(1, std::lround(entry.hop.tau / scenario.controller.dt));
    for (long s = 0; s < flight_steps && !runner.aborted(); ++s) {
      runner.single_step();
      record.tether_taut_in_flight |= runner.tether_taut(entry.robot);
    }
    record.landed = runner.state().r[entry.robot];
    record.landing_error = (record.landed - entry.target).norm();
    result.hops.push_back(record);

    runner.set_thrust(entry.robot, Eigen::Vector3d::Zero());
    runner.set_grip(entry.robot, true);
    runner.run(entry.dwell);
  }

  runner.pad_to_sample_boundary();
  return result;
}

}  // namespace tetherhop::gait

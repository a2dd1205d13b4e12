#include "riskfield/planner.hpp"

#include "riskfield/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace riskfield {

MotorcycleState step_dynamics(const MotorcycleState& state, const ControlSample& control,
                              double dt, const PlannerParams& params) {
  MotorcycleState next;
  next.x = state.x + state.v * std::cos(state.theta) * dt;
  next.y = state.y + state.v * std::sin(state.theta) * dt;
  next.theta =
      normalize_angle(state.theta + state.v / params.wheelbase_l * std::tan(state.delta) * dt);
  next.v = std::max(0.0, state.v + control.a * dt);
  next.delta = std::clamp(state.delta + control.ddelta * dt, -params.delta_max, params.delta_max);
  next.phi = state.phi;
  return next;
}

Trajectory rollout(const MotorcycleState& x0, const ControlSample& control,
                   const PlannerParams& params) {
  const int steps = static_cast<int>(std::lround(params.horizon_t / params.dt));
  Trajectory traj;
  traj.control = control;
  traj.states.reserve(static_cast<std::size_t>(steps));
  MotorcycleState state = x0;
  for (int i = 0; i < steps; ++i) {
    state = step_dynamics(state, control, params.dt, params);
    traj.states.push_back(state);
  }
  return traj;
}

std::vector<ControlSample> sample_controls(const PlannerParams& params) {
  auto axis = [](double lo, double hi, int count) {
    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(count));
    if (count == 1) {
      values.push_back(0.5 * (lo + hi));
      return values;
    }
    const double step = (hi - lo) / static_cast<double>(count - 1);
    for (int i = 0; i < count; ++i) {
      values.push_back(lo + step * static_cast<double>(i));
    }
    return values;
  };

  const std::vector<double> accels = axis(params.a_min, params.a_max, params.n_accel);
  const std::vector<double> steers = axis(params.ddelta_min, params.ddelta_max, params.n_steer);
  std::vector<ControlSample> samples;
  samples.reserve(accels.size() * steers.size());
  for (double a : accels) {
    for (double d : steers) {
      samples.push_back(ControlSample{a, d});
    }
  }
  return samples;
}

double psi_goal(const Trajectory& traj, const Vec2& goal) {
  const MotorcycleState& last = traj.states.back();
  return (Vec2(last.x, last.y) - goal).norm();
}

double psi_speed(const Trajectory& traj, double v_max) {
  return std::max(0.0, v_max - traj.states.back().v);
}

double psi_risk(const Trajectory& traj, const RiskMap& risk, const CameraModel& camera,
                OffImagePolicy policy, double ground_offset) {
  const std::vector<PixelSample> samples =
      project_trajectory(traj.states, camera, ground_offset);
  double sum = 0.0;
  int valid = 0;
  for (const PixelSample& s : samples) {
    if (s.valid) {
      sum += risk.values.at(s.n, s.m);
      ++valid;
    }
  }
  if (policy == OffImagePolicy::zero) {
    return samples.empty() ? 0.0 : sum / static_cast<double>(samples.size());
  }
  return valid == 0 ? 0.0 : sum / static_cast<double>(valid);
}

std::size_t select_best(std::span<const TrajectoryScore> scores) {
  if (scores.empty()) {
    throw ValidationError("planner: empty candidate set");
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < scores.size(); ++i) {
    const TrajectoryScore& cand = scores[i];
    const TrajectoryScore& cur = scores[best];
    if (cand.j < cur.j) {
      best = i;
      continue;
    }
    if (cand.j == cur.j) {
      // Exact tie: prefer the gentler steering rate, then the gentler
      // acceleration, then the earlier sample.
      const double cand_dd = std::abs(cand.control.ddelta);
      const double cur_dd = std::abs(cur.control.ddelta);
      if (cand_dd < cur_dd ||
          (cand_dd == cur_dd && std::abs(cand.control.a) < std::abs(cur.control.a))) {
        best = i;
      }
    }
  }
  return best;
}

PlanResult plan(const MotorcycleState& x0, const RiskMap& risk, const CameraModel& camera,
                const Vec2& goal, const PlannerParams& params) {
  const std::vector<ControlSample> controls = sample_controls(params);
  if (controls.empty()) {
    throw ValidationError("planner: empty control set");
  }

  PlanResult result;
  result.scores.reserve(controls.size());
  std::vector<Trajectory> rollouts;
  rollouts.reserve(controls.size());
  for (const ControlSample& u : controls) {
    Trajectory traj = rollout(x0, u, params);
    TrajectoryScore score;
    score.control = u;
    score.psi_goal = psi_goal(traj, goal);
    score.psi_speed = psi_speed(traj, params.v_max);
    score.psi_risk = psi_risk(traj, risk, camera, params.offimage, params.ground_offset);
    score.j = params.beta_goal * score.psi_goal + params.beta_speed * score.psi_speed +
              params.beta_risk * score.psi_risk;
    result.scores.push_back(score);
    rollouts.push_back(std::move(traj));
  }

  const std::size_t best = select_best(result.scores);
  result.best = controls[best];
  result.best_trajectory = std::move(rollouts[best]);
  return result;
}

std::string scores_csv(std::span<const TrajectoryScore> scores) {
  std::string out = "a,ddelta,psi_goal,psi_speed,psi_risk,J\n";
  char line[192];
  for (const TrajectoryScore& s : scores) {
    std::snprintf(line, sizeof(line), "%.10g,%.10g,%.10g,%.10g,%.10g,%.10g\n", s.control.a,
                  s.control.ddelta, s.psi_goal, s.psi_speed, s.psi_risk, s.j);
    out += line;
  }
  return out;
}

}  // namespace riskfield

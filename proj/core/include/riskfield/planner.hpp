#pragma once

#include "riskfield/params.hpp"
#include "riskfield/projection.hpp"
#include "riskfield/riskmap.hpp"
#include "riskfield/scene.hpp"

#include <span>
#include <string>
#include <vector>

namespace riskfield {

/// One candidate control: constant acceleration and steering rate held over
/// the whole rollout horizon.
struct ControlSample {
  double a{0.0};       // [m/s^2]
  double ddelta{0.0};  // [rad/s]

  bool operator==(const ControlSample&) const = default;
};

/// Forward-simulated states at times dt, 2dt, ..., horizon_t.
struct Trajectory {
  std::vector<MotorcycleState> states;
  ControlSample control{};
};

struct TrajectoryScore {
  ControlSample control{};
  double psi_goal{0.0};   // terminal goal distance [m]
  double psi_speed{0.0};  // terminal speed shortfall [m/s]
  double psi_risk{0.0};   // mean sampled risk along the rollout
  double j{0.0};          // beta-weighted total
};

struct PlanResult {
  ControlSample best{};
  Trajectory best_trajectory;
  std::vector<TrajectoryScore> scores;  // one per candidate, in sample order
};

/// One explicit-Euler step of the bicycle dynamics:
///   x += v cos(theta) dt, y += v sin(theta) dt, theta += (v/L) tan(delta) dt,
///   v = max(0, v + a dt), delta = clamp(delta + ddelta dt, +-delta_max).
/// phi is copied unchanged; theta is renormalized to (-pi, pi].
MotorcycleState step_dynamics(const MotorcycleState& state, const ControlSample& control,
                              double dt, const PlannerParams& params);

Trajectory rollout(const MotorcycleState& x0, const ControlSample& control,
                   const PlannerParams& params);

/// Cartesian product of evenly spaced accelerations and steering rates,
/// endpoints included; a single-count axis yields its midpoint. Acceleration
/// is the outer (slower-varying) axis.
std::vector<ControlSample> sample_controls(const PlannerParams& params);

double psi_goal(const Trajectory& traj, const Vec2& goal);
double psi_speed(const Trajectory& traj, double v_max);

/// Mean risk over the rollout's projected waypoints. Invalid samples are
/// excluded from the average or counted as zero depending on the policy; no
/// valid samples gives 0.
double psi_risk(const Trajectory& traj, const RiskMap& risk, const CameraModel& camera,
                OffImagePolicy policy = OffImagePolicy::exclude, double ground_offset = 0.0);

/// Index of the lowest-J candidate; exact ties go to lower |ddelta|, then
/// lower |a|, then sample order. Throws ValidationError on an empty set.
std::size_t select_best(std::span<const TrajectoryScore> scores);

/// Scores every sampled control and returns the argmin with diagnostics.
PlanResult plan(const MotorcycleState& x0, const RiskMap& risk, const CameraModel& camera,
                const Vec2& goal, const PlannerParams& params);

/// Diagnostic dump: header plus one row (a, ddelta, psi_goal, psi_speed,
/// psi_risk, J) per candidate.
std::string scores_csv(std::span<const TrajectoryScore> scores);

}  // namespace riskfield

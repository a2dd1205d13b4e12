#pragma once

#include "riskfield/perception.hpp"
#include "riskfield/planner.hpp"
#include "riskfield/riskmap.hpp"
#include "riskfield/scene.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace riskfield {

enum class Mode { ours, no_vlm, baseline };

/// Throws ValidationError on an unknown mode name.
Mode parse_mode(const std::string& name);
std::string to_string(Mode mode);

enum class Termination { goal, hazard_contact, timeout, off_road };
std::string to_string(Termination t);

/// Motorcycle body envelope used for hazard-contact checks.
struct BodyParams {
  double length{2.0};  // [m]
  double width{0.8};   // [m]
};

struct EpisodeParams {
  double goal_radius{1.0};  // [m]
  int max_steps{1200};      // 60 s at dt = 0.05
  BodyParams body{};
  std::vector<std::string> obstacle_labels{"cone"};  // solid obstacles for baseline mode
};

struct EpisodeResult {
  bool success{false};       // no body/hazard intersection over the episode
  bool reached_goal{false};
  double hazard_exposure_distance{0.0};
  std::vector<MotorcycleState> trajectory;  // start state plus every stepped state
  int steps{0};
  Termination termination{Termination::timeout};
};

struct TrialResult {
  int trial{0};
  std::uint64_t episode_seed{0};
  double start_offset{0.0};  // applied lateral start offset [m]
  EpisodeResult episode;
};

struct BatchMetrics {
  int n_trials{0};
  double success_rate{0.0};  // percent
  double mean_hazard_exposure_distance{0.0};
  std::vector<TrialResult> trials;
};

/// Metrics for one (scenario, mode) batch cell.
struct BatchCell {
  std::string scenario;
  Mode mode{Mode::ours};
  BatchMetrics metrics;
};

/// True iff the oriented body rectangle centered on the state intersects the
/// hazard footprint (closed-set convention: touching counts).
bool footprint_intersects(const MotorcycleState& state, const Hazard& hazard,
                          const BodyParams& body);

/// One world step; identical arithmetic to the planner rollout.
MotorcycleState step(const MotorcycleState& state, const ControlSample& control, double dt,
                     const PlannerParams& params);

/// Minimum distance from any trajectory state to any hazard footprint
/// centroid; +inf when the hazard list is empty.
double hazard_exposure(std::span<const MotorcycleState> trajectory,
                       std::span<const Hazard> hazards);

/// alpha_vlm zeroed with the remaining weights rescaled so the total weight
/// mass is preserved (the no_vlm ablation).
RiskParams ablated_no_vlm_params(const RiskParams& params);

/// Read-only view of one planning step, for rendering and diagnostics.
struct FrameObservation {
  int step;
  const MotorcycleState& state;
  const CameraModel& camera;
  const std::vector<HazardDetection>& detections;
  const RiskMap& risk;
  const PlanResult& plan;
};
using FrameObserver = std::function<void(const FrameObservation&)>;

/// Closed-loop episode: perceive once, then per step re-render masks, build
/// the mode's risk map, plan, and apply the best control. Terminates on goal
/// radius, hazard contact, leaving the corridor, or the step budget.
EpisodeResult run_episode(const Scenario& scenario, Mode mode, std::uint64_t seed,
                          const ProviderFactory& provider_factory = oracle_provider_factory(),
                          const EpisodeParams& episode_params = {},
                          const FrameObserver& observer = {});

/// Seeded batch of trials differing by lateral start offset and episode seed.
/// Trials may run on up to n_threads workers (0 = hardware concurrency);
/// results are keyed by trial index, so the outcome is thread-count invariant.
BatchMetrics run_batch(const Scenario& scenario, Mode mode, int n_trials,
                       std::uint64_t base_seed,
                       const ProviderFactory& provider_factory = oracle_provider_factory(),
                       int n_threads = 1, const EpisodeParams& episode_params = {});

/// CSV with columns trial,mode,scenario,success,exposure_distance,steps,termination.
std::string batch_results_csv(std::span<const BatchCell> cells);

/// CSV with columns t,x,y,theta,v,delta.
std::string trajectory_csv(std::span<const MotorcycleState> trajectory, double dt);

}  // namespace riskfield

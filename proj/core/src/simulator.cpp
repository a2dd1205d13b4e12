#include "riskfield/simulator.hpp"

#include "riskfield/errors.hpp"
#include "riskfield/projection.hpp"
#include "riskfield/rng.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <limits>
#include <thread>

namespace riskfield {

Mode parse_mode(const std::string& name) {
  if (name == "ours") return Mode::ours;
  if (name == "no_vlm") return Mode::no_vlm;
  if (name == "baseline") return Mode::baseline;
  throw ValidationError("unknown mode '" + name + "' (expected ours|no_vlm|baseline)");
}

std::string to_string(Mode mode) {
  switch (mode) {
    case Mode::ours: return "ours";
    case Mode::no_vlm: return "no_vlm";
    case Mode::baseline: return "baseline";
  }
  return "?";
}

std::string to_string(Termination t) {
  switch (t) {
    case Termination::goal: return "goal";
    case Termination::hazard_contact: return "hazard_contact";
    case Termination::timeout: return "timeout";
    case Termination::off_road: return "off_road";
  }
  return "?";
}

bool footprint_intersects(const MotorcycleState& state, const Hazard& hazard,
                          const BodyParams& body) {
  OrientedRect rect;
  rect.center = Vec2(state.x, state.y);
  rect.heading = state.theta;
  rect.length = body.length;
  rect.width = body.width;
  return rect_intersects_polygon(rect, hazard.footprint);
}

MotorcycleState step(const MotorcycleState& state, const ControlSample& control, double dt,
                     const PlannerParams& params) {
  return step_dynamics(state, control, dt, params);
}

double hazard_exposure(std::span<const MotorcycleState> trajectory,
                       std::span<const Hazard> hazards) {
  double best = std::numeric_limits<double>::infinity();
  for (const Hazard& hazard : hazards) {
    const Vec2 centroid = hazard.centroid();
    for (const MotorcycleState& s : trajectory) {
      best = std::min(best, (Vec2(s.x, s.y) - centroid).norm());
    }
  }
  return best;
}

RiskParams ablated_no_vlm_params(const RiskParams& params) {
  RiskParams out = params;
  const double total = params.alpha_vlm + params.alpha_area + params.alpha_conf +
                       params.alpha_depth;
  const double rest = params.alpha_area + params.alpha_conf + params.alpha_depth;
  out.alpha_vlm = 0.0;
  if (rest > 0.0) {
    const double scale = total / rest;
    out.alpha_area = params.alpha_area * scale;
    out.alpha_conf = params.alpha_conf * scale;
    out.alpha_depth = params.alpha_depth * scale;
  }
  return out;
}

ProviderFactory oracle_provider_factory() {
  return [](std::uint64_t) { return std::make_unique<OracleProvider>(); };
}

ProviderFactory noisy_provider_factory(NoiseParams noise) {
  return [noise](std::uint64_t seed) { return std::make_unique<NoisyProvider>(noise, seed); };
}

namespace {

RiskMap mode_risk_map(Mode mode, std::span<const HazardDetection> detections,
                      const RiskParams& risk_params, const EpisodeParams& episode_params,
                      int width, int height) {
  switch (mode) {
    case Mode::ours:
      return build_risk_map(detections, risk_params, width, height);
    case Mode::no_vlm:
      return build_risk_map(detections, ablated_no_vlm_params(risk_params), width, height);
    case Mode::baseline: {
      // Solid obstacles at full cost; surface hazards are treated as drivable.
      std::vector<ImageGrid<double>> maps;
      for (const HazardDetection& det : detections) {
        const auto& labels = episode_params.obstacle_labels;
        if (std::find(labels.begin(), labels.end(), det.label) == labels.end()) {
          continue;
        }
        ImageGrid<double> cost(det.mask.width, det.mask.height, 0.0);
        for (std::size_t i = 0; i < cost.data.size(); ++i) {
          if (det.mask.data[i] != 0) {
            cost.data[i] = risk_params.c_max;
          }
        }
        maps.push_back(std::move(cost));
      }
      return fuse(maps, width, height, risk_params.c_max);
    }
  }
  throw ValidationError("invalid mode");
}

bool any_hazard_contact(const MotorcycleState& state, std::span<const Hazard> hazards,
                        const BodyParams& body) {
  for (const Hazard& hazard : hazards) {
    if (footprint_intersects(state, hazard, body)) {
      return true;
    }
  }
  return false;
}

}  // namespace

EpisodeResult run_episode(const Scenario& scenario, Mode mode, std::uint64_t seed,
                          const ProviderFactory& provider_factory,
                          const EpisodeParams& episode_params, const FrameObserver& observer) {
  std::unique_ptr<PerceptionProvider> provider = provider_factory(seed);

  EpisodeResult result;
  MotorcycleState state = scenario.start;
  result.trajectory.push_back(state);
  result.termination = Termination::timeout;

  // One perception query per scene; detection semantics stay frozen while
  // masks are re-rendered from the scene snapshot every frame.
  const CameraModel start_camera = camera_pose_at(state, scenario.camera);
  std::vector<HazardDetection> detections =
      provider->perceive(scenario, start_camera, state);
  std::vector<const Hazard*> detected_hazards;
  detected_hazards.reserve(detections.size());
  for (const HazardDetection& det : detections) {
    const Hazard* match = nullptr;
    for (const Hazard& h : scenario.hazards) {
      if (h.id == det.hazard_id) {
        match = &h;
        break;
      }
    }
    if (match == nullptr) {
      throw ProtocolError("detection '" + det.hazard_id + "' matches no scenario hazard");
    }
    detected_hazards.push_back(match);
  }

  bool contact = any_hazard_contact(state, scenario.hazards, episode_params.body);
  if (contact) {
    result.termination = Termination::hazard_contact;
  }

  int steps = 0;
  while (!contact && steps < episode_params.max_steps) {
    const CameraModel camera = camera_pose_at(state, scenario.camera);
    for (std::size_t i = 0; i < detections.size(); ++i) {
      detections[i].mask = provider->render_mask(*detected_hazards[i], camera);
    }
    const RiskMap risk = mode_risk_map(mode, detections, scenario.risk_params, episode_params,
                                       camera.width, camera.height);
    const PlanResult planned =
        plan(state, risk, camera, scenario.goal, scenario.planner_params);
    if (observer) {
      observer(FrameObservation{steps, state, camera, detections, risk, planned});
    }

    state = step_dynamics(state, planned.best, scenario.planner_params.dt,
                          scenario.planner_params);
    result.trajectory.push_back(state);
    ++steps;

    if (any_hazard_contact(state, scenario.hazards, episode_params.body)) {
      contact = true;
      result.termination = Termination::hazard_contact;
      break;
    }
    if ((Vec2(state.x, state.y) - scenario.goal).norm() <= episode_params.goal_radius) {
      result.reached_goal = true;
      result.termination = Termination::goal;
      break;
    }
    if (!scenario.road.contains(Vec2(state.x, state.y))) {
      result.termination = Termination::off_road;
      break;
    }
  }

  result.steps = steps;
  result.success = !contact;
  result.hazard_exposure_distance = hazard_exposure(result.trajectory, scenario.hazards);
  return result;
}

BatchMetrics run_batch(const Scenario& scenario, Mode mode, int n_trials,
                       std::uint64_t base_seed, const ProviderFactory& provider_factory,
                       int n_threads, const EpisodeParams& episode_params) {
  if (n_trials < 1) {
    throw ValidationError("run_batch: n_trials must be at least 1");
  }

  BatchMetrics metrics;
  metrics.n_trials = n_trials;
  metrics.trials.resize(static_cast<std::size_t>(n_trials));

  auto run_trial = [&](int trial) {
    std::mt19937_64 rng = make_rng(base_seed, static_cast<std::uint64_t>(trial));
    const double range = scenario.trials.lateral_offset_range;
    const double offset = range > 0.0 ? uniform_range(rng, -range, range) : 0.0;
    const std::uint64_t episode_seed = rng();

    Scenario trial_scenario = scenario;
    trial_scenario.start.x += -std::sin(scenario.start.theta) * offset;
    trial_scenario.start.y += std::cos(scenario.start.theta) * offset;

    TrialResult& out = metrics.trials[static_cast<std::size_t>(trial)];
    out.trial = trial;
    out.episode_seed = episode_seed;
    out.start_offset = offset;
    out.episode = run_episode(trial_scenario, mode, episode_seed, provider_factory,
                              episode_params);
  };

  int workers = n_threads;
  if (workers <= 0) {
    workers = static_cast<int>(std::thread::hardware_concurrency());
  }
  workers = std::max(1, std::min(workers, n_trials));

  if (workers == 1) {
    for (int t = 0; t < n_trials; ++t) {
      run_trial(t);
    }
  } else {
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (int t = next.fetch_add(1); t < n_trials; t = next.fetch_add(1)) {
          run_trial(t);
        }
      });
    }
    for (std::thread& th : pool) {
      th.join();
    }
  }

  int successes = 0;
  double exposure_sum = 0.0;
  for (const TrialResult& t : metrics.trials) {
    successes += t.episode.success ? 1 : 0;
    exposure_sum += t.episode.hazard_exposure_distance;
  }
  metrics.success_rate = 100.0 * static_cast<double>(successes) / static_cast<double>(n_trials);
  metrics.mean_hazard_exposure_distance = exposure_sum / static_cast<double>(n_trials);
  return metrics;
}

std::string batch_results_csv(std::span<const BatchCell> cells) {
  std::string out = "trial,mode,scenario,success,exposure_distance,steps,termination\n";
  char line[256];
  for (const BatchCell& cell : cells) {
    for (const TrialResult& t : cell.metrics.trials) {
      std::snprintf(line, sizeof(line), "%d,%s,%s,%d,%.10g,%d,%s\n", t.trial,
                    to_string(cell.mode).c_str(), cell.scenario.c_str(),
                    t.episode.success ? 1 : 0, t.episode.hazard_exposure_distance,
                    t.episode.steps, to_string(t.episode.termination).c_str());
      out += line;
    }
  }
  return out;
}

std::string trajectory_csv(std::span<const MotorcycleState> trajectory, double dt) {
  std::string out = "t,x,y,theta,v,delta\n";
  char line[224];
  for (std::size_t i = 0; i < trajectory.size(); ++i) {
    const MotorcycleState& s = trajectory[i];
    std::snprintf(line, sizeof(line), "%.10g,%.10g,%.10g,%.10g,%.10g,%.10g\n",
                  static_cast<double>(i) * dt, s.x, s.y, s.theta, s.v, s.delta);
    out += line;
  }
  return out;
}

}  // namespace riskfield

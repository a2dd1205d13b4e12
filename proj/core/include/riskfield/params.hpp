#pragma once

#include <string>

namespace riskfield {

/// Weights and shape parameters of the per-hazard multi-factor cost.
///
/// The four alpha weights combine the contextual, area, confidence, and depth
/// scores; kappa_a/eta_a shape the area sigmoid; d_ref normalizes depth
/// deviations; c_max caps every risk-map value.
struct RiskParams {
  double alpha_vlm{0.5};
  double alpha_area{0.2};
  double alpha_conf{0.1};
  double alpha_depth{0.2};
  double kappa_a{50.0};  // area sigmoid scale
  double eta_a{0.05};    // area sigmoid offset (area-ratio units)
  double d_ref{0.15};    // reference depth [m]
  double c_max{1.0};     // risk-map ceiling

  void validate() const;  // throws ValidationError
};

/// How off-image / behind-camera waypoints enter the trajectory risk average.
enum class OffImagePolicy { exclude, zero };

OffImagePolicy parse_offimage_policy(const std::string& name);
std::string to_string(OffImagePolicy policy);

/// Control-sampling grid, rollout integration, and cost weights.
struct PlannerParams {
  double a_min{-3.0};        // [m/s^2]
  double a_max{1.5};         // [m/s^2]
  double ddelta_min{-0.6};   // [rad/s]
  double ddelta_max{0.6};    // [rad/s]
  int n_accel{5};
  int n_steer{13};
  double dt{0.05};           // integration step [s]
  double horizon_t{2.0};     // prediction horizon [s]
  double wheelbase_l{1.4};   // [m]
  double v_max{8.0};         // desired speed upper bound [m/s]
  double delta_max{0.6};     // steering angle limit [rad]
  double beta_goal{1.0};
  double beta_speed{0.5};
  double beta_risk{15.0};
  double ground_offset{0.0};  // waypoint lift above ground before projection [m]
  OffImagePolicy offimage{OffImagePolicy::exclude};

  void validate() const;  // throws ValidationError
};

/// Perturbations applied by the noisy perception provider.
struct NoiseParams {
  double confidence_std{0.0};
  double c_vlm_std{0.0};
  double dropout_prob{0.0};
  int mask_morph_radius{0};  // >0 dilate, <0 erode [px]
};

/// Per-trial randomization for batch runs.
struct TrialParams {
  double lateral_offset_range{0.0};  // start offset uniform in +-range [m]
  NoiseParams noise{};
};

}  // namespace riskfield

#include "riskfield/params.hpp"

#include "riskfield/errors.hpp"

namespace riskfield {

void RiskParams::validate() const {
  if (alpha_vlm < 0 || alpha_area < 0 || alpha_conf < 0 || alpha_depth < 0) {
    throw ValidationError("risk params: weights must be nonnegative");
  }
  if (!(d_ref > 0)) {
    throw ValidationError("risk params: d_ref must be positive");
  }
  if (!(c_max > 0)) {
    throw ValidationError("risk params: c_max must be positive");
  }
}

OffImagePolicy parse_offimage_policy(const std::string& name) {
  if (name == "exclude") return OffImagePolicy::exclude;
  if (name == "zero") return OffImagePolicy::zero;
  throw ValidationError("unknown offimage policy '" + name + "' (expected exclude|zero)");
}

std::string to_string(OffImagePolicy policy) {
  return policy == OffImagePolicy::exclude ? "exclude" : "zero";
}

void PlannerParams::validate() const {
  if (a_min > a_max) {
    throw ValidationError("planner params: a_min must not exceed a_max");
  }
  if (ddelta_min > ddelta_max) {
    throw ValidationError("planner params: ddelta_min must not exceed ddelta_max");
  }
  if (!(dt > 0)) {
    throw ValidationError("planner params: dt must be positive");
  }
  if (horizon_t < dt) {
    throw ValidationError("planner params: horizon_t must be at least dt");
  }
  if (!(wheelbase_l > 0)) {
    throw ValidationError("planner params: wheelbase_l must be positive");
  }
  if (!(v_max > 0)) {
    throw ValidationError("planner params: v_max must be positive");
  }
  if (n_accel < 1 || n_steer < 1) {
    throw ValidationError("planner params: sample counts must be at least 1");
  }
  if (beta_goal < 0 || beta_speed < 0 || beta_risk < 0) {
    throw ValidationError("planner params: cost weights must be nonnegative");
  }
  if (!(delta_max > 0)) {
    throw ValidationError("planner params: delta_max must be positive");
  }
}

}  // namespace riskfield

#include "riskfield/serialization.hpp"

#include "riskfield/errors.hpp"

#include <array>

namespace riskfield {

namespace {

Vec2 parse_vec2(const Json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw ParseError("expected a 2-element [x, y] array");
  }
  return Vec2(j[0].get<double>(), j[1].get<double>());
}

Json dump_vec2(const Vec2& v) { return Json::array({v.x(), v.y()}); }

}  // namespace

// --- params ---------------------------------------------------------------

void to_json(Json& j, const RiskParams& p) {
  j = Json{{"alpha_vlm", p.alpha_vlm},   {"alpha_area", p.alpha_area},
           {"alpha_conf", p.alpha_conf}, {"alpha_depth", p.alpha_depth},
           {"kappa_a", p.kappa_a},       {"eta_a", p.eta_a},
           {"d_ref", p.d_ref},           {"c_max", p.c_max}};
}

void from_json(const Json& j, RiskParams& p) {
  p.alpha_vlm = j.value("alpha_vlm", p.alpha_vlm);
  p.alpha_area = j.value("alpha_area", p.alpha_area);
  p.alpha_conf = j.value("alpha_conf", p.alpha_conf);
  p.alpha_depth = j.value("alpha_depth", p.alpha_depth);
  p.kappa_a = j.value("kappa_a", p.kappa_a);
  p.eta_a = j.value("eta_a", p.eta_a);
  p.d_ref = j.value("d_ref", p.d_ref);
  p.c_max = j.value("c_max", p.c_max);
}

void to_json(Json& j, const PlannerParams& p) {
  j = Json{{"a_min", p.a_min},
           {"a_max", p.a_max},
           {"ddelta_min", p.ddelta_min},
           {"ddelta_max", p.ddelta_max},
           {"n_accel", p.n_accel},
           {"n_steer", p.n_steer},
           {"dt", p.dt},
           {"horizon_t", p.horizon_t},
           {"wheelbase_l", p.wheelbase_l},
           {"v_max", p.v_max},
           {"delta_max", p.delta_max},
           {"beta_goal", p.beta_goal},
           {"beta_speed", p.beta_speed},
           {"beta_risk", p.beta_risk},
           {"ground_offset", p.ground_offset},
           {"offimage", to_string(p.offimage)}};
}

void from_json(const Json& j, PlannerParams& p) {
  p.a_min = j.value("a_min", p.a_min);
  p.a_max = j.value("a_max", p.a_max);
  p.ddelta_min = j.value("ddelta_min", p.ddelta_min);
  p.ddelta_max = j.value("ddelta_max", p.ddelta_max);
  p.n_accel = j.value("n_accel", p.n_accel);
  p.n_steer = j.value("n_steer", p.n_steer);
  p.dt = j.value("dt", p.dt);
  p.horizon_t = j.value("horizon_t", p.horizon_t);
  p.wheelbase_l = j.value("wheelbase_l", p.wheelbase_l);
  p.v_max = j.value("v_max", p.v_max);
  p.delta_max = j.value("delta_max", p.delta_max);
  p.beta_goal = j.value("beta_goal", p.beta_goal);
  p.beta_speed = j.value("beta_speed", p.beta_speed);
  p.beta_risk = j.value("beta_risk", p.beta_risk);
  p.ground_offset = j.value("ground_offset", p.ground_offset);
  if (j.contains("offimage")) {
    p.offimage = parse_offimage_policy(j.at("offimage").get<std::string>());
  }
}

void to_json(Json& j, const NoiseParams& p) {
  j = Json{{"confidence_std", p.confidence_std},
           {"c_vlm_std", p.c_vlm_std},
           {"dropout_prob", p.dropout_prob},
           {"mask_morph_radius", p.mask_morph_radius}};
}

void from_json(const Json& j, NoiseParams& p) {
  p.confidence_std = j.value("confidence_std", p.confidence_std);
  p.c_vlm_std = j.value("c_vlm_std", p.c_vlm_std);
  p.dropout_prob = j.value("dropout_prob", p.dropout_prob);
  p.mask_morph_radius = j.value("mask_morph_radius", p.mask_morph_radius);
}

void to_json(Json& j, const TrialParams& p) {
  j = Json{{"lateral_offset_range", p.lateral_offset_range}, {"noise", p.noise}};
}

void from_json(const Json& j, TrialParams& p) {
  p.lateral_offset_range = j.value("lateral_offset_range", p.lateral_offset_range);
  if (j.contains("noise")) {
    j.at("noise").get_to(p.noise);
  }
}

// --- scene ----------------------------------------------------------------

void to_json(Json& j, const MotorcycleState& s) {
  j = Json{{"x", s.x},   {"y", s.y},         {"theta", s.theta},
           {"v", s.v},   {"delta", s.delta}, {"phi", s.phi}};
}

void from_json(const Json& j, MotorcycleState& s) {
  s.x = j.at("x").get<double>();
  s.y = j.at("y").get<double>();
  s.theta = j.value("theta", 0.0);
  s.v = j.value("v", 0.0);
  s.delta = j.value("delta", 0.0);
  s.phi = j.value("phi", 0.0);
}

void to_json(Json& j, const Intrinsics& k) {
  j = Json{{"fx", k.fx}, {"fy", k.fy}, {"cx", k.cx}, {"cy", k.cy}};
}

void from_json(const Json& j, Intrinsics& k) {
  k.fx = j.at("fx").get<double>();
  k.fy = j.at("fy").get<double>();
  k.cx = j.at("cx").get<double>();
  k.cy = j.at("cy").get<double>();
}

void to_json(Json& j, const CameraMount& m) {
  j = Json{{"forward", m.forward}, {"lateral", m.lateral},
           {"height", m.height},   {"pitch", m.pitch}};
}

void from_json(const Json& j, CameraMount& m) {
  m.forward = j.value("forward", m.forward);
  m.lateral = j.value("lateral", m.lateral);
  m.height = j.value("height", m.height);
  m.pitch = j.value("pitch", m.pitch);
}

void to_json(Json& j, const CameraRig& rig) {
  j = Json{{"width", rig.width},
           {"height", rig.height},
           {"intrinsics", rig.intrinsics},
           {"mount", rig.mount}};
}

void from_json(const Json& j, CameraRig& rig) {
  rig.width = j.at("width").get<int>();
  rig.height = j.at("height").get<int>();
  j.at("intrinsics").get_to(rig.intrinsics);
  if (j.contains("mount")) {
    j.at("mount").get_to(rig.mount);
  }
}

void to_json(Json& j, const RoadCorridor& road) {
  Json line = Json::array();
  for (const Vec2& p : road.centerline) {
    line.push_back(dump_vec2(p));
  }
  j = Json{{"centerline", line}, {"width", road.width}};
}

void from_json(const Json& j, RoadCorridor& road) {
  road.centerline.clear();
  for (const Json& p : j.at("centerline")) {
    road.centerline.push_back(parse_vec2(p));
  }
  road.width = j.at("width").get<double>();
}

void to_json(Json& j, const Hazard& h) {
  Json poly = Json::array();
  for (const Vec2& p : h.footprint) {
    poly.push_back(dump_vec2(p));
  }
  j = Json{{"id", h.id},
           {"label", h.label},
           {"footprint", poly},
           {"depth_m", h.depth_m},
           {"base_context_score", h.base_context_score}};
}

void from_json(const Json& j, Hazard& h) {
  h.id = j.at("id").get<std::string>();
  h.label = j.at("label").get<std::string>();
  h.footprint.clear();
  for (const Json& p : j.at("footprint")) {
    h.footprint.push_back(parse_vec2(p));
  }
  h.depth_m = j.value("depth_m", 0.0);
  h.base_context_score = j.value("base_context_score", 0.0);
}

void to_json(Json& j, const CameraModel& cam) {
  std::array<double, 16> flat{};
  const Eigen::Matrix4d m = cam.t_cw.matrix();
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      flat[static_cast<std::size_t>(r) * 4 + c] = m(r, c);
    }
  }
  j = Json{{"intrinsics", cam.intrinsics},
           {"width", cam.width},
           {"height", cam.height},
           {"t_cw", flat}};
}

void from_json(const Json& j, CameraModel& cam) {
  j.at("intrinsics").get_to(cam.intrinsics);
  cam.width = j.at("width").get<int>();
  cam.height = j.at("height").get<int>();
  const Json& flat = j.at("t_cw");
  if (!flat.is_array() || flat.size() != 16) {
    throw ParseError("camera t_cw must hold 16 numbers (row-major 4x4)");
  }
  Eigen::Matrix4d m;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      m(r, c) = flat[static_cast<std::size_t>(r) * 4 + c].get<double>();
    }
  }
  cam.t_cw = Transform(m);
}

void to_json(Json& j, const Scenario& s) {
  j = Json{{"name", s.name},
           {"road", s.road},
           {"hazards", s.hazards},
           {"start", s.start},
           {"goal", Json{{"x", s.goal.x()}, {"y", s.goal.y()}}},
           {"camera", s.camera},
           {"planner_params", s.planner_params},
           {"risk_params", s.risk_params},
           {"trials", s.trials}};
}

void from_json(const Json& j, Scenario& s) {
  s.name = j.at("name").get<std::string>();
  j.at("road").get_to(s.road);
  s.hazards.clear();
  for (const Json& h : j.at("hazards")) {
    s.hazards.push_back(h.get<Hazard>());
  }
  j.at("start").get_to(s.start);
  const Json& g = j.at("goal");
  s.goal = Vec2(g.at("x").get<double>(), g.at("y").get<double>());
  j.at("camera").get_to(s.camera);
  if (j.contains("planner_params")) {
    j.at("planner_params").get_to(s.planner_params);
  }
  if (j.contains("risk_params")) {
    j.at("risk_params").get_to(s.risk_params);
  }
  if (j.contains("trials")) {
    j.at("trials").get_to(s.trials);
  }
}

// --- simulator ------------------------------------------------------------

void to_json(Json& j, const EpisodeResult& r) {
  j = Json{{"success", r.success},
           {"reached_goal", r.reached_goal},
           {"hazard_exposure_distance", r.hazard_exposure_distance},
           {"steps", r.steps},
           {"termination", to_string(r.termination)}};
}

void to_json(Json& j, const TrialResult& r) {
  j = Json{{"trial", r.trial},
           {"episode_seed", r.episode_seed},
           {"start_offset", r.start_offset},
           {"episode", r.episode}};
}

void to_json(Json& j, const BatchMetrics& m) {
  j = Json{{"n_trials", m.n_trials},
           {"success_rate", m.success_rate},
           {"mean_hazard_exposure_distance", m.mean_hazard_exposure_distance},
           {"trials", m.trials}};
}

void to_json(Json& j, const BatchCell& c) {
  j = Json{{"scenario", c.scenario}, {"mode", to_string(c.mode)}, {"metrics", c.metrics}};
}

}  // namespace riskfield

#include "riskfield/scene.hpp"

#include "riskfield/errors.hpp"
#include "riskfield/serialization.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace riskfield {

Transform CameraMount::body_from_camera() const {
  // Columns are the camera axes expressed in the body frame: X right, Y down,
  // Z the optical axis pitched down by `pitch` from body forward.
  const double cp = std::cos(pitch);
  const double sp = std::sin(pitch);
  Eigen::Matrix3d rot;
  rot.col(0) = Vec3(0.0, -1.0, 0.0);
  rot.col(1) = Vec3(-sp, 0.0, -cp);
  rot.col(2) = Vec3(cp, 0.0, -sp);
  Transform t = Transform::Identity();
  t.linear() = rot;
  t.translation() = Vec3(forward, lateral, height);
  return t;
}

bool RoadCorridor::contains(const Vec2& p) const {
  return point_polyline_distance(p, centerline) <= 0.5 * width;
}

Transform body_pose(const MotorcycleState& state) {
  Transform t = Transform::Identity();
  t.linear() = Eigen::AngleAxisd(state.theta, Vec3::UnitZ()).toRotationMatrix();
  t.translation() = Vec3(state.x, state.y, 0.0);
  return t;
}

CameraModel camera_pose_at(const MotorcycleState& state, const Intrinsics& intrinsics,
                           int width, int height, const Transform& body_from_camera) {
  CameraModel camera;
  camera.intrinsics = intrinsics;
  camera.width = width;
  camera.height = height;
  camera.t_cw = (body_pose(state) * body_from_camera).inverse();
  return camera;
}

CameraModel camera_pose_at(const MotorcycleState& state, const CameraRig& rig) {
  return camera_pose_at(state, rig.intrinsics, rig.width, rig.height,
                        rig.mount.body_from_camera());
}

void validate_camera(const CameraModel& camera) {
  if (camera.width <= 0 || camera.height <= 0) {
    throw ValidationError("camera: image dimensions must be positive");
  }
  if (!(camera.intrinsics.fx > 0) || !(camera.intrinsics.fy > 0)) {
    throw ValidationError("camera: focal lengths must be positive");
  }
  if (camera.intrinsics.cx < 0 || camera.intrinsics.cx >= camera.width ||
      camera.intrinsics.cy < 0 || camera.intrinsics.cy >= camera.height) {
    throw ValidationError("camera: principal point outside the image");
  }
  const Eigen::Matrix3d r = camera.t_cw.linear();
  const double orthogonality = (r * r.transpose() - Eigen::Matrix3d::Identity()).norm();
  if (orthogonality > 1e-6 || std::abs(r.determinant() - 1.0) > 1e-6) {
    throw ValidationError("camera: rotation block is not a proper rotation");
  }
}

void validate_scenario(const Scenario& scenario) {
  if (scenario.road.centerline.size() < 2) {
    throw ValidationError("road centerline needs at least 2 points");
  }
  if (!(scenario.road.width > 0)) {
    throw ValidationError("road width must be positive");
  }

  scenario.risk_params.validate();
  scenario.planner_params.validate();

  std::vector<std::string> seen_ids;
  for (const Hazard& h : scenario.hazards) {
    if (h.id.empty()) {
      throw ValidationError("hazard with empty id");
    }
    for (const std::string& other : seen_ids) {
      if (other == h.id) {
        throw ValidationError("duplicate hazard id '" + h.id + "'");
      }
    }
    seen_ids.push_back(h.id);
    if (h.footprint.size() < 3) {
      throw ValidationError("hazard '" + h.id + "': footprint needs at least 3 vertices");
    }
    if (!polygon_is_simple(h.footprint)) {
      throw ValidationError("hazard '" + h.id + "': footprint is not a simple polygon");
    }
    if (h.depth_m < 0) {
      throw ValidationError("hazard '" + h.id + "': depth_m must be nonnegative");
    }
    if (h.base_context_score < 0 || h.base_context_score > 1) {
      throw ValidationError("hazard '" + h.id + "': base_context_score outside [0, 1]");
    }
  }

  const MotorcycleState& start = scenario.start;
  if (start.v < 0) {
    throw ValidationError("start state: v must be nonnegative");
  }
  if (std::abs(start.delta) > scenario.planner_params.delta_max) {
    throw ValidationError("start state: |delta| exceeds delta_max");
  }
  if (std::abs(start.theta - normalize_angle(start.theta)) > 1e-12) {
    throw ValidationError("start state: theta must be normalized to (-pi, pi]");
  }
  if (!scenario.road.contains(Vec2(start.x, start.y))) {
    throw ValidationError("start outside corridor");
  }
  for (const Hazard& h : scenario.hazards) {
    if (point_in_polygon_closed(Vec2(start.x, start.y), h.footprint)) {
      throw ValidationError("start inside hazard '" + h.id + "'");
    }
  }

  if (!scenario.road.contains(scenario.goal)) {
    throw ValidationError("goal outside corridor");
  }

  CameraModel camera = camera_pose_at(scenario.start, scenario.camera);
  validate_camera(camera);
}

Scenario scenario_from_json_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("scenario parse error: ") + e.what());
  }
  Scenario scenario;
  try {
    j.get_to(scenario);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("scenario schema error: ") + e.what());
  }
  // Angles are stored normalized so downstream invariants hold by construction.
  scenario.start.theta = normalize_angle(scenario.start.theta);
  validate_scenario(scenario);
  return scenario;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError("cannot open scenario file: " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return scenario_from_json_text(buffer.str());
}

}  // namespace riskfield

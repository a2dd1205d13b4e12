#pragma once

#include "riskfield/geometry.hpp"
#include "riskfield/params.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace riskfield {

/// Planar motorcycle state. phi (lean angle) is carried as perception context
/// only and never enters the dynamics.
struct MotorcycleState {
  double x{0.0};      // [m], world frame
  double y{0.0};      // [m]
  double theta{0.0};  // heading [rad], normalized to (-pi, pi]
  double v{0.0};      // forward speed [m/s], >= 0
  double delta{0.0};  // steering angle [rad]
  double phi{0.0};    // lean angle [rad]

  bool operator==(const MotorcycleState&) const = default;
};

/// Ground-truth hazard: a flat footprint polygon on the ground plane plus a
/// scalar depth deviation and the context score the oracle provider reports.
struct Hazard {
  std::string id;
  std::string label;
  Polygon footprint;              // world frame, z = 0 [m]
  double depth_m{0.0};            // depth deviation below the road plane [m]
  double base_context_score{0.0}; // oracle c_vlm, in [0, 1]

  Vec2 centroid() const { return polygon_centroid(footprint); }
};

struct Intrinsics {
  double fx{0.0};
  double fy{0.0};
  double cx{0.0};
  double cy{0.0};
};

/// Pinhole camera. Camera frame: +Z optical axis (forward), +X right, +Y down.
struct CameraModel {
  Intrinsics intrinsics{};
  int width{0};
  int height{0};
  Transform t_cw{Transform::Identity()};  // world -> camera
};

/// Fixed camera pose in the motorcycle body frame (x forward, y left, z up).
/// The base orientation is front-facing; pitch > 0 tilts the view downward.
struct CameraMount {
  double forward{0.0};  // [m] along body x
  double lateral{0.0};  // [m] along body y
  double height{1.2};   // [m] above ground
  double pitch{0.0};    // [rad], downward tilt

  Transform body_from_camera() const;
};

struct CameraRig {
  Intrinsics intrinsics{};
  int width{0};
  int height{0};
  CameraMount mount{};
};

/// Drivable corridor: points within width/2 of the centerline polyline.
struct RoadCorridor {
  std::vector<Vec2> centerline;
  double width{7.0};

  bool contains(const Vec2& p) const;
};

struct Scenario {
  std::string name;
  RoadCorridor road;
  std::vector<Hazard> hazards;
  MotorcycleState start{};
  Vec2 goal{0.0, 0.0};
  CameraRig camera{};
  PlannerParams planner_params{};
  RiskParams risk_params{};
  TrialParams trials{};
};

/// Planar body pose of the motorcycle as a rigid transform (T_wb).
Transform body_pose(const MotorcycleState& state);

/// Camera following the body pose composed with the fixed mount; intrinsics
/// are unchanged, t_cw is recomputed.
CameraModel camera_pose_at(const MotorcycleState& state, const CameraRig& rig);
CameraModel camera_pose_at(const MotorcycleState& state, const Intrinsics& intrinsics,
                           int width, int height, const Transform& body_from_camera);

/// Throws ValidationError naming the violated invariant.
void validate_camera(const CameraModel& camera);
void validate_scenario(const Scenario& scenario);

/// Loads and validates a scenario document. Throws ParseError on malformed
/// input and ValidationError on the first violated invariant.
Scenario load_scenario(const std::filesystem::path& path);
Scenario scenario_from_json_text(const std::string& text);

}  // namespace riskfield

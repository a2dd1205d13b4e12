#pragma once

#include "riskfield/grid.hpp"
#include "riskfield/scene.hpp"

#include <span>
#include <vector>

namespace riskfield {

/// Rounded pixel coordinates. valid means the point projects in front of the
/// camera and inside the image bounds; invalid samples carry m = n = -1.
struct PixelSample {
  int m{-1};  // column
  int n{-1};  // row
  bool valid{false};

  bool operator==(const PixelSample&) const = default;
};

/// Depth threshold below which a camera-frame point counts as behind the lens.
inline constexpr double kMinCameraDepth = 1e-6;

/// Homogeneous transform of a world point into the camera frame.
Vec3 world_to_camera(const Vec3& p_w, const Transform& t_cw);

/// Pinhole projection with nearest-pixel rounding and bounds check.
PixelSample project_point(const Vec3& p_c, const Intrinsics& intrinsics, int width, int height);

/// Binary mask of the hazard footprint: pixel (m, n) is 1 iff the ground-plane
/// ray through that pixel hits the footprint interior at positive camera
/// depth. Rays parallel to or above the horizon never hit.
Mask rasterize_footprint(const Hazard& hazard, const CameraModel& camera);

/// Projects trajectory waypoints, each lifted to z = ground_offset, in order.
std::vector<PixelSample> project_trajectory(std::span<const MotorcycleState> waypoints,
                                            const CameraModel& camera,
                                            double ground_offset = 0.0);

}  // namespace riskfield

#include "riskfield/projection.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace riskfield {

namespace {

// Camera-plane clearance required of every footprint vertex before the
// projected-bbox fast path applies; anything closer falls back to a full scan.
constexpr double kBboxDepthMargin = 1e-3;

struct GroundRayCaster {
  Vec3 origin;   // camera center in world frame
  Vec3 basis_x;  // world direction of one pixel step along +m
  Vec3 basis_y;  // world direction of one pixel step along +n
  Vec3 basis_z;  // world direction of the optical axis
  Intrinsics intrinsics;

  explicit GroundRayCaster(const CameraModel& camera) {
    const Transform t_wc = camera.t_cw.inverse();
    origin = t_wc.translation();
    const Eigen::Matrix3d r_wc = t_wc.linear();
    basis_x = r_wc.col(0);
    basis_y = r_wc.col(1);
    basis_z = r_wc.col(2);
    intrinsics = camera.intrinsics;
  }

  // Ground hit of the ray through pixel center (m, n); hit.z() carries the
  // camera depth of the hit (> 0) or a negative sentinel when there is none.
  Vec3 ground_hit(int m, int n) const {
    const double dx = (static_cast<double>(m) - intrinsics.cx) / intrinsics.fx;
    const double dy = (static_cast<double>(n) - intrinsics.cy) / intrinsics.fy;
    const Vec3 dir = basis_x * dx + basis_y * dy + basis_z;
    if (dir.z() == 0.0) {
      return Vec3(0.0, 0.0, -1.0);  // parallel to the ground plane
    }
    const double t = -origin.z() / dir.z();
    if (t <= 0.0) {
      return Vec3(0.0, 0.0, -1.0);  // above the horizon / behind the camera
    }
    return Vec3(origin.x() + t * dir.x(), origin.y() + t * dir.y(), t);
  }
};

void scan_region(const GroundRayCaster& caster, const Polygon& footprint, Mask& mask,
                 int m0, int m1, int n0, int n1) {
  for (int n = n0; n <= n1; ++n) {
    for (int m = m0; m <= m1; ++m) {
      const Vec3 hit = caster.ground_hit(m, n);
      if (hit.z() > 0.0 && point_in_polygon(Vec2(hit.x(), hit.y()), footprint)) {
        mask.at(n, m) = 1;
      }
    }
  }
}

}  // namespace

Vec3 world_to_camera(const Vec3& p_w, const Transform& t_cw) { return t_cw * p_w; }

PixelSample project_point(const Vec3& p_c, const Intrinsics& intrinsics, int width, int height) {
  PixelSample sample;
  if (p_c.z() <= kMinCameraDepth) {
    return sample;
  }
  const double u = intrinsics.fx * p_c.x() / p_c.z() + intrinsics.cx;
  const double v = intrinsics.fy * p_c.y() / p_c.z() + intrinsics.cy;
  sample.m = static_cast<int>(std::lround(u));
  sample.n = static_cast<int>(std::lround(v));
  sample.valid = sample.m >= 0 && sample.m < width && sample.n >= 0 && sample.n < height;
  if (!sample.valid) {
    sample.m = -1;
    sample.n = -1;
  }
  return sample;
}

Mask rasterize_footprint(const Hazard& hazard, const CameraModel& camera) {
  Mask mask(camera.width, camera.height, 0);
  if (hazard.footprint.size() < 3 || camera.width <= 0 || camera.height <= 0) {
    return mask;
  }

  const GroundRayCaster caster(camera);

  double min_depth = std::numeric_limits<double>::infinity();
  double max_depth = -std::numeric_limits<double>::infinity();
  double min_u = std::numeric_limits<double>::infinity();
  double max_u = -std::numeric_limits<double>::infinity();
  double min_v = std::numeric_limits<double>::infinity();
  double max_v = -std::numeric_limits<double>::infinity();
  for (const Vec2& vtx : hazard.footprint) {
    const Vec3 p_c = camera.t_cw * Vec3(vtx.x(), vtx.y(), 0.0);
    min_depth = std::min(min_depth, p_c.z());
    max_depth = std::max(max_depth, p_c.z());
    if (p_c.z() > kBboxDepthMargin) {
      min_u = std::min(min_u, camera.intrinsics.fx * p_c.x() / p_c.z() + camera.intrinsics.cx);
      max_u = std::max(max_u, camera.intrinsics.fx * p_c.x() / p_c.z() + camera.intrinsics.cx);
      min_v = std::min(min_v, camera.intrinsics.fy * p_c.y() / p_c.z() + camera.intrinsics.cy);
      max_v = std::max(max_v, camera.intrinsics.fy * p_c.y() / p_c.z() + camera.intrinsics.cy);
    }
  }

  if (max_depth <= kBboxDepthMargin) {
    // Footprint entirely at (or behind) the camera plane: interior depths are
    // bounded by the vertex maximum, while any ground hit of an in-image ray
    // has depth at least origin_z / max_dir_norm. When those ranges cannot
    // meet, the mask is provably empty; otherwise fall back to the full scan.
    const double mdx = std::max(camera.intrinsics.cx, camera.width - 1 - camera.intrinsics.cx) /
                       camera.intrinsics.fx;
    const double mdy = std::max(camera.intrinsics.cy, camera.height - 1 - camera.intrinsics.cy) /
                       camera.intrinsics.fy;
    const double max_dir_norm = mdx + mdy + 1.0;
    if (caster.origin.z() > kBboxDepthMargin * max_dir_norm) {
      return mask;
    }
    scan_region(caster, hazard.footprint, mask, 0, camera.width - 1, 0, camera.height - 1);
    return mask;
  }

  if (min_depth > kBboxDepthMargin) {
    // Fully in front: the footprint's image is bounded by its projected
    // vertices (the ground-plane homography maps edges to segments), so only
    // that pixel box (plus a guard pixel) can contain mask pixels.
    const int m0 = std::max(0, static_cast<int>(std::floor(min_u)) - 1);
    const int m1 = std::min(camera.width - 1, static_cast<int>(std::ceil(max_u)) + 1);
    const int n0 = std::max(0, static_cast<int>(std::floor(min_v)) - 1);
    const int n1 = std::min(camera.height - 1, static_cast<int>(std::ceil(max_v)) + 1);
    if (m0 > m1 || n0 > n1) {
      return mask;  // image box entirely off-frame
    }
    scan_region(caster, hazard.footprint, mask, m0, m1, n0, n1);
    return mask;
  }

  // Polygon straddles the camera plane: no reliable image bound, scan all pixels.
  scan_region(caster, hazard.footprint, mask, 0, camera.width - 1, 0, camera.height - 1);
  return mask;
}

std::vector<PixelSample> project_trajectory(std::span<const MotorcycleState> waypoints,
                                            const CameraModel& camera, double ground_offset) {
  std::vector<PixelSample> samples;
  samples.reserve(waypoints.size());
  for (const MotorcycleState& s : waypoints) {
    const Vec3 p_c = world_to_camera(Vec3(s.x, s.y, ground_offset), camera.t_cw);
    samples.push_back(project_point(p_c, camera.intrinsics, camera.width, camera.height));
  }
  return samples;
}

}  // namespace riskfield

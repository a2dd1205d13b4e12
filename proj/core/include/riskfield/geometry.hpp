#pragma once

#include <Eigen/Dense>
#include <Eigen/Geometry>

#include <array>
#include <vector>

namespace riskfield {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Transform = Eigen::Isometry3d;

/// Planar polygon on the ground plane, vertices in order, implicitly closed.
using Polygon = std::vector<Vec2>;

/// Wraps an angle to (-pi, pi].
double normalize_angle(double angle);

/// Signed area (positive for counter-clockwise winding).
double polygon_area(const Polygon& poly);

/// Area centroid; falls back to the vertex mean for degenerate polygons.
Vec2 polygon_centroid(const Polygon& poly);

/// True for a non-self-intersecting polygon with >= 3 vertices and nonzero area.
bool polygon_is_simple(const Polygon& poly);

/// Even-odd interior test. Boundary points are deterministic but unspecified.
bool point_in_polygon(const Vec2& p, const Polygon& poly);

/// Boundary-inclusive interior test.
bool point_in_polygon_closed(const Vec2& p, const Polygon& poly);

/// Closed-set segment intersection: shared endpoints and touching count as hits.
bool segments_intersect(const Vec2& a0, const Vec2& a1, const Vec2& b0, const Vec2& b1);

double point_segment_distance(const Vec2& p, const Vec2& a, const Vec2& b);

/// Minimum distance from a point to a polyline (meters).
double point_polyline_distance(const Vec2& p, const std::vector<Vec2>& polyline);

/// Axis-oriented body rectangle placed at a planar pose.
struct OrientedRect {
  Vec2 center{0.0, 0.0};
  double heading{0.0};  // rad
  double length{0.0};   // extent along heading [m]
  double width{0.0};    // extent across heading [m]

  std::array<Vec2, 4> corners() const;
  bool contains(const Vec2& p) const;  // boundary-inclusive
};

/// Closed-set intersection between an oriented rectangle and a simple polygon.
bool rect_intersects_polygon(const OrientedRect& rect, const Polygon& poly);

}  // namespace riskfield

#include "riskfield/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace riskfield {

namespace {

constexpr double kOnEdgeEps = 1e-9;

double cross2(const Vec2& a, const Vec2& b) { return a.x() * b.y() - a.y() * b.x(); }

// Sign of the triangle (a, b, c): >0 left turn, <0 right turn, 0 collinear.
double orient(const Vec2& a, const Vec2& b, const Vec2& c) {
  return cross2(b - a, c - a);
}

bool within_bbox(const Vec2& p, const Vec2& a, const Vec2& b) {
  return p.x() >= std::min(a.x(), b.x()) && p.x() <= std::max(a.x(), b.x()) &&
         p.y() >= std::min(a.y(), b.y()) && p.y() <= std::max(a.y(), b.y());
}

}  // namespace

double normalize_angle(double angle) {
  double r = std::remainder(angle, 2.0 * std::numbers::pi);
  if (r <= -std::numbers::pi) {
    r += 2.0 * std::numbers::pi;
  }
  return r;
}

double polygon_area(const Polygon& poly) {
  double twice_area = 0.0;
  const std::size_t n = poly.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    twice_area += cross2(poly[j], poly[i]);
  }
  return 0.5 * twice_area;
}

Vec2 polygon_centroid(const Polygon& poly) {
  const std::size_t n = poly.size();
  const double area = polygon_area(poly);
  if (n == 0) {
    return Vec2::Zero();
  }
  if (std::abs(area) < 1e-12) {
    Vec2 mean = Vec2::Zero();
    for (const Vec2& v : poly) {
      mean += v;
    }
    return mean / static_cast<double>(n);
  }
  Vec2 c = Vec2::Zero();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const double w = cross2(poly[j], poly[i]);
    c += (poly[j] + poly[i]) * w;
  }
  return c / (6.0 * area);
}

bool segments_intersect(const Vec2& a0, const Vec2& a1, const Vec2& b0, const Vec2& b1) {
  const double d1 = orient(b0, b1, a0);
  const double d2 = orient(b0, b1, a1);
  const double d3 = orient(a0, a1, b0);
  const double d4 = orient(a0, a1, b1);
  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
      ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0))) {
    return true;
  }
  if (d1 == 0 && within_bbox(a0, b0, b1)) return true;
  if (d2 == 0 && within_bbox(a1, b0, b1)) return true;
  if (d3 == 0 && within_bbox(b0, a0, a1)) return true;
  if (d4 == 0 && within_bbox(b1, a0, a1)) return true;
  return false;
}

bool polygon_is_simple(const Polygon& poly) {
  const std::size_t n = poly.size();
  if (n < 3) {
    return false;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if ((poly[i] - poly[(i + 1) % n]).norm() == 0.0) {
      return false;  // repeated consecutive vertex
    }
  }
  if (std::abs(polygon_area(poly)) == 0.0) {
    return false;
  }
  // Non-adjacent edge pairs must not touch.
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t i1 = (i + 1) % n;
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::size_t j1 = (j + 1) % n;
      const bool adjacent = (i1 == j) || (j1 == i);
      if (adjacent) {
        continue;
      }
      if (segments_intersect(poly[i], poly[i1], poly[j], poly[j1])) {
        return false;
      }
    }
  }
  return true;
}

bool point_in_polygon(const Vec2& p, const Polygon& poly) {
  const std::size_t n = poly.size();
  bool inside = false;
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Vec2& vi = poly[i];
    const Vec2& vj = poly[j];
    if (((vi.y() > p.y()) != (vj.y() > p.y())) &&
        (p.x() < (vj.x() - vi.x()) * (p.y() - vi.y()) / (vj.y() - vi.y()) + vi.x())) {
      inside = !inside;
    }
  }
  return inside;
}

bool point_in_polygon_closed(const Vec2& p, const Polygon& poly) {
  const std::size_t n = poly.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    if (point_segment_distance(p, poly[j], poly[i]) <= kOnEdgeEps) {
      return true;
    }
  }
  return point_in_polygon(p, poly);
}

double point_segment_distance(const Vec2& p, const Vec2& a, const Vec2& b) {
  const Vec2 ab = b - a;
  const double len2 = ab.squaredNorm();
  if (len2 == 0.0) {
    return (p - a).norm();
  }
  const double t = std::clamp((p - a).dot(ab) / len2, 0.0, 1.0);
  return (p - (a + t * ab)).norm();
}

double point_polyline_distance(const Vec2& p, const std::vector<Vec2>& polyline) {
  if (polyline.empty()) {
    return std::numeric_limits<double>::infinity();
  }
  if (polyline.size() == 1) {
    return (p - polyline.front()).norm();
  }
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < polyline.size(); ++i) {
    best = std::min(best, point_segment_distance(p, polyline[i], polyline[i + 1]));
  }
  return best;
}

std::array<Vec2, 4> OrientedRect::corners() const {
  const Vec2 u{std::cos(heading), std::sin(heading)};
  const Vec2 v{-u.y(), u.x()};
  const Vec2 du = u * (0.5 * length);
  const Vec2 dv = v * (0.5 * width);
  return {center + du + dv, center + du - dv, center - du - dv, center - du + dv};
}

bool OrientedRect::contains(const Vec2& p) const {
  const Vec2 u{std::cos(heading), std::sin(heading)};
  const Vec2 v{-u.y(), u.x()};
  const Vec2 d = p - center;
  return std::abs(d.dot(u)) <= 0.5 * length + kOnEdgeEps &&
         std::abs(d.dot(v)) <= 0.5 * width + kOnEdgeEps;
}

bool rect_intersects_polygon(const OrientedRect& rect, const Polygon& poly) {
  if (poly.size() < 3) {
    return false;
  }
  for (const Vec2& v : poly) {
    if (rect.contains(v)) {
      return true;
    }
  }
  const auto corners = rect.corners();
  for (const Vec2& c : corners) {
    if (point_in_polygon_closed(c, poly)) {
      return true;
    }
  }
  const std::size_t n = poly.size();
  for (std::size_t r = 0; r < 4; ++r) {
    const Vec2& r0 = corners[r];
    const Vec2& r1 = corners[(r + 1) % 4];
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
      if (segments_intersect(r0, r1, poly[j], poly[i])) {
        return true;
      }
    }
  }
  return false;
}

}  // namespace riskfield

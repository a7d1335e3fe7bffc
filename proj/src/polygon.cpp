#include "fovregion/polygon.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/geometry.hpp>
#include <boost/geometry/geometries/point_xy.hpp>
#include <boost/geometry/geometries/polygon.hpp>
#include <boost/geometry/geometries/multi_polygon.hpp>
#include <boost/geometry/algorithms/simplify.hpp>

namespace fovregion {

namespace bg = boost::geometry;

namespace {

using BPoint = bg::model::d2::point_xy<double>;
using BPolygon = bg::model::polygon<BPoint>;  // clockwise, closed
using BMulti = bg::model::multi_polygon<BPolygon>;

BPolygon to_boost(const Ring& ring) {
  BPolygon poly;
  for (const auto& p : ring) bg::append(poly.outer(), BPoint(p.x(), p.y()));
  bg::correct(poly);
  return poly;
}

Ring from_boost(const BPolygon& poly) {
  Ring out;
  const auto& outer = poly.outer();
  for (std::size_t i = 0; i + 1 < outer.size(); ++i)
    out.emplace_back(outer[i].x(), outer[i].y());
  make_ccw(out);
  return out;
}

double cross(const Vec2& o, const Vec2& a, const Vec2& b) {
  return (a.x() - o.x()) * (b.y() - o.y()) - (a.y() - o.y()) * (b.x() - o.x());
}

double segment_distance(const Vec2& p, const Vec2& a, const Vec2& b) {
  const Vec2 ab = b - a;
  const double len2 = ab.squaredNorm();
  double t = len2 > 0.0 ? (p - a).dot(ab) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return (a + t * ab - p).norm();
}

}  // namespace

double signed_area(const Ring& ring) {
  double s = 0.0;
  for (std::size_t i = 0, n = ring.size(); i < n; ++i) {
    const Vec2& a = ring[i];
    const Vec2& b = ring[(i + 1) % n];
    s += a.x() * b.y() - b.x() * a.y();
  }
  return 0.5 * s;
}

void make_ccw(Ring& ring) {
  if (signed_area(ring) < 0.0) std::reverse(ring.begin(), ring.end());
}

Ring convex_hull(std::vector<Vec2> pts) {
  std::sort(pts.begin(), pts.end(), [](const Vec2& a, const Vec2& b) {
    return a.x() < b.x() || (a.x() == b.x() && a.y() < b.y());
  });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const Vec2& a, const Vec2& b) { return (a - b).norm() < 1e-12; }),
            pts.end());
  if (pts.size() < 3) return pts;
  Ring hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0.0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

double distance_to_boundary(const Ring& ring, const Vec2& p) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0, n = ring.size(); i < n; ++i)
    best = std::min(best, segment_distance(p, ring[i], ring[(i + 1) % n]));
  return best;
}

bool point_in_ring(const Ring& ring, const Vec2& p, double tol) {
  if (ring.size() < 3) return !ring.empty() && distance_to_boundary(ring, p) <= tol;
  int winding = 0;
  for (std::size_t i = 0, n = ring.size(); i < n; ++i) {
    const Vec2& a = ring[i];
    const Vec2& b = ring[(i + 1) % n];
    if (a.y() <= p.y()) {
      if (b.y() > p.y() && cross(a, b, p) > 0.0) ++winding;
    } else if (b.y() <= p.y() && cross(a, b, p) < 0.0) {
      --winding;
    }
  }
  if (winding != 0) return true;
  return distance_to_boundary(ring, p) <= tol;
}

std::vector<Ring> ring_union(std::span<const Ring> rings) {
  BMulti acc;
  for (const auto& r : rings) {
    if (r.size() < 3) continue;
    BMulti next;
    bg::union_(acc, to_boost(r), next);
    acc = std::move(next);
  }
  std::vector<Ring> out;
  for (const auto& poly : acc) out.push_back(from_boost(poly));
  return out;
}

std::vector<Ring> inflate(std::span<const Ring> rings, double distance) {
  BMulti input;
  for (const auto& r : rings)
    if (r.size() >= 3) input.push_back(to_boost(r));
  if (input.empty() || distance <= 0.0) {
    std::vector<Ring> out;
    for (const auto& poly : input) out.push_back(from_boost(poly));
    return out;
  }
  BMulti result;
  bg::strategy::buffer::distance_symmetric<double> dist(distance);
  bg::strategy::buffer::join_miter join(4.0);
  bg::strategy::buffer::end_flat end;
  bg::strategy::buffer::point_square point;
  bg::strategy::buffer::side_straight side;
  bg::buffer(input, result, dist, side, join, end, point);
  std::vector<Ring> out;
  for (const auto& poly : result) out.push_back(from_boost(poly));
  return out;
}

Ring simplify(const Ring& ring, double tolerance) {
  if (ring.size() < 4 || tolerance <= 0.0) return ring;
  BPolygon out;
  bg::simplify(to_boost(ring), out, tolerance);
  return from_boost(out);
}

}  // namespace fovregion

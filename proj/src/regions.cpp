#include "fovregion/regions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "fovregion/errors.hpp"

namespace fovregion {

namespace {

constexpr double kMemberTol = 1e-9;

Vec2 xy(const Vec3& v) { return {v.x(), v.y()}; }

void check_plane(double h_c, const Vec3& p) {
  if (std::abs(p.z() - h_c) > 1e-9)
    throw GeometryError(ErrorCode::WrongPlane, "query point is not on Plane H");
}

Vec3 horizontal_unit(const Vec3& v) {
  Vec3 h(v.x(), v.y(), 0.0);
  return h.normalized();
}

}  // namespace

RnhRegion rnh_section(const RectBox& bh, const CameraModel& cam) {
  if (leans_back(bh))
    throw GeometryError(ErrorCode::ObtuseInclination,
                        "markers leaning back from the camera are not supported");
  const double h = cam.h_c;
  const double left_dz = bh.d.z() - bh.a.z();
  const double right_dz = bh.c.z() - bh.b.z();
  if (std::abs(left_dz) < 1e-12 || std::abs(right_dz) < 1e-12)
    throw GeometryError(ErrorCode::NoIntersection, "Plane H is parallel to the BH sides");

  RnhRegion out;
  out.h_c = h;
  out.p = bh.a + ((h - bh.a.z()) / left_dz) * (bh.d - bh.a);
  out.q = bh.b + ((h - bh.b.z()) / right_dz) * (bh.c - bh.b);
  out.p.z() = h;
  out.q.z() = h;

  const double l = (out.q - out.p).norm();
  out.chord = chord_params(l, cam.theta);
  const double r = out.chord.r;
  out.along = bh.ab_unit();
  out.h1 = out.p - ((2.0 * r - l) / 2.0) * out.along;
  out.h2 = out.q + ((2.0 * r - l) / 2.0) * out.along;

  out.alpha = inclination(bh);
  const double s = std::sin(out.alpha);
  out.a = r / s;
  out.b = r;
  out.c = out.chord.d / s;

  out.t1 = horizontal_unit(bh.frame.e0);
  out.h3 = out.h2 + out.c * out.t1;
  out.h4 = out.h1 + out.c * out.t1;
  return out;
}

RnvPrism rnv_prism(const RectBox& bv, const CameraModel& cam) {
  if (leans_back(bv))
    throw GeometryError(ErrorCode::ObtuseInclination,
                        "markers leaning back from the camera are not supported");
  RnvPrism p;
  p.frame = bv.frame;
  p.alpha = inclination(bv);
  const double l = bv.height();
  p.chord = chord_params(l, cam.phi);
  const double r = p.chord.r;
  const double d = p.chord.d;

  const Vec3 ab = bv.ab_unit();
  const Vec3 ad = bv.ad_unit();
  const double lateral = d + r;
  const double vertical = (2.0 * r - l) / 2.0;
  p.j = bv.a - lateral * ab - vertical * ad;
  p.k = bv.b + lateral * ab - vertical * ad;
  p.n = bv.d - lateral * ab + vertical * ad;
  p.m = bv.c + lateral * ab + vertical * ad;

  p.offset_dir = bv.frame.e0;
  p.j2 = p.j + d * p.offset_dir;
  p.k2 = p.k + d * p.offset_dir;
  p.n2 = p.n + d * p.offset_dir;
  p.m2 = p.m + d * p.offset_dir;
  p.box_a = bv.a;
  p.box_along = ab;
  p.box_down = ad;
  p.box_width = bv.width();
  p.box_height = l;
  return p;
}

namespace {

// Points where the horizontal plane z = h meets the edges of the hexahedron.
std::vector<Vec3> clip_hexahedron(const RnvPrism& prism, double h) {
  static constexpr std::array<std::pair<int, int>, 12> kEdges{{
      {0, 1}, {1, 2}, {2, 3}, {3, 0},  // back face J K M N
      {4, 5}, {5, 6}, {6, 7}, {7, 4},  // front face
      {0, 4}, {1, 5}, {2, 6}, {3, 7},  // depth edges
  }};
  const auto v = prism.vertices();
  std::vector<Vec3> hits;
  auto add = [&](const Vec3& p) {
    for (const auto& q : hits)
      if ((q - p).norm() < 1e-12) return;
    hits.push_back(p);
  };
  for (const auto& [i0, i1] : kEdges) {
    const double s0 = v[i0].z() - h;
    const double s1 = v[i1].z() - h;
    if (s0 == 0.0) add(v[i0]);
    if (s1 == 0.0) add(v[i1]);
    if (s0 * s1 < 0.0) add(v[i0] + (s0 / (s0 - s1)) * (v[i1] - v[i0]));
  }
  return hits;
}

}  // namespace

namespace {

// Section of the union of the chord discs spun +-90 degrees about every
// vertical chord of the box. Along Plane H we use u (along AB, horizontal)
// and t (horizontal, across AB). A point at offset w in front of the box
// plane and z from the chord middle is covered by the chord at lateral
// position s iff (rho - d)^2 + z^2 < r^2 with rho = hypot(u - s, w). Over
// s in [0, W] that gives the row u in (-A, W + A), A = sqrt((d + s_z)^2 - w^2),
// s_z = sqrt(r^2 - z^2), less a hollow near the chord that lies inside the
// hexahedron anyway.
Ring swept_section(const RnvPrism& p, double h, double tol, double& cap_depth) {
  cap_depth = 0.0;
  const double r = p.chord.r, d = p.chord.d;
  if (d + r <= 0.0) return {};
  const Vec3& e0 = p.offset_dir;
  const Vec3& e1 = p.box_along;
  const Vec3 across = Vec3(-e1.y(), e1.x(), 0.0).normalized();
  const Vec3 base(p.box_a.x(), p.box_a.y(), h);
  const Vec3 rel0 = base - p.box_a;
  const double w0 = rel0.dot(e0), wt = across.dot(e0);
  const double z0 = rel0.dot(p.box_down) - 0.5 * p.box_height, zt = across.dot(p.box_down);
  auto w_at = [&](double t) { return w0 + t * wt; };
  auto z_at = [&](double t) { return z0 + t * zt; };

  double lo = -std::numeric_limits<double>::infinity(), hi = -lo;
  auto bound = [&](double c0, double c1, double vmin, double vmax) {
    if (std::abs(c1) < 1e-15) {
      if (c0 < vmin || c0 > vmax) lo = 1.0, hi = -1.0;
      return;
    }
    double a = (vmin - c0) / c1, b = (vmax - c0) / c1;
    if (a > b) std::swap(a, b);
    lo = std::max(lo, a);
    hi = std::min(hi, b);
  };
  bound(w0, wt, 0.0, d + r);
  bound(z0, zt, -r, r);
  if (!(lo < hi)) return {};

  // concave on [lo, hi]
  auto f = [&](double t) {
    const double z = z_at(t);
    return d + std::sqrt(std::max(0.0, r * r - z * z)) - w_at(t);
  };
  double a = lo, b = hi;
  for (int i = 0; i < 200 && b - a > 1e-15; ++i) {
    const double m1 = a + (b - a) / 3, m2 = b - (b - a) / 3;
    if (f(m1) < f(m2)) a = m1;
    else b = m2;
  }
  const double tmax = 0.5 * (a + b);
  if (!(f(tmax) > 0.0)) return {};
  auto root = [&](double in, double out) {
    for (int i = 0; i < 200 && std::abs(out - in) > 1e-15; ++i) {
      const double mid = 0.5 * (in + out);
      (f(mid) > 0.0 ? in : out) = mid;
    }
    return out;
  };
  const double t0 = f(lo) >= 0.0 ? lo : root(tmax, lo);
  const double t1 = f(hi) >= 0.0 ? hi : root(tmax, hi);
  cap_depth = std::max(0.0, std::max(w_at(t0), w_at(t1)) - d);

  const int n = std::clamp(static_cast<int>(std::ceil(2.0 * (t1 - t0) / tol)), 8, 8192);
  const double step = (t1 - t0) / n;
  auto reach = [&](double t) {
    const double z = z_at(t), w = w_at(t);
    const double s = d + std::sqrt(std::max(0.0, r * r - z * z));
    return std::sqrt(std::max(0.0, s * s - w * w));
  };
  Ring ring;
  for (int i = 0; i <= n; ++i) {
    const double t = t0 + i * step;
    ring.push_back(xy(base - reach(t) * e1 + t * across));
  }
  for (int i = n; i >= 0; --i) {
    const double t = t0 + i * step;
    ring.push_back(xy(base + (p.box_width + reach(t)) * e1 + t * across));
  }
  make_ccw(ring);
  // Between samples the boundary strays from its chord by less than a step;
  // simplifying moves it by at most another half tolerance.
  const double eps = 0.5 * tol;
  const Ring coarse = simplify(ring, eps);
  auto grown = inflate(std::vector<Ring>{coarse}, step + eps);
  return grown.empty() ? ring : grown.front();
}

}  // namespace

RnvRegion rnv_section(const RnvPrism& prism, double h, double arc_tolerance) {
  RnvRegion out;
  out.h_c = h;

  const std::vector<Vec3> pts = clip_hexahedron(prism, h);
  out.prism_section = pts;
  std::vector<Vec2> flat;
  for (const auto& p : pts) flat.push_back(xy(p));
  for (const auto& v : convex_hull(flat)) out.vertices.emplace_back(v.x(), v.y(), h);

  out.swept = swept_section(prism, h, arc_tolerance, out.cap_depth);

  std::vector<Ring> parts;
  if (out.vertices.size() >= 3) {
    Ring hex;
    for (const auto& v : out.vertices) hex.push_back(xy(v));
    make_ccw(hex);
    parts.push_back(hex);
  }
  if (out.swept.size() >= 3) parts.push_back(out.swept);
  if (parts.empty()) return out;
  out.exists = true;
  out.polygons = ring_union(parts);

  if (out.prism_section.empty()) {
    out.case_id = 5;
  } else {
    const double j2z = prism.j2.z(), nz = prism.n.z();
    if (h >= std::max(nz, j2z)) out.case_id = 1;
    else if (h >= std::min(nz, j2z)) out.case_id = j2z >= nz ? 2 : 4;
    else out.case_id = 3;
  }
  return out;
}

Ring polygonize(const RnhRegion& rnh, double arc_tolerance) {
  const Vec2 along = xy(rnh.along);
  const Vec2 t1 = xy(rnh.t1);
  const Vec2 center = xy(rnh.ellipse_center());
  const double radius = std::max(rnh.a, rnh.b);
  const double step = 2.0 * std::acos(radius / (radius + arc_tolerance));
  const int segments = std::max(4, static_cast<int>(std::ceil(std::numbers::pi / step)));
  const double delta = std::numbers::pi / segments;
  const double scale = 1.0 / std::cos(delta / 2.0);

  Ring ring;
  auto push = [&](const Vec2& p) {
    if (ring.empty() || (ring.back() - p).norm() > 1e-12) ring.push_back(p);
  };
  push(xy(rnh.h1));
  push(xy(rnh.h2));
  push(xy(rnh.h3));
  for (int k = 0; k < segments; ++k) {
    const double ang = (k + 0.5) * delta;
    push(center + scale * (rnh.b * std::cos(ang) * along + rnh.a * std::sin(ang) * t1));
  }
  push(xy(rnh.h4));
  if (ring.size() > 1 && (ring.front() - ring.back()).norm() <= 1e-12) ring.pop_back();
  make_ccw(ring);
  return ring;
}

RnaRegion rna_union(const RnhRegion& rnh, const RnvRegion& rnv, double arc_tolerance) {
  RnaRegion out;
  out.rnh = rnh;
  out.rnv = rnv;
  out.arc_tolerance = arc_tolerance;
  out.rnh_polygon = polygonize(rnh, arc_tolerance);
  std::vector<Ring> parts{out.rnh_polygon};
  out.rnv_polygons = rnv.polygons;
  parts.insert(parts.end(), rnv.polygons.begin(), rnv.polygons.end());
  out.polygons = ring_union(parts);
  return out;
}

bool contains(const RnhRegion& region, const Vec3& p) {
  check_plane(region.h_c, p);
  const Vec3 rel = p - region.h1;
  const double s = rel.dot(region.along);
  const double w = rel.dot(region.t1);
  const double width = 2.0 * region.b;
  if (s < -kMemberTol || s > width + kMemberTol) return false;
  if (w < -kMemberTol) return false;
  if (w <= region.c + kMemberTol) return true;
  const double u = (s - region.b) / region.b;
  const double v = (w - region.c) / region.a;
  const double slack = 2.0 * kMemberTol / std::min(region.a, region.b);
  return u * u + v * v <= 1.0 + slack;
}

bool contains(const RnvRegion& region, const Vec3& p) {
  check_plane(region.h_c, p);
  if (!region.exists) return false;
  for (const auto& ring : region.polygons)
    if (point_in_ring(ring, xy(p), kMemberTol)) return true;
  return false;
}

bool contains(const RnaRegion& region, const Vec3& p) {
  return contains(region.rnh, p) || contains(region.rnv, p);
}

double signed_distance(const RnaRegion& rna, const Vec2& p) {
  double dist = std::numeric_limits<double>::infinity();
  bool inside = false;
  for (const auto& ring : rna.polygons) {
    dist = std::min(dist, distance_to_boundary(ring, p));
    inside = inside || point_in_ring(ring, p, 0.0);
  }
  return inside ? -dist : dist;
}

RegionSet build_regions(const Scene& scene, double arc_tolerance) {
  RegionSet set;
  set.extrema = compute_extrema(scene);
  set.bh = build_bh(scene, set.extrema);
  set.bv = build_bv(scene, set.extrema);
  set.rnh = rnh_section(set.bh, scene.camera);
  set.prism = rnv_prism(set.bv, scene.camera);
  const RnvRegion rnv = rnv_section(set.prism, scene.camera.h_c, arc_tolerance);
  set.rna = rna_union(set.rnh, rnv, arc_tolerance);
  return set;
}

}  // namespace fovregion

#include "fovregion/box.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include <Eigen/QR>

#include "fovregion/errors.hpp"

namespace fovregion {

PlaneProjection project_onto_box_plane(const Vec3& p, const Vec3& anchor, const Vec3& dir,
                                       const Vec3& n) {
  const double denom = dir.dot(n);
  if (std::abs(denom) <= 1e-9)
    throw GeometryError(ErrorCode::RayParallelToPlane,
                        "projection ray is parallel to the box plane");
  const double m = (anchor - p).dot(n) / denom;
  return {p + m * dir, m};
}

namespace {

// Point where `p + s * u` meets `q + t * v`. Both lines lie in the box plane,
// so the 3x2 system is consistent; solve it in the least-squares sense.
Vec3 intersect_lines(const Vec3& p, const Vec3& u, const Vec3& q, const Vec3& v) {
  Eigen::Matrix<double, 3, 2> lhs;
  lhs.col(0) = u;
  lhs.col(1) = -v;
  const Eigen::Vector2d st = lhs.colPivHouseholderQr().solve(q - p);
  return p + st(0) * u;
}

RectBox build_box(const Scene& scene, const Vec3& anchor, BoxKind kind) {
  const Frame frame = scene_frame(scene);
  const Vec3 center = scene.optical_reference();

  // Carry every feature point along its ray to the optical centre onto the
  // plane. Points already on the plane stay put (m = 0).
  std::vector<Vec3> projected;
  for (const auto& q : scene.all_points()) {
    projected.push_back(project_onto_box_plane(q, anchor, center - q, frame.e0).point);
  }

  std::size_t il = 0, ir = 0, it = 0, ib = 0;
  for (std::size_t i = 1; i < projected.size(); ++i) {
    const double s = projected[i].dot(frame.e1);
    const double h = projected[i].dot(frame.e2);
    if (s < projected[il].dot(frame.e1)) il = i;
    if (s > projected[ir].dot(frame.e1)) ir = i;
    if (h > projected[it].dot(frame.e2)) it = i;
    if (h < projected[ib].dot(frame.e2)) ib = i;
  }
  const Vec3& left = projected[il];
  const Vec3& right = projected[ir];
  const Vec3& top = projected[it];
  const Vec3& bottom = projected[ib];

  RectBox box;
  box.frame = frame;
  box.kind = kind;
  box.a = intersect_lines(left, frame.e2, top, frame.e1);
  box.b = intersect_lines(right, frame.e2, top, frame.e1);
  box.c = intersect_lines(right, frame.e2, bottom, frame.e1);
  box.d = intersect_lines(left, frame.e2, bottom, frame.e1);

  if (box.width() < 1e-9 || box.height() < 1e-9)
    throw GeometryError(ErrorCode::DegenerateBox,
                        kind == BoxKind::BH ? "BH has zero width or height"
                                            : "BV has zero width or height");
  return box;
}

}  // namespace

RectBox build_bh(const Scene& scene, const Extrema& extrema) {
  return build_box(scene, extrema.p_l, BoxKind::BH);
}

RectBox build_bv(const Scene& scene, const Extrema& extrema) {
  return build_box(scene, extrema.p_t, BoxKind::BV);
}

}  // namespace fovregion

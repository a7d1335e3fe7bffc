#pragma once

#include "fovregion/scene.hpp"

namespace fovregion {

enum class BoxKind { BH, BV };

// Oriented rectangle in the marker-frame plane. Corners run A -> B -> C -> D:
// A top-left, B top-right, C bottom-right, D bottom-left as seen from the
// camera side, so AB is along e1 and AD along -e2.
struct RectBox {
  Vec3 a, b, c, d;
  Frame frame;
  BoxKind kind = BoxKind::BH;

  double width() const { return (b - a).norm(); }
  double height() const { return (d - a).norm(); }
  Vec3 ab_unit() const { return (b - a).normalized(); }
  Vec3 ad_unit() const { return (d - a).normalized(); }
};

struct PlaneProjection {
  Vec3 point;
  double m = 0.0;  // p' = p + m * dir
};

// Moves p along dir until it meets the plane through `anchor` with normal n.
// Throws GeometryError(RayParallelToPlane) if |dir . n| <= 1e-9.
PlaneProjection project_onto_box_plane(const Vec3& p, const Vec3& anchor, const Vec3& dir,
                                       const Vec3& n);

// BH: plane through P_l, lateral sides through the left/right extremes and
// horizontal sides through the top/bottom extremes, every point first being
// carried along its ray to the reference optical centre onto the plane.
RectBox build_bh(const Scene& scene, const Extrema& extrema);

// BV: same construction with the plane anchored at P_t.
RectBox build_bv(const Scene& scene, const Extrema& extrema);

}  // namespace fovregion

#pragma once

#include <array>
#include <optional>
#include <vector>

#include "fovregion/box.hpp"
#include "fovregion/chord.hpp"
#include "fovregion/polygon.hpp"

namespace fovregion {

inline constexpr double kDefaultArcTolerance = 1e-3;

// Region on Plane H where no pan-tilt pose keeps the horizontal extent of the
// markers inside the image: rectangle H1 H2 H3 H4 (width 2b along H1->H2,
// depth c along t1) capped on the camera side by a half ellipse centred on
// the midpoint of H3 H4 with semi-axis a along t1 and b along H3 H4.
struct RnhRegion {
  Vec3 p, q;  // Plane H on the lateral box sides
  Vec3 h1, h2, h3, h4;
  Vec3 t1;     // in-plane unit normal of H1H2, towards the camera
  Vec3 along;  // unit H1 -> H2
  ChordParams chord;
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double alpha = 0.0;
  double h_c = 0.0;

  Vec3 ellipse_center() const { return 0.5 * (h3 + h4); }
};

// Extended vertical-constraint solid: hexahedron J K M N (in the BV plane)
// with its copy J' K' M' N' pushed a distance d towards the camera. The
// chord discs swept over the box reach up to d + r in front of it, so the
// box itself is kept to build that part exactly.
struct RnvPrism {
  Vec3 j, k, m, n;
  Vec3 j2, k2, m2, n2;  // primed vertices
  Vec3 offset_dir;      // unit, towards the camera
  Frame frame;
  ChordParams chord;
  double alpha = 0.0;
  Vec3 box_a;            // BV corner A
  Vec3 box_along;        // unit A -> B, horizontal
  Vec3 box_down;         // unit A -> D
  double box_width = 0.0;
  double box_height = 0.0;

  std::array<Vec3, 8> vertices() const { return {j, k, m, n, j2, k2, m2, n2}; }
};

// Plane H section of the extended vertical-constraint solid: the convex
// hexahedron section united with the section of the swept chord discs.
// `case_id` records which hexahedron faces Plane H cuts:
//   1 back + top, 2 back + front, 3 front + bottom, 4 top + bottom, 5 cap only.
struct RnvRegion {
  bool exists = false;
  int case_id = 0;
  std::vector<Vec3> vertices;          // hexahedron section, CCW from above, z = h_c
  std::vector<Vec3> prism_section;     // raw plane / edge hits
  Ring swept;                          // swept-disc section, slightly inflated
  double cap_depth = 0.0;              // reach of the discs past the front face
  std::vector<Ring> polygons;          // union of both parts
  double h_c = 0.0;
};

struct RnaRegion {
  RnhRegion rnh;
  RnvRegion rnv;
  double arc_tolerance = kDefaultArcTolerance;
  Ring rnh_polygon;
  std::vector<Ring> rnv_polygons;
  std::vector<Ring> polygons;  // union of the two
};

// Throws GeometryError(NoIntersection) if Plane H is parallel to the box sides
// and GeometryError(ObtuseInclination) for markers leaning back.
RnhRegion rnh_section(const RectBox& bh, const CameraModel& cam);

// Vertical chord parameters use the vertical aperture phi.
RnvPrism rnv_prism(const RectBox& bv, const CameraModel& cam);

// The swept part is sampled, simplified and then grown so that it still holds
// the exact section; the growth is at most `arc_tolerance` for sections up to
// 4 m across.
RnvRegion rnv_section(const RnvPrism& prism, double h_c,
                      double arc_tolerance = kDefaultArcTolerance);

RnaRegion rna_union(const RnhRegion& rnh, const RnvRegion& rnv,
                    double arc_tolerance = kDefaultArcTolerance);

// Analytic membership on Plane H; boundary points (within 1e-9) are inside.
// Throws GeometryError(WrongPlane) unless |p.z - h_c| <= 1e-9.
bool contains(const RnhRegion& region, const Vec3& p);
bool contains(const RnvRegion& region, const Vec3& p);
bool contains(const RnaRegion& region, const Vec3& p);

// Circumscribing polygon of the RNH shape; no vertex is further than
// `arc_tolerance` from the analytic boundary.
Ring polygonize(const RnhRegion& rnh, double arc_tolerance = kDefaultArcTolerance);

// Distance from p (on Plane H) to the polygonized RNA boundary, negative inside.
double signed_distance(const RnaRegion& rna, const Vec2& p);

struct RegionSet {
  Extrema extrema;
  RectBox bh;
  RectBox bv;
  RnhRegion rnh;
  RnvPrism prism;
  RnaRegion rna;
};

RegionSet build_regions(const Scene& scene, double arc_tolerance = kDefaultArcTolerance);

}  // namespace fovregion

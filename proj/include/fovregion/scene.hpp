#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace fovregion {

// Robot frame: origin at the robot base, z up, metres.
using Vec3 = Eigen::Vector3d;
using Vec2 = Eigen::Vector2d;

inline constexpr double kCoplanarTol = 1e-6;
inline constexpr double kOrthoTol = 1e-9;

struct Marker {
  std::string id;
  std::vector<Vec3> points;
  Vec3 unit_normal = Vec3::UnitZ();
};

// theta / phi are the full horizontal / vertical apertures in radians.
// h_c is the optical-centre height, which fixes the evaluation plane z = h_c.
struct CameraModel {
  double theta = 1.13;
  double phi = 1.13;
  int width = 1024;
  int height = 1024;
  double h_c = 0.0;
};

struct Scene {
  std::vector<Marker> markers;
  CameraModel camera;
  // Optical centre of the observation the boxes are built from.
  std::optional<Vec3> reference_center;

  Vec3 optical_reference() const {
    return reference_center.value_or(Vec3(0.0, 0.0, camera.h_c));
  }
  std::vector<Vec3> all_points() const;
};

// Right-handed orthonormal marker frame. e0 is the averaged marker normal,
// e1 is horizontal ("right" when facing the markers), e2 = e0 x e1 ("up").
struct Frame {
  Vec3 e0;
  Vec3 e1;
  Vec3 e2;
};

struct Extrema {
  Vec3 p_l;
  Vec3 p_r;
  Vec3 p_t;
  Vec3 p_b;
};

// Throws ValidationError when a camera, marker or scene invariant is violated.
void validate(const CameraModel& cam);
void validate(const Marker& marker);
void validate(const Scene& scene);

// Normalized mean of the marker normals, flipped if needed so that it points
// into the half-space containing `viewpoint` (the robot origin by default).
// Throws GeometryError(DegenerateNormal) if the normals cancel out.
Vec3 average_unit_normal(std::span<const Marker> markers,
                         const Vec3& viewpoint = Vec3::Zero());

// Throws GeometryError(VerticalNormal) when n is within 1e-9 of +-z.
Frame compute_frame(const Vec3& n);

Frame scene_frame(const Scene& scene);

Extrema compute_extrema(std::span<const Vec3> points, const Frame& frame);
Extrema compute_extrema(const Scene& scene);

}  // namespace fovregion

#include "fovregion/scene.hpp"

#include <cmath>
#include <numbers>

#include "fovregion/errors.hpp"

namespace fovregion {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DegenerateNormal: return "DegenerateNormal";
    case ErrorCode::VerticalNormal: return "VerticalNormal";
    case ErrorCode::RayParallelToPlane: return "RayParallelToPlane";
    case ErrorCode::DegenerateBox: return "DegenerateBox";
    case ErrorCode::BadAperture: return "BadAperture";
    case ErrorCode::NoIntersection: return "NoIntersection";
    case ErrorCode::ObtuseInclination: return "ObtuseInclination";
    case ErrorCode::WrongPlane: return "WrongPlane";
    case ErrorCode::BehindCamera: return "BehindCamera";
    case ErrorCode::Unreachable: return "Unreachable";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

std::vector<Vec3> Scene::all_points() const {
  std::vector<Vec3> out;
  for (const auto& m : markers) out.insert(out.end(), m.points.begin(), m.points.end());
  return out;
}

namespace {

bool finite(const Vec3& v) { return v.allFinite(); }

}  // namespace

void validate(const CameraModel& cam) {
  constexpr double pi = std::numbers::pi;
  if (!(cam.theta > 0.0 && cam.theta < pi))
    throw ValidationError("camera.theta must lie in (0, pi)");
  if (!(cam.phi > 0.0 && cam.phi < pi))
    throw ValidationError("camera.phi must lie in (0, pi)");
  if (cam.width < 1 || cam.height < 1)
    throw ValidationError("camera width/height must be >= 1 pixel");
  if (!std::isfinite(cam.h_c)) throw ValidationError("camera.h_c must be finite");
}

void validate(const Marker& marker) {
  if (marker.points.size() < 3)
    throw ValidationError("marker '" + marker.id + "' needs at least 3 points");
  for (const auto& p : marker.points)
    if (!finite(p)) throw ValidationError("marker '" + marker.id + "' has a non-finite point");
  if (!finite(marker.unit_normal) || std::abs(marker.unit_normal.norm() - 1.0) > 1e-9)
    throw ValidationError("marker '" + marker.id + "' normal is not a unit vector");

  Vec3 centroid = Vec3::Zero();
  for (const auto& p : marker.points) centroid += p;
  centroid /= static_cast<double>(marker.points.size());
  for (const auto& p : marker.points) {
    if (std::abs((p - centroid).dot(marker.unit_normal)) > kCoplanarTol)
      throw ValidationError("marker '" + marker.id + "' points are not coplanar with its normal");
  }
}

void validate(const Scene& scene) {
  validate(scene.camera);
  if (scene.markers.empty()) throw ValidationError("scene has no markers");
  std::size_t total = 0;
  for (const auto& m : scene.markers) {
    validate(m);
    total += m.points.size();
  }
  if (total < 2) throw ValidationError("scene needs at least two feature points");
  if (scene.reference_center && !finite(*scene.reference_center))
    throw ValidationError("reference_center must be finite");
}

Vec3 average_unit_normal(std::span<const Marker> markers, const Vec3& viewpoint) {
  if (markers.empty()) throw ValidationError("average_unit_normal needs at least one marker");
  Vec3 sum = Vec3::Zero();
  Vec3 centroid = Vec3::Zero();
  std::size_t count = 0;
  for (const auto& m : markers) {
    sum += m.unit_normal;
    for (const auto& p : m.points) {
      centroid += p;
      ++count;
    }
  }
  Vec3 mean = sum / static_cast<double>(markers.size());
  if (mean.norm() <= 1e-6)
    throw GeometryError(ErrorCode::DegenerateNormal, "marker normals cancel out");
  Vec3 n = mean.normalized();
  if (count > 0) {
    centroid /= static_cast<double>(count);
    if ((viewpoint - centroid).dot(n) < -1e-12) n = -n;
  }
  return n;
}

Frame compute_frame(const Vec3& n) {
  if (std::abs(n.z()) >= 1.0 - 1e-9)
    throw GeometryError(ErrorCode::VerticalNormal,
                        "marker normal is vertical; horizontal box axis undefined");
  Frame f;
  f.e0 = n.normalized();
  f.e1 = Vec3::UnitZ().cross(f.e0);
  f.e1.z() = 0.0;
  f.e1.normalize();
  f.e2 = f.e0.cross(f.e1);
  return f;
}

Frame scene_frame(const Scene& scene) {
  return compute_frame(average_unit_normal(scene.markers));
}

Extrema compute_extrema(std::span<const Vec3> points, const Frame& frame) {
  if (points.empty()) throw ValidationError("compute_extrema needs at least one point");
  std::size_t il = 0, ir = 0, it = 0, ib = 0;
  for (std::size_t i = 1; i < points.size(); ++i) {
    const double s = points[i].dot(frame.e1);
    const double h = points[i].dot(frame.e2);
    if (s < points[il].dot(frame.e1)) il = i;
    if (s > points[ir].dot(frame.e1)) ir = i;
    if (h > points[it].dot(frame.e2)) it = i;
    if (h < points[ib].dot(frame.e2)) ib = i;
  }
  return {points[il], points[ir], points[it], points[ib]};
}

Extrema compute_extrema(const Scene& scene) {
  const auto pts = scene.all_points();
  return compute_extrema(pts, scene_frame(scene));
}

}  // namespace fovregion

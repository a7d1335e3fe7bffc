#pragma once

#include <span>

#include "fovregion/scene.hpp"

namespace fovregion {

// Optical centre plus pan (about +z, measured from +x, counter-clockwise)
// and tilt (about the panned horizontal axis, positive looks up).
struct PanTiltPose {
  Vec3 position = Vec3::Zero();
  double pan = 0.0;
  double tilt = 0.0;
};

struct ImagePoint {
  double u = 0.0;
  double v = 0.0;
};

// Signed distances of the extreme image points to the image edges, pixels.
// left = u_l, right = W - u_r, top = v_t, bottom = H - v_b.
struct PixelMargins {
  double left = 0.0;
  double right = 0.0;
  double top = 0.0;
  double bottom = 0.0;

  double min() const;
  double horizontal() const { return left < right ? left : right; }
  double vertical() const { return top < bottom ? top : bottom; }
  bool visible() const { return min() > 0.0; }
};

// Camera axes in the robot frame for a pose: forward (optical axis), right
// (always horizontal) and down (image v direction).
struct CameraAxes {
  Vec3 forward;
  Vec3 right;
  Vec3 down;
};

CameraAxes camera_axes(double pan, double tilt);

// Pinhole projection, principal point (W/2, H/2), f_u = (W/2) / tan(theta/2),
// f_v = (H/2) / tan(phi/2). Throws GeometryError(BehindCamera) when the point's
// depth along the optical axis is <= 1e-9.
ImagePoint project(const Vec3& point, const PanTiltPose& pose, const CameraModel& cam);

// Margins of the whole point set for one pose. A point behind the camera
// contributes -(W + H) to every margin.
PixelMargins margins_at(std::span<const Vec3> points, const PanTiltPose& pose,
                        const CameraModel& cam);

struct OracleOptions {
  int pan_samples = 64;
  int tilt_samples = 64;
  double refine_tolerance = 1e-4;  // radians
  int restarts = 4;                // best grid cells refined independently
  double tilt_limit_margin = 1e-3;
};

struct BestPose {
  PanTiltPose pose;
  PixelMargins margins;
};

// Brute-force oracle: searches pan in (-pi, pi] and tilt in
// (-pi/2 + eps, pi/2 - eps) on a grid, then refines the best cells by a
// shrinking pattern search. Poses are ranked by their sorted margins
// (leximin), so the minimum margin is maximised first.
BestPose best_pose_margins(const Vec3& position, std::span<const Vec3> points,
                           const CameraModel& cam, const OracleOptions& opts = {});
BestPose best_pose_margins(const Vec3& position, const Scene& scene,
                           const OracleOptions& opts = {});

// Width of the smallest azimuth interval containing every point as seen
// from `position`. Points straight above or below are ignored.
double horizontal_span(const Vec3& position, std::span<const Vec3> points);

// Vertical angular extent of the points measured about the horizontal axis
// perpendicular to the centre of the azimuth interval.
double vertical_span_at_best_pan(const Vec3& position, std::span<const Vec3> points);

}  // namespace fovregion

#include "fovregion/camera.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "fovregion/errors.hpp"

namespace fovregion {

double PixelMargins::min() const { return std::min({left, right, top, bottom}); }

CameraAxes camera_axes(double pan, double tilt) {
  const double cp = std::cos(pan), sp = std::sin(pan);
  const double ct = std::cos(tilt), st = std::sin(tilt);
  return {Vec3(ct * cp, ct * sp, st), Vec3(sp, -cp, 0.0), Vec3(st * cp, st * sp, -ct)};
}

namespace {

constexpr double kMinDepth = 1e-9;
constexpr double kPi = std::numbers::pi;

struct Intrinsics {
  double fu, fv, cu, cv, w, h;
  explicit Intrinsics(const CameraModel& cam)
      : fu(0.5 * cam.width / std::tan(0.5 * cam.theta)),
        fv(0.5 * cam.height / std::tan(0.5 * cam.phi)),
        cu(0.5 * cam.width),
        cv(0.5 * cam.height),
        w(cam.width),
        h(cam.height) {}
};

using SortedMargins = std::array<double, 4>;

SortedMargins sorted(const PixelMargins& m) {
  SortedMargins s{m.left, m.right, m.top, m.bottom};
  std::sort(s.begin(), s.end());
  return s;
}

// Leximin order on sorted margin vectors.
bool better(const SortedMargins& a, const SortedMargins& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i] + 1e-9) return true;
    if (a[i] < b[i] - 1e-9) return false;
  }
  return false;
}

double wrap_angle(double a) {
  a = std::fmod(a + kPi, 2.0 * kPi);
  if (a <= 0.0) a += 2.0 * kPi;
  return a - kPi;
}

// Evaluates one pose, giving up as soon as the running minimum falls below
// `cutoff`. Returns false in that case.
bool evaluate(std::span<const Vec3> rel, const Intrinsics& in, const CameraAxes& ax,
              double cutoff, PixelMargins& out) {
  double umin = std::numeric_limits<double>::infinity();
  double umax = -umin, vmin = umin, vmax = -umin;
  const double behind = -(in.w + in.h);
  for (const auto& p : rel) {
    const double z = p.dot(ax.forward);
    if (z <= kMinDepth) {
      out = {behind, behind, behind, behind};
      return behind >= cutoff;
    }
    const double u = in.cu + in.fu * p.dot(ax.right) / z;
    const double v = in.cv + in.fv * p.dot(ax.down) / z;
    umin = std::min(umin, u);
    umax = std::max(umax, u);
    vmin = std::min(vmin, v);
    vmax = std::max(vmax, v);
    const double running = std::min({umin, in.w - umax, vmin, in.h - vmax});
    if (running < cutoff) return false;
  }
  out = {umin, in.w - umax, vmin, in.h - vmax};
  return true;
}

struct Candidate {
  double pan = 0.0;
  double tilt = 0.0;
  PixelMargins margins;
  SortedMargins key{};
};

}  // namespace

ImagePoint project(const Vec3& point, const PanTiltPose& pose, const CameraModel& cam) {
  const Intrinsics in(cam);
  const CameraAxes ax = camera_axes(pose.pan, pose.tilt);
  const Vec3 rel = point - pose.position;
  const double z = rel.dot(ax.forward);
  if (z <= kMinDepth) throw GeometryError(ErrorCode::BehindCamera, "point is behind the camera");
  return {in.cu + in.fu * rel.dot(ax.right) / z, in.cv + in.fv * rel.dot(ax.down) / z};
}

PixelMargins margins_at(std::span<const Vec3> points, const PanTiltPose& pose,
                        const CameraModel& cam) {
  std::vector<Vec3> rel;
  rel.reserve(points.size());
  for (const auto& p : points) rel.push_back(p - pose.position);
  PixelMargins m;
  evaluate(rel, Intrinsics(cam), camera_axes(pose.pan, pose.tilt),
           -std::numeric_limits<double>::infinity(), m);
  return m;
}

BestPose best_pose_margins(const Vec3& position, std::span<const Vec3> points,
                           const CameraModel& cam, const OracleOptions& opts) {
  const Intrinsics in(cam);
  std::vector<Vec3> rel;
  rel.reserve(points.size());
  Vec3 centroid = Vec3::Zero();
  for (const auto& p : points) {
    rel.push_back(p - position);
    centroid += rel.back();
  }
  centroid /= static_cast<double>(std::max<std::size_t>(1, points.size()));

  const double tilt_max = kPi / 2 - opts.tilt_limit_margin;
  const int restarts = std::max(1, opts.restarts);
  std::vector<Candidate> best;  // sorted, best first, at most `restarts`

  auto cutoff = [&]() {
    return static_cast<int>(best.size()) < restarts ? -std::numeric_limits<double>::infinity()
                                                    : best.back().key[0] - 1e-9;
  };
  auto offer = [&](double pan, double tilt) {
    PixelMargins m;
    if (!evaluate(rel, in, camera_axes(pan, tilt), cutoff(), m)) return;
    Candidate c{pan, tilt, m, sorted(m)};
    auto it = std::find_if(best.begin(), best.end(),
                           [&](const Candidate& o) { return better(c.key, o.key); });
    best.insert(it, c);
    if (static_cast<int>(best.size()) > restarts) best.pop_back();
  };

  // Aim at the centroid first so that the grid prunes early.
  const double horiz = std::hypot(centroid.x(), centroid.y());
  offer(std::atan2(centroid.y(), centroid.x()),
        std::clamp(std::atan2(centroid.z(), horiz), -tilt_max, tilt_max));

  const int np = std::max(1, opts.pan_samples);
  const int nt = std::max(1, opts.tilt_samples);
  const double pan_step = 2.0 * kPi / np;
  const double tilt_step = 2.0 * tilt_max / nt;
  for (int i = 0; i < np; ++i) {
    const double pan = -kPi + (i + 1) * pan_step;
    for (int j = 0; j < nt; ++j) offer(pan, -tilt_max + (j + 0.5) * tilt_step);
  }

  static constexpr std::array<std::pair<int, int>, 8> kDirs{
      {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {1, -1}, {-1, 1}, {-1, -1}}};

  const auto seeds = best;
  Candidate winner = seeds.front();
  for (const auto& seed : seeds) {
    Candidate cur = seed;
    double sp = pan_step, st = tilt_step;
    while (sp > opts.refine_tolerance || st > opts.refine_tolerance) {
      Candidate step_best = cur;
      for (const auto& [dp, dt] : kDirs) {
        const double pan = wrap_angle(cur.pan + dp * sp);
        const double tilt = std::clamp(cur.tilt + dt * st, -tilt_max, tilt_max);
        PixelMargins m;
        evaluate(rel, in, camera_axes(pan, tilt), -std::numeric_limits<double>::infinity(), m);
        const SortedMargins key = sorted(m);
        if (better(key, step_best.key)) step_best = {pan, tilt, m, key};
      }
      if (better(step_best.key, cur.key)) {
        cur = step_best;
      } else {
        sp *= 0.5;
        st *= 0.5;
      }
    }
    if (better(cur.key, winner.key)) winner = cur;
  }
  return {{position, winner.pan, winner.tilt}, winner.margins};
}

BestPose best_pose_margins(const Vec3& position, const Scene& scene, const OracleOptions& opts) {
  const auto pts = scene.all_points();
  return best_pose_margins(position, pts, scene.camera, opts);
}

double horizontal_span(const Vec3& position, std::span<const Vec3> points) {
  std::vector<double> az;
  for (const auto& p : points) {
    const Vec3 rel = p - position;
    if (std::hypot(rel.x(), rel.y()) <= 1e-12) continue;
    az.push_back(std::atan2(rel.y(), rel.x()));
  }
  if (az.size() < 2) return 0.0;
  std::sort(az.begin(), az.end());
  double max_gap = az.front() + 2.0 * kPi - az.back();
  for (std::size_t i = 1; i < az.size(); ++i) max_gap = std::max(max_gap, az[i] - az[i - 1]);
  return 2.0 * kPi - max_gap;
}

double vertical_span_at_best_pan(const Vec3& position, std::span<const Vec3> points) {
  std::vector<double> az;
  for (const auto& p : points) {
    const Vec3 rel = p - position;
    if (std::hypot(rel.x(), rel.y()) <= 1e-12) continue;
    az.push_back(std::atan2(rel.y(), rel.x()));
  }
  if (az.empty()) return 0.0;
  std::sort(az.begin(), az.end());
  // Centre of the smallest covering interval = opposite of the largest gap.
  double gap = az.front() + 2.0 * kPi - az.back();
  double gap_end = az.front();
  for (std::size_t i = 1; i < az.size(); ++i) {
    if (az[i] - az[i - 1] > gap) {
      gap = az[i] - az[i - 1];
      gap_end = az[i];
    }
  }
  const double center = gap_end + 0.5 * (2.0 * kPi - gap);
  const Vec3 facing(std::cos(center), std::sin(center), 0.0);
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (const auto& p : points) {
    const Vec3 rel = p - position;
    const double e = std::atan2(rel.z(), rel.dot(facing));
    lo = std::min(lo, e);
    hi = std::max(hi, e);
  }
  return hi - lo;
}

}  // namespace fovregion

#pragma once

#include <string>
#include <vector>

#include "fovregion/camera.hpp"
#include "fovregion/regions.hpp"

namespace fovregion {

struct Waypoint {
  double t = 0.0;
  Vec3 position = Vec3::Zero();  // robot base, z = 0
};

// Piecewise-linear in time; t strictly increasing.
struct Trajectory {
  std::vector<Waypoint> waypoints;

  double start_time() const { return waypoints.front().t; }
  double end_time() const { return waypoints.back().t; }
  Vec3 at(double t) const;  // clamped outside [start, end]
  double length() const;
};

// Throws ValidationError on an empty trajectory, non-increasing times or a
// waypoint off the ground plane.
void validate(const Trajectory& traj);

struct TraceRecord {
  double t = 0.0;
  Vec3 position = Vec3::Zero();  // camera position, z = h_c
  PixelMargins margins;
  bool in_rnh = false;
  bool in_rnv = false;
  bool in_rna = false;
};

// Samples start, start + dt, ... up to the end time (inclusive within 1e-9 s)
// and evaluates the best achievable margins and region flags at each sample.
std::vector<TraceRecord> simulate(const Trajectory& traj, const Scene& scene,
                                  const RegionSet& regions, double dt,
                                  const OracleOptions& oracle = {});

struct PlanOptions {
  double clearance = 0.05;  // metres added around the RNA
  double speed = 0.5;       // metres per second
};

// Shortest polyline from start to goal that stays out of the RNA inflated by
// the clearance, over the visibility graph of the inflated polygon vertices.
// Timed at constant speed from t = 0. Throws GeometryError(Unreachable) if an
// end point lies inside the inflated region or no route exists.
Trajectory plan_boundary_path(const Vec2& start, const Vec2& goal, const RnaRegion& rna,
                              const PlanOptions& opts = {});

// Obstacle rings used by the planner.
std::vector<Ring> planning_obstacles(const RnaRegion& rna, double clearance);

// True if the open segment a-b passes through the interior of a ring.
bool segment_blocked(const Vec2& a, const Vec2& b, const Ring& ring);

// CSV with header t,x,y,dist_left,dist_right,dist_top,dist_bottom,in_rnh,in_rnv,in_rna.
std::string trace_csv(const std::vector<TraceRecord>& records);
void write_trace_csv(const std::vector<TraceRecord>& records, const std::string& path);

// {"waypoints": [{"t": ..., "position": [x, y, z]}, ...]}
std::string trajectory_json(const Trajectory& traj);
Trajectory parse_trajectory(const std::string& text);

}  // namespace fovregion

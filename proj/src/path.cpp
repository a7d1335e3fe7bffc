#include "fovregion/path.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

#include <json.hpp>

#include "fovregion/errors.hpp"
#include "fovregion/format.hpp"
#include "fovregion/log.hpp"
#include "fovregion/scene_io.hpp"

namespace fovregion {

Vec3 Trajectory::at(double t) const {
  if (t <= waypoints.front().t) return waypoints.front().position;
  if (t >= waypoints.back().t) return waypoints.back().position;
  auto hi = std::upper_bound(waypoints.begin(), waypoints.end(), t,
                             [](double v, const Waypoint& w) { return v < w.t; });
  auto lo = hi - 1;
  const double s = (t - lo->t) / (hi->t - lo->t);
  return lo->position + s * (hi->position - lo->position);
}

double Trajectory::length() const {
  double len = 0.0;
  for (std::size_t i = 1; i < waypoints.size(); ++i)
    len += (waypoints[i].position - waypoints[i - 1].position).norm();
  return len;
}

void validate(const Trajectory& traj) {
  if (traj.waypoints.empty()) throw ValidationError("trajectory has no waypoints");
  for (std::size_t i = 0; i < traj.waypoints.size(); ++i) {
    const auto& w = traj.waypoints[i];
    if (!std::isfinite(w.t) || !w.position.allFinite())
      throw ValidationError("trajectory waypoint " + std::to_string(i) + " is not finite");
    if (std::abs(w.position.z()) > 1e-9)
      throw ValidationError("trajectory waypoints must lie on the ground plane z = 0");
    if (i > 0 && !(w.t > traj.waypoints[i - 1].t))
      throw ValidationError("trajectory times must be strictly increasing");
  }
}

std::vector<TraceRecord> simulate(const Trajectory& traj, const Scene& scene,
                                  const RegionSet& regions, double dt,
                                  const OracleOptions& oracle) {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw ValidationError("dt must be positive");
  validate(traj);
  const auto pts = scene.all_points();
  const double h = scene.camera.h_c;
  const double t0 = traj.start_time();
  const auto steps = static_cast<long>(std::floor((traj.end_time() - t0) / dt + 1e-9));

  std::vector<TraceRecord> out;
  out.reserve(static_cast<std::size_t>(steps) + 1);
  for (long k = 0; k <= steps; ++k) {
    TraceRecord r;
    r.t = t0 + static_cast<double>(k) * dt;
    r.position = traj.at(r.t);
    r.position.z() = h;
    r.margins = best_pose_margins(r.position, pts, scene.camera, oracle).margins;
    r.in_rnh = contains(regions.rna.rnh, r.position);
    r.in_rnv = contains(regions.rna.rnv, r.position);
    r.in_rna = r.in_rnh || r.in_rnv;
    out.push_back(r);
  }
  return out;
}

namespace {

double cross(const Vec2& a, const Vec2& b) { return a.x() * b.y() - a.y() * b.x(); }

bool strictly_inside(const Ring& ring, const Vec2& p) {
  return point_in_ring(ring, p, 0.0) && distance_to_boundary(ring, p) > 1e-9;
}

}  // namespace

bool segment_blocked(const Vec2& a, const Vec2& b, const Ring& ring) {
  // Split a-b wherever it meets the ring and test each piece's midpoint.
  const Vec2 d = b - a;
  std::vector<double> cuts{0.0, 1.0};
  for (std::size_t i = 0, n = ring.size(); i < n; ++i) {
    const Vec2& p = ring[i];
    const Vec2 e = ring[(i + 1) % n] - p;
    const double den = cross(d, e);
    if (std::abs(den) < 1e-15) continue;
    const double s = cross(p - a, e) / den;
    const double u = cross(p - a, d) / den;
    if (s > 0.0 && s < 1.0 && u >= -1e-12 && u <= 1.0 + 1e-12) cuts.push_back(s);
  }
  std::sort(cuts.begin(), cuts.end());
  for (std::size_t i = 1; i < cuts.size(); ++i) {
    if (cuts[i] - cuts[i - 1] < 1e-12) continue;
    if (strictly_inside(ring, a + 0.5 * (cuts[i] + cuts[i - 1]) * d)) return true;
  }
  return false;
}

std::vector<Ring> planning_obstacles(const RnaRegion& rna, double clearance) {
  return inflate(rna.polygons, clearance);
}

Trajectory plan_boundary_path(const Vec2& start, const Vec2& goal, const RnaRegion& rna,
                              const PlanOptions& opts) {
  if (!(opts.speed > 0.0)) throw ValidationError("speed must be positive");
  if (opts.clearance < 0.0) throw ValidationError("clearance must be non-negative");
  const std::vector<Ring> obstacles = planning_obstacles(rna, opts.clearance);
  for (const auto& ring : obstacles) {
    if (strictly_inside(ring, start))
      throw GeometryError(ErrorCode::Unreachable, "start lies inside the inflated RNA");
    if (strictly_inside(ring, goal))
      throw GeometryError(ErrorCode::Unreachable, "goal lies inside the inflated RNA");
  }

  std::vector<Vec2> nodes{start, goal};
  for (const auto& ring : obstacles) nodes.insert(nodes.end(), ring.begin(), ring.end());

  auto visible = [&](std::size_t i, std::size_t j) {
    for (const auto& ring : obstacles)
      if (segment_blocked(nodes[i], nodes[j], ring)) return false;
    return true;
  };

  // Dijkstra with lazily evaluated edges.
  const std::size_t n = nodes.size();
  std::vector<double> dist(n, std::numeric_limits<double>::infinity());
  std::vector<std::size_t> prev(n, n);
  std::vector<bool> done(n, false);
  using Item = std::pair<double, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  dist[0] = 0.0;
  queue.emplace(0.0, 0);
  while (!queue.empty()) {
    const auto [du, u] = queue.top();
    queue.pop();
    if (done[u]) continue;
    done[u] = true;
    if (u == 1) break;
    for (std::size_t v = 0; v < n; ++v) {
      if (done[v] || v == u) continue;
      const double w = (nodes[v] - nodes[u]).norm();
      if (du + w >= dist[v]) continue;
      if (!visible(u, v)) continue;
      dist[v] = du + w;
      prev[v] = u;
      queue.emplace(dist[v], v);
    }
  }
  if (!std::isfinite(dist[1]))
    throw GeometryError(ErrorCode::Unreachable, "no collision-free route to the goal");

  std::vector<Vec2> route;
  for (std::size_t v = 1; v != n; v = prev[v]) {
    route.push_back(nodes[v]);
    if (v == 0) break;
  }
  std::reverse(route.begin(), route.end());

  Trajectory traj;
  double t = 0.0;
  for (std::size_t i = 0; i < route.size(); ++i) {
    if (i > 0) {
      const double step = (route[i] - route[i - 1]).norm();
      if (step < 1e-12) continue;
      t += step / opts.speed;
    }
    traj.waypoints.push_back({t, Vec3(route[i].x(), route[i].y(), 0.0)});
  }
  log().debug("planned {} waypoints, length {:.3f} m", traj.waypoints.size(), traj.length());
  return traj;
}

std::string trace_csv(const std::vector<TraceRecord>& records) {
  std::string out = "t,x,y,dist_left,dist_right,dist_top,dist_bottom,in_rnh,in_rnv,in_rna\n";
  for (const auto& r : records) {
    out += fmt6(r.t) + ',' + fmt6(r.position.x()) + ',' + fmt6(r.position.y()) + ',' +
           fmt6(r.margins.left) + ',' + fmt6(r.margins.right) + ',' + fmt6(r.margins.top) + ',' +
           fmt6(r.margins.bottom) + ',' + (r.in_rnh ? "1" : "0") + ',' + (r.in_rnv ? "1" : "0") +
           ',' + (r.in_rna ? "1" : "0") + '\n';
  }
  return out;
}

void write_trace_csv(const std::vector<TraceRecord>& records, const std::string& path) {
  write_text(path, trace_csv(records));
}

std::string trajectory_json(const Trajectory& traj) {
  nlohmann::ordered_json j;
  j["waypoints"] = nlohmann::ordered_json::array();
  for (const auto& w : traj.waypoints) {
    nlohmann::ordered_json item;
    item["t"] = w.t;
    item["position"] = {w.position.x(), w.position.y(), w.position.z()};
    j["waypoints"].push_back(item);
  }
  return j.dump(2) + "\n";
}

Trajectory parse_trajectory(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("trajectory is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || doc.size() != 1 || !doc.contains("waypoints") ||
      !doc["waypoints"].is_array())
    throw ValidationError("trajectory must be {\"waypoints\": [...]}");
  Trajectory traj;
  for (const auto& w : doc["waypoints"]) {
    if (!w.is_object() || w.size() != 2 || !w.contains("t") || !w.contains("position"))
      throw ValidationError("each waypoint needs exactly 't' and 'position'");
    const auto& p = w["position"];
    if (!w["t"].is_number() || !p.is_array() || p.size() < 2 || p.size() > 3)
      throw ValidationError("waypoint position must be [x, y] or [x, y, z]");
    for (const auto& c : p)
      if (!c.is_number()) throw ValidationError("waypoint coordinates must be numbers");
    Waypoint wp;
    wp.t = w["t"].get<double>();
    wp.position = Vec3(p[0].get<double>(), p[1].get<double>(),
                       p.size() == 3 ? p[2].get<double>() : 0.0);
    traj.waypoints.push_back(wp);
  }
  validate(traj);
  return traj;
}

}  // namespace fovregion

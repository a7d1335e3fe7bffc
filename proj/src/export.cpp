#include "fovregion/export.hpp"

#include <algorithm>
#include <limits>

#include <json.hpp>

#include "fovregion/errors.hpp"
#include "fovregion/format.hpp"

namespace fovregion {

using ojson = nlohmann::ordered_json;

namespace {

ojson v3(const Vec3& v) { return {v.x(), v.y(), v.z()}; }

ojson ring_json(const Ring& ring) {
  ojson a = ojson::array();
  for (const auto& p : ring) a.push_back({p.x(), p.y()});
  return a;
}

ojson box_json(const RectBox& box) {
  ojson j;
  j["a"] = v3(box.a);
  j["b"] = v3(box.b);
  j["c"] = v3(box.c);
  j["d"] = v3(box.d);
  j["e0"] = v3(box.frame.e0);
  j["e1"] = v3(box.frame.e1);
  j["e2"] = v3(box.frame.e2);
  return j;
}

}  // namespace

std::string region_json(const RegionSet& rs, bool dump_boxes) {
  ojson j;
  const RnhRegion& h = rs.rna.rnh;
  ojson rnh;
  rnh["h1"] = v3(h.h1);
  rnh["h2"] = v3(h.h2);
  rnh["h3"] = v3(h.h3);
  rnh["h4"] = v3(h.h4);
  rnh["a"] = h.a;
  rnh["b"] = h.b;
  rnh["c"] = h.c;
  rnh["t1"] = v3(h.t1);
  rnh["alpha"] = h.alpha;
  rnh["ellipse_center"] = v3(h.ellipse_center());
  rnh["chord"] = {{"l", h.chord.l}, {"r", h.chord.r}, {"d", h.chord.d}};
  j["rnh"] = rnh;

  const RnvRegion& v = rs.rna.rnv;
  ojson rnv;
  rnv["exists"] = v.exists;
  rnv["case"] = v.case_id;
  rnv["vertices"] = ojson::array();
  for (const auto& p : v.vertices) rnv["vertices"].push_back(v3(p));
  rnv["caps"] = ojson::array();
  if (v.swept.size() >= 3)
    rnv["caps"].push_back({{"radius", rs.prism.chord.r},
                           {"depth", v.cap_depth},
                           {"outline", ring_json(v.swept)}});
  rnv["chord"] = {{"l", rs.prism.chord.l}, {"r", rs.prism.chord.r}, {"d", rs.prism.chord.d}};
  j["rnv"] = rnv;

  j["h_c"] = h.h_c;
  j["arc_tolerance"] = rs.rna.arc_tolerance;
  ojson polys = ojson::array();
  for (const auto& r : rs.rna.polygons) polys.push_back(ring_json(r));
  // rna_polygon is the largest component; rna_polygons has all of them.
  j["rna_polygon"] = ojson::array();
  if (!rs.rna.polygons.empty()) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < rs.rna.polygons.size(); ++i)
      if (signed_area(rs.rna.polygons[i]) > signed_area(rs.rna.polygons[best])) best = i;
    j["rna_polygon"] = polys[best];
  }
  j["rna_polygons"] = polys;

  if (dump_boxes) {
    j["boxes"] = {{"bh", box_json(rs.bh)}, {"bv", box_json(rs.bv)}};
    ojson prism = ojson::array();
    for (const auto& p : rs.prism.vertices()) prism.push_back(v3(p));
    j["boxes"]["rnv_prism"] = prism;
    j["extrema"] = {{"p_l", v3(rs.extrema.p_l)},
                    {"p_r", v3(rs.extrema.p_r)},
                    {"p_t", v3(rs.extrema.p_t)},
                    {"p_b", v3(rs.extrema.p_b)}};
  }
  return j.dump(2) + "\n";
}

std::string region_svg(const Scene& scene, const RegionSet& rs, const SvgOptions& opts) {
  if (!(opts.metres_per_px > 0.0)) throw ValidationError("SVG scale must be positive");
  double xmin = std::numeric_limits<double>::infinity(), ymin = xmin;
  double xmax = -xmin, ymax = -xmin;
  auto grow = [&](double x, double y) {
    xmin = std::min(xmin, x);
    xmax = std::max(xmax, x);
    ymin = std::min(ymin, y);
    ymax = std::max(ymax, y);
  };
  for (const auto& r : rs.rna.polygons)
    for (const auto& p : r) grow(p.x(), p.y());
  for (const auto& p : scene.all_points()) grow(p.x(), p.y());

  const double k = 1.0 / opts.metres_per_px;
  const double m = opts.margin_px;
  const double w = (xmax - xmin) * k + 2 * m;
  const double hgt = (ymax - ymin) * k + 2 * m;
  // y grows upwards in the robot frame, downwards in SVG.
  auto px = [&](double x) { return fmt6((x - xmin) * k + m); };
  auto py = [&](double y) { return fmt6((ymax - y) * k + m); };
  auto points = [&](const Ring& r) {
    std::string s;
    for (const auto& p : r) s += px(p.x()) + "," + py(p.y()) + " ";
    if (!s.empty()) s.pop_back();
    return s;
  };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt6(w) + "\" height=\"" +
         fmt6(hgt) + "\" viewBox=\"0 0 " + fmt6(w) + " " + fmt6(hgt) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (const auto& r : rs.rna.polygons)
    out += "<polygon class=\"rna\" points=\"" + points(r) +
           "\" fill=\"#f4d03f\" fill-opacity=\"0.35\" stroke=\"#7d6608\" stroke-width=\"1\"/>\n";
  out += "<polygon class=\"rnh\" points=\"" + points(rs.rna.rnh_polygon) +
         "\" fill=\"#e74c3c\" fill-opacity=\"0.35\" stroke=\"#922b21\" stroke-width=\"1\"/>\n";
  for (const auto& r : rs.rna.rnv_polygons)
    out += "<polygon class=\"rnv\" points=\"" + points(r) +
           "\" fill=\"#3498db\" fill-opacity=\"0.35\" stroke=\"#1b4f72\" stroke-width=\"1\"/>\n";
  for (const auto& marker : scene.markers) {
    // Footprint of the marker: its extent along the horizontal marker axis.
    const Frame f = compute_frame(marker.unit_normal);
    auto lo = marker.points.front(), hi = lo;
    for (const auto& p : marker.points) {
      if (p.dot(f.e1) < lo.dot(f.e1)) lo = p;
      if (p.dot(f.e1) > hi.dot(f.e1)) hi = p;
    }
    out += "<line class=\"marker\" x1=\"" + px(lo.x()) + "\" y1=\"" + py(lo.y()) + "\" x2=\"" +
           px(hi.x()) + "\" y2=\"" + py(hi.y()) + "\" stroke=\"black\" stroke-width=\"3\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace fovregion

// fovregion command-line tool. See README for the commands.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fovregion/camera.hpp"
#include "fovregion/errors.hpp"
#include "fovregion/export.hpp"
#include "fovregion/log.hpp"
#include "fovregion/oracle_compare.hpp"
#include "fovregion/path.hpp"
#include "fovregion/regions.hpp"
#include "fovregion/scene_io.hpp"

namespace fs = std::filesystem;
using namespace fovregion;

namespace {

enum Exit { kOk = 0, kIo = 1, kValidation = 2, kGeometry = 3 };

struct Common {
  std::string scene_path;
  std::string out_dir = ".";
  std::optional<double> theta, phi, hc;
  double arc_tol = kDefaultArcTolerance;
};

Scene load(const Common& c) {
  if (c.scene_path.empty()) throw ValidationError("--scene is required");
  Scene scene = load_scene(c.scene_path);
  if (c.theta) scene.camera.theta = *c.theta;
  if (c.phi) scene.camera.phi = *c.phi;
  if (c.hc) scene.camera.h_c = *c.hc;
  validate(scene);
  return scene;
}

fs::path out_path(const Common& c, const char* name) {
  std::error_code ec;
  fs::create_directories(c.out_dir, ec);
  if (ec) throw IoError("cannot create output directory " + c.out_dir);
  return fs::path(c.out_dir) / name;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Field-of-view constraint regions for a pan-tilt camera"};
  app.require_subcommand(1);
  app.fallthrough();

  Common c;
  app.add_option("--scene", c.scene_path, "Scene JSON file");
  app.add_option("--out", c.out_dir, "Output directory")->capture_default_str();
  app.add_option("--theta", c.theta, "Override horizontal aperture (rad)");
  app.add_option("--phi", c.phi, "Override vertical aperture (rad)");
  app.add_option("--hc", c.hc, "Override optical-centre height (m)");
  app.add_option("--arc-tol", c.arc_tol, "Polygonization tolerance (m)")->capture_default_str();

  auto* region = app.add_subcommand("region", "Write region.json and region.svg");
  bool dump_boxes = false;
  double svg_scale = 0.01;
  region->add_flag("--dump-boxes", dump_boxes, "Include BH, BV and the prism in the JSON");
  region->add_option("--svg-scale", svg_scale, "Metres per SVG pixel")->capture_default_str();

  auto* check = app.add_subcommand("check", "Membership and best margins at one position");
  double cx = 0.0, cy = 0.0;
  check->add_option("x", cx)->required();
  check->add_option("y", cy)->required();

  auto* sim_cmd = app.add_subcommand("simulate", "Trace a trajectory file to trace.csv");
  std::string path_file;
  double dt = 0.01;
  sim_cmd->add_option("path", path_file, "Trajectory JSON")->required();
  sim_cmd->add_option("--dt", dt, "Sampling step (s)")->capture_default_str();

  auto* plan_cmd = app.add_subcommand("plan", "Plan around the RNA; write plan.json and trace.csv");
  std::vector<double> ends;
  PlanOptions popts;
  plan_cmd->add_option("coords", ends, "x0 y0 x1 y1")->expected(4)->required();
  plan_cmd->add_option("--clearance", popts.clearance, "Clearance around the RNA (m)")
      ->capture_default_str();
  plan_cmd->add_option("--speed", popts.speed, "Robot speed (m/s)")->capture_default_str();
  plan_cmd->add_option("--dt", dt, "Trace sampling step (s)")->capture_default_str();

  auto* compare = app.add_subcommand("oracle-compare", "Grid sweep against the oracle");
  CompareOptions copts;
  std::vector<double> window;
  compare->add_option("--grid", copts.grid, "Cells per side")->capture_default_str();
  compare->add_option("--window", window, "x0 y0 size (m)")->expected(3);
  compare->add_option("--jitter", copts.jitter, "Sample jitter as a fraction of a cell")
      ->capture_default_str();
  compare->add_option("--seed", copts.seed, "Seed for the jitter")->capture_default_str();
  compare->add_option("--threads", copts.threads, "Worker threads, 0 = all cores")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kValidation;
  }

  try {
    const Scene scene = load(c);
    const RegionSet rs = build_regions(scene, c.arc_tol);

    if (region->parsed()) {
      write_text(out_path(c, "region.json"), region_json(rs, dump_boxes));
      SvgOptions so;
      so.metres_per_px = svg_scale;
      write_text(out_path(c, "region.svg"), region_svg(scene, rs, so));
    } else if (check->parsed()) {
      const Vec3 p(cx, cy, scene.camera.h_c);
      const BestPose best = best_pose_margins(p, scene);
      nlohmann::ordered_json j;
      j["position"] = {p.x(), p.y(), p.z()};
      j["in_rnh"] = contains(rs.rna.rnh, p);
      j["in_rnv"] = contains(rs.rna.rnv, p);
      j["in_rna"] = contains(rs.rna, p);
      j["min_margin_px"] = best.margins.min();
      j["margins"] = {{"left", best.margins.left},
                      {"right", best.margins.right},
                      {"top", best.margins.top},
                      {"bottom", best.margins.bottom}};
      j["pose"] = {{"pan", best.pose.pan}, {"tilt", best.pose.tilt}};
      const std::string text = j.dump(2) + "\n";
      write_text(out_path(c, "check.json"), text);
      std::cout << text;
    } else if (sim_cmd->parsed()) {
      const Trajectory traj = parse_trajectory(read_text(path_file));
      write_trace_csv(simulate(traj, scene, rs, dt), out_path(c, "trace.csv").string());
    } else if (plan_cmd->parsed()) {
      const Trajectory traj =
          plan_boundary_path({ends[0], ends[1]}, {ends[2], ends[3]}, rs.rna, popts);
      write_text(out_path(c, "plan.json"), trajectory_json(traj));
      write_trace_csv(simulate(traj, scene, rs, dt), out_path(c, "trace.csv").string());
    } else if (compare->parsed()) {
      copts.window = window.empty() ? default_window(scene)
                                    : Window{window[0], window[1], window[2]};
      if (copts.grid < 1 || !(copts.window.size > 0.0))
        throw ValidationError("--grid and the window size must be positive");
      const CompareResult res = oracle_compare(scene, rs, copts);
      write_text(out_path(c, "oracle_grid.csv"), compare_csv(res));
      write_text(out_path(c, "oracle_summary.json"), compare_summary_json(res, copts));
    }
  } catch (const ValidationError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kValidation;
  } catch (const GeometryError& e) {
    std::fprintf(stderr, "error (%s): %s\n", std::string(to_string(e.code())).c_str(), e.what());
    return kGeometry;
  } catch (const IoError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kIo;
  }
  return kOk;
}

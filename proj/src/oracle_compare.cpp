#include "fovregion/oracle_compare.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <random>
#include <thread>

#include <json.hpp>

#include "fovregion/format.hpp"
#include "fovregion/log.hpp"

namespace fovregion {

Window default_window(const Scene& scene, double size) {
  const auto pts = scene.all_points();
  Vec3 c = Vec3::Zero();
  for (const auto& p : pts) c += p;
  c /= static_cast<double>(pts.size());
  Vec3 n = average_unit_normal(scene.markers);
  Vec2 t(n.x(), n.y());
  t = t.norm() > 1e-12 ? t.normalized() : Vec2(1.0, 0.0);
  const Vec2 centre = Vec2(c.x(), c.y()) + 0.5 * size * t;
  return {centre.x() - 0.5 * size, centre.y() - 0.5 * size, size};
}

CompareResult oracle_compare(const Scene& scene, const RegionSet& regions,
                             const CompareOptions& opts) {
  const int n = std::max(1, opts.grid);
  const double cell = opts.window.size / n;
  const double h = scene.camera.h_c;
  const auto pts = scene.all_points();

  // Cell sample positions are fixed up front so that threading cannot change them.
  std::vector<Vec2> pos(static_cast<std::size_t>(n) * n);
  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> jit(-0.5, 0.5);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      double dx = 0.0, dy = 0.0;
      if (opts.jitter > 0.0) {
        dx = opts.jitter * jit(rng) * cell;
        dy = opts.jitter * jit(rng) * cell;
      }
      pos[static_cast<std::size_t>(j) * n + i] =
          Vec2(opts.window.x0 + (i + 0.5) * cell + dx, opts.window.y0 + (j + 0.5) * cell + dy);
    }
  }

  CompareResult out;
  out.samples.resize(pos.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < pos.size(); k = next++) {
      const Vec3 p(pos[k].x(), pos[k].y(), h);
      CompareSample s;
      s.x = p.x();
      s.y = p.y();
      for (const auto& m : scene.markers) {
        Vec3 c = Vec3::Zero();
        for (const auto& q : m.points) c += q;
        c /= static_cast<double>(m.points.size());
        s.behind = s.behind || (p - c).dot(m.unit_normal) <= 0.0;
      }
      s.analytic_in_rna = contains(regions.rna, p);
      const BestPose best = best_pose_margins(p, pts, scene.camera, opts.oracle);
      s.min_margin_px = best.margins.min();
      s.oracle_visible = best.margins.visible();
      s.signed_distance = signed_distance(regions.rna, pos[k]);
      out.samples[k] = s;
    }
  };
  unsigned threads = opts.threads ? opts.threads : std::thread::hardware_concurrency();
  threads = std::clamp(threads, 1u, 64u);
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  CompareSummary& sum = out.summary;
  sum.samples = static_cast<int>(out.samples.size());
  sum.cell = cell;
  sum.band_width = opts.band_cells * cell;
  for (const auto& s : out.samples) {
    if (s.behind) {
      ++sum.behind;
      continue;
    }
    ++sum.scored;
    if (s.analytic_in_rna != s.oracle_visible) {
      ++sum.agree;
    } else if (s.analytic_in_rna) {
      ++sum.conservative_slack;
    } else {
      ++sum.violations;
      sum.max_violation_distance = std::max(sum.max_violation_distance, s.signed_distance);
      if (s.signed_distance > sum.band_width) ++sum.violations_beyond_band;
    }
  }
  sum.agreement_pct = sum.scored ? 100.0 * sum.agree / sum.scored : 100.0;
  log().info("oracle-compare: {} scored, {:.2f}% agreement, {} violations ({} beyond band)",
             sum.scored, sum.agreement_pct, sum.violations, sum.violations_beyond_band);
  return out;
}

std::string compare_csv(const CompareResult& result) {
  std::string out = "x,y,analytic_in_rna,oracle_visible,min_margin_px\n";
  for (const auto& s : result.samples) {
    out += fmt6(s.x) + ',' + fmt6(s.y) + ',' + (s.analytic_in_rna ? "1" : "0") + ',' +
           (s.oracle_visible ? "1" : "0") + ',' + fmt6(s.min_margin_px) + '\n';
  }
  return out;
}

std::string compare_summary_json(const CompareResult& result, const CompareOptions& opts) {
  const CompareSummary& s = result.summary;
  nlohmann::ordered_json j;
  j["window"] = {{"x0", opts.window.x0}, {"y0", opts.window.y0}, {"size", opts.window.size}};
  j["grid"] = opts.grid;
  j["cell"] = s.cell;
  j["samples"] = s.samples;
  j["scored"] = s.scored;
  j["behind_markers"] = s.behind;
  j["agreement_pct"] = s.agreement_pct;
  j["conservative_slack"] = s.conservative_slack;
  j["violations"] = s.violations;
  j["violations_beyond_band"] = s.violations_beyond_band;
  j["max_violation_distance"] = s.max_violation_distance;
  j["band_width"] = s.band_width;
  j["jitter"] = opts.jitter;
  j["seed"] = opts.seed;
  return j.dump(2) + "\n";
}

}  // namespace fovregion

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fovregion/camera.hpp"
#include "fovregion/regions.hpp"

namespace fovregion {

// Axis-aligned square window on Plane H.
struct Window {
  double x0 = 0.0;
  double y0 = 0.0;
  double size = 6.0;
};

// Default window: 6 m square, centred laterally on the marker centroid and
// reaching 6 m from it along the horizontal part of the average normal.
Window default_window(const Scene& scene, double size = 6.0);

struct CompareOptions {
  Window window;
  int grid = 200;            // cells per side
  double band_cells = 2.0;   // tolerated band outside the RNA, in cells
  OracleOptions oracle;
  double jitter = 0.0;       // fraction of a cell; 0 samples cell centres
  std::uint64_t seed = 0;
  unsigned threads = 0;      // 0 = hardware concurrency
};

struct CompareSample {
  double x = 0.0;
  double y = 0.0;
  bool analytic_in_rna = false;
  bool oracle_visible = false;
  double min_margin_px = 0.0;
  double signed_distance = 0.0;  // to the polygonized RNA, negative inside
  bool behind = false;           // behind some marker plane, not scored
};

struct CompareSummary {
  int samples = 0;
  int scored = 0;
  int behind = 0;
  int agree = 0;
  int conservative_slack = 0;     // in RNA but the oracle finds a pose
  int violations = 0;             // outside RNA but no pose works
  int violations_beyond_band = 0;
  double max_violation_distance = 0.0;
  double cell = 0.0;
  double band_width = 0.0;
  double agreement_pct = 0.0;
};

struct CompareResult {
  std::vector<CompareSample> samples;  // row-major, y outer
  CompareSummary summary;
};

// Grid sweep of the analytic RNA against the brute-force oracle. Positions
// behind any marker plane are reported but not scored: the construction only
// describes the half-space the markers face.
CompareResult oracle_compare(const Scene& scene, const RegionSet& regions,
                             const CompareOptions& opts);

std::string compare_csv(const CompareResult& result);
std::string compare_summary_json(const CompareResult& result, const CompareOptions& opts);

}  // namespace fovregion

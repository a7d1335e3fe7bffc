#pragma once

#include <string>

#include "fovregion/regions.hpp"

namespace fovregion {

// {"rnh": {h1..h4, a, b, c, t1, ...}, "rnv": {exists, case, vertices, caps},
//  "rna_polygon": [[x, y], ...], "rna_polygons": [...]}, plus "boxes" when asked.
std::string region_json(const RegionSet& regions, bool dump_boxes = false);

struct SvgOptions {
  double metres_per_px = 0.01;
  double margin_px = 20.0;
};

// Top view of Plane H: RNH, RNV and their union filled, markers as segments.
std::string region_svg(const Scene& scene, const RegionSet& regions, const SvgOptions& opts = {});

}  // namespace fovregion

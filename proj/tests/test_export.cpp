#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "fovregion/errors.hpp"
#include "fovregion/export.hpp"
#include "fovregion/format.hpp"
#include "support.hpp"

using namespace fovregion;

TEST(Format, SixDigits) {
  EXPECT_EQ(fmt6(0.0), "0");
  EXPECT_EQ(fmt6(-0.0), "0");
  EXPECT_EQ(fmt6(1.5), "1.5");
  EXPECT_EQ(fmt6(2.0 / 3.0), "0.666667");
  EXPECT_EQ(fmt6(-1234567.0), "-1.23457e+06");
}

TEST(RegionJson, Fields) {
  const RegionSet rs = build_regions(fovregion::testing::vertical_square());
  const auto j = nlohmann::json::parse(region_json(rs, false));
  for (const char* k : {"h1", "h2", "h3", "h4", "a", "b", "c", "t1"})
    EXPECT_TRUE(j["rnh"].contains(k)) << k;
  EXPECT_TRUE(j["rnv"]["exists"].get<bool>());
  EXPECT_EQ(j["rnv"]["case"].get<int>(), rs.rna.rnv.case_id);
  EXPECT_EQ(j["rnv"]["caps"].size(), 1u);
  EXPECT_GE(j["rna_polygon"].size(), 3u);
  EXPECT_FALSE(j.contains("boxes"));
  EXPECT_DOUBLE_EQ(j["rnh"]["a"].get<double>(), rs.rnh.a);

  const auto k = nlohmann::json::parse(region_json(rs, true));
  EXPECT_EQ(k["boxes"]["rnv_prism"].size(), 8u);
  EXPECT_EQ(k["boxes"]["bh"]["a"][2].get<double>(), 2.0);
}

TEST(RegionSvg, CanonicalGolden) {
  const Scene s = fovregion::testing::vertical_square();
  const std::string svg = region_svg(s, build_regions(s), {});
  std::ifstream in(std::string(FOVREGION_GOLDEN_DIR) + "/canonical_region.svg");
  ASSERT_TRUE(in) << "golden file missing";
  std::stringstream golden;
  golden << in.rdbuf();
  EXPECT_EQ(svg, golden.str());
}

TEST(RegionSvg, RejectsBadScale) {
  const Scene s = fovregion::testing::vertical_square();
  EXPECT_THROW(region_svg(s, build_regions(s), {0.0, 20}), ValidationError);
}

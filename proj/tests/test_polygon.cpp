#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "fovregion/polygon.hpp"
#include "support.hpp"

using namespace fovregion;
using fovregion::testing::Gen;

namespace {

Ring square(double x0, double y0, double s) {
  return {{x0, y0}, {x0 + s, y0}, {x0 + s, y0 + s}, {x0, y0 + s}};
}

}  // namespace

TEST(Polygon, AreaAndOrientation) {
  Ring r = square(0, 0, 2);
  EXPECT_DOUBLE_EQ(signed_area(r), 4.0);
  std::reverse(r.begin(), r.end());
  EXPECT_DOUBLE_EQ(signed_area(r), -4.0);
  make_ccw(r);
  EXPECT_DOUBLE_EQ(signed_area(r), 4.0);
}

TEST(Polygon, HullDropsInteriorAndCollinear) {
  const Ring hull = convex_hull({{0, 0}, {1, 0}, {2, 0}, {2, 2}, {0, 2}, {1, 1}, {0, 1}});
  EXPECT_EQ(hull.size(), 4u);
  EXPECT_DOUBLE_EQ(signed_area(hull), 4.0);
}

TEST(Polygon, PointInRing) {
  const Ring r = square(0, 0, 1);
  EXPECT_TRUE(point_in_ring(r, {0.5, 0.5}));
  EXPECT_TRUE(point_in_ring(r, {1.0, 0.5}));  // on the edge
  EXPECT_FALSE(point_in_ring(r, {1.0 + 1e-6, 0.5}));
  EXPECT_FALSE(point_in_ring(r, {1.0 + 1e-6, 0.5}, 0.0));
  EXPECT_NEAR(distance_to_boundary(r, {0.5, 0.5}), 0.5, 1e-15);
}

TEST(Polygon, UnionOfOverlappingSquares) {
  const std::vector<Ring> parts{square(0, 0, 2), square(1, 1, 2)};
  const auto u = ring_union(parts);
  ASSERT_EQ(u.size(), 1u);
  EXPECT_NEAR(signed_area(u[0]), 7.0, 1e-12);
}

TEST(Polygon, UnionOfDisjointSquares) {
  const std::vector<Ring> parts{square(0, 0, 1), square(3, 0, 1)};
  EXPECT_EQ(ring_union(parts).size(), 2u);
}

TEST(PolygonProperty, InflateContainsMinkowskiSum) {
  Gen gen(41);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Vec2> pts;
    for (int i = 0; i < 8; ++i) pts.emplace_back(gen.uniform(-1, 1), gen.uniform(-1, 1));
    const Ring hull = convex_hull(pts);
    const double r = gen.uniform(0.01, 0.3);
    const std::vector<Ring> in{hull};
    const auto out = inflate(in, r);
    ASSERT_EQ(out.size(), 1u);
    for (int i = 0; i < 500; ++i) {
      // Random point at distance <= r from the hull.
      const Vec2& a = hull[gen.integer(0, static_cast<int>(hull.size()) - 1)];
      const double ang = gen.uniform(0, 2 * std::numbers::pi), rad = r * gen.uniform(0, 0.999);
      const Vec2 p = a + rad * Vec2(std::cos(ang), std::sin(ang));
      EXPECT_TRUE(point_in_ring(out[0], p, 1e-12));
    }
    EXPECT_GT(signed_area(out[0]), signed_area(hull));
  }
}

#include <algorithm>
#include <cmath>

#include <gtest/gtest.h>

#include "fovregion/errors.hpp"
#include "fovregion/scene.hpp"
#include "fovregion/scene_io.hpp"
#include "support.hpp"

using namespace fovregion;
using fovregion::testing::Gen;

namespace {

Marker marker_with_normal(const Vec3& n) {
  Marker m;
  m.id = "m";
  m.unit_normal = n;
  return m;
}

void expect_vec(const Vec3& a, const Vec3& b, double tol = 1e-12) {
  EXPECT_NEAR(a.x(), b.x(), tol);
  EXPECT_NEAR(a.y(), b.y(), tol);
  EXPECT_NEAR(a.z(), b.z(), tol);
}

}  // namespace

TEST(AverageNormal, SingleMarker) {
  std::vector<Marker> ms{marker_with_normal({0, -1, 0})};
  expect_vec(average_unit_normal(ms), {0, -1, 0});
}

TEST(AverageNormal, SymmetricPair) {
  std::vector<Marker> ms{marker_with_normal({0, -1, 0}), marker_with_normal({-1, 0, 0})};
  const double s = 1.0 / std::sqrt(2.0);
  expect_vec(average_unit_normal(ms), {-s, -s, 0});
}

TEST(AverageNormal, OpposingNormalsCancel) {
  std::vector<Marker> ms{marker_with_normal({0, -1, 0}), marker_with_normal({0, 1, 0})};
  try {
    average_unit_normal(ms);
    FAIL() << "expected DegenerateNormal";
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegenerateNormal);
  }
}

TEST(AverageNormal, FlipsTowardsRobot) {
  // Marker at y = 2 whose file normal points away from the origin.
  std::vector<Marker> ms{marker_with_normal({0, 1, 0})};
  ms[0].points = {{0, 2, 1}, {1, 2, 1}};
  expect_vec(average_unit_normal(ms), {0, -1, 0});
}

TEST(Frame, AxisAligned) {
  const Frame f = compute_frame({0, -1, 0});
  expect_vec(f.e1, {1, 0, 0});
  expect_vec(f.e2, {0, 0, 1});
}

TEST(Frame, Diagonal) {
  const double s = 1.0 / std::sqrt(2.0);
  const Frame f = compute_frame({-s, -s, 0});
  expect_vec(f.e1, {s, -s, 0});
  expect_vec(f.e2, {0, 0, 1});
}

TEST(Frame, VerticalNormalRejected) {
  for (const Vec3& n : {Vec3(0, 0, 1), Vec3(0, 0, -1)}) {
    try {
      compute_frame(n);
      FAIL();
    } catch (const GeometryError& e) {
      EXPECT_EQ(e.code(), ErrorCode::VerticalNormal);
    }
  }
}

TEST(FrameProperty, RightHandedOrthonormal) {
  Gen gen(11);
  for (int i = 0; i < 2000; ++i) {
    Vec3 n = gen.unit();
    if (std::abs(n.z()) > 1 - 1e-6) continue;
    const Frame f = compute_frame(n);
    EXPECT_NEAR(f.e0.dot(f.e1), 0.0, 1e-9);
    EXPECT_NEAR(f.e0.dot(f.e2), 0.0, 1e-9);
    EXPECT_NEAR(f.e1.dot(f.e2), 0.0, 1e-9);
    EXPECT_NEAR(f.e1.norm(), 1.0, 1e-9);
    EXPECT_NEAR(f.e2.norm(), 1.0, 1e-9);
    EXPECT_LT((f.e0.cross(f.e1) - f.e2).norm(), 1e-9);
    EXPECT_LE(std::abs(f.e1.z()), 1e-12);
  }
}

TEST(Extrema, Square) {
  const Scene s = fovregion::testing::vertical_square();
  const Extrema e = compute_extrema(s);
  EXPECT_DOUBLE_EQ(e.p_l.x(), -0.5);
  EXPECT_DOUBLE_EQ(e.p_r.x(), 0.5);
  EXPECT_DOUBLE_EQ(e.p_t.z(), 2.0);
  EXPECT_DOUBLE_EQ(e.p_b.z(), 1.0);
}

TEST(Extrema, PointPair) {
  std::vector<Vec3> pts{{0, 2, 1}, {1, 2, 2}};
  const Extrema e = compute_extrema(pts, compute_frame({0, -1, 0}));
  expect_vec(e.p_l, {0, 2, 1});
  expect_vec(e.p_b, {0, 2, 1});
  expect_vec(e.p_r, {1, 2, 2});
  expect_vec(e.p_t, {1, 2, 2});
}

TEST(Extrema, TwoMarkerSceneMatchesEnumeration) {
  const Scene s = fovregion::testing::scene_file("two_marker.json");
  const Frame f = scene_frame(s);
  const auto pts = s.all_points();
  double lo1 = 1e9, hi1 = -1e9, lo2 = 1e9, hi2 = -1e9;
  for (const auto& p : pts) {
    lo1 = std::min(lo1, p.dot(f.e1));
    hi1 = std::max(hi1, p.dot(f.e1));
    lo2 = std::min(lo2, p.dot(f.e2));
    hi2 = std::max(hi2, p.dot(f.e2));
  }
  const Extrema e = compute_extrema(s);
  EXPECT_NEAR(e.p_l.dot(f.e1), lo1, 1e-12);
  EXPECT_NEAR(e.p_r.dot(f.e1), hi1, 1e-12);
  EXPECT_NEAR(e.p_t.dot(f.e2), hi2, 1e-12);
  EXPECT_NEAR(e.p_b.dot(f.e2), lo2, 1e-12);
  // Top and bottom come from different markers.
  auto owner = [&](const Vec3& p) {
    for (std::size_t i = 0; i < s.markers.size(); ++i)
      for (const auto& q : s.markers[i].points)
        if ((p - q).norm() < 1e-12) return static_cast<int>(i);
    return -1;
  };
  EXPECT_GE(owner(e.p_t), 0);
  EXPECT_GE(owner(e.p_b), 0);
  EXPECT_NE(owner(e.p_t), owner(e.p_b));
}

TEST(ExtremaProperty, PermutationInvariant) {
  Gen gen(5);
  const Frame f = compute_frame(fovregion::testing::tilted_normal(0.3, 0.2));
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Vec3> pts;
    const int n = gen.integer(2, 12);
    for (int i = 0; i < n; ++i)
      pts.push_back(gen.uniform(-1, 1) * f.e1 + gen.uniform(-1, 1) * f.e2);
    const Extrema a = compute_extrema(pts, f);
    std::shuffle(pts.begin(), pts.end(), gen.engine());
    const Extrema b = compute_extrema(pts, f);
    EXPECT_DOUBLE_EQ(a.p_l.dot(f.e1), b.p_l.dot(f.e1));
    EXPECT_DOUBLE_EQ(a.p_r.dot(f.e1), b.p_r.dot(f.e1));
    EXPECT_DOUBLE_EQ(a.p_t.dot(f.e2), b.p_t.dot(f.e2));
    EXPECT_DOUBLE_EQ(a.p_b.dot(f.e2), b.p_b.dot(f.e2));
  }
}

TEST(ExtremaProperty, RotationEquivariant) {
  Gen gen(6);
  for (int trial = 0; trial < 200; ++trial) {
    const Vec3 n = fovregion::testing::tilted_normal(gen.uniform(0, 1), gen.uniform(-1, 1));
    const Frame f = compute_frame(n);
    std::vector<Vec3> pts;
    for (int i = 0; i < 8; ++i)
      pts.push_back(Vec3(0, 2, 1.5) + gen.uniform(-1, 1) * f.e1 + gen.uniform(-1, 1) * f.e2);
    const double ang = gen.uniform(-3, 3);
    const Eigen::Matrix3d rot = Eigen::AngleAxisd(ang, Vec3::UnitZ()).toRotationMatrix();
    std::vector<Vec3> turned;
    for (const auto& p : pts) turned.push_back(rot * p);
    const Extrema a = compute_extrema(pts, f);
    const Extrema b = compute_extrema(turned, compute_frame(rot * n));
    EXPECT_LT((rot * a.p_l - b.p_l).norm(), 1e-9);
    EXPECT_LT((rot * a.p_r - b.p_r).norm(), 1e-9);
    EXPECT_LT((rot * a.p_t - b.p_t).norm(), 1e-9);
    EXPECT_LT((rot * a.p_b - b.p_b).norm(), 1e-9);
  }
}

TEST(Validate, Camera) {
  CameraModel c;
  EXPECT_NO_THROW(validate(c));
  c.theta = 0.0;
  EXPECT_THROW(validate(c), ValidationError);
  c = {};
  c.phi = std::numbers::pi;
  EXPECT_THROW(validate(c), ValidationError);
  c = {};
  c.width = 0;
  EXPECT_THROW(validate(c), ValidationError);
}

TEST(Validate, NonCoplanarMarker) {
  Scene s = fovregion::testing::vertical_square();
  s.markers[0].points.push_back({0, 2.01, 1.5});
  EXPECT_THROW(validate(s), ValidationError);
}

TEST(Validate, TooFewPoints) {
  Scene s = fovregion::testing::vertical_square();
  s.markers[0].points.resize(1);
  EXPECT_THROW(validate(s), ValidationError);
}

// --- scene files ---

namespace {

const char* kGood = R"({
  "camera": {"theta": 1.13, "phi": 1.13, "width": 1024, "height": 1024, "h_c": 1.5},
  "markers": [{"id": "a", "points": [[-0.5,2,1],[0.5,2,1],[0.5,2,2]], "normal": [0,-2,0]}]
})";

std::string replace(std::string s, const std::string& from, const std::string& to) {
  s.replace(s.find(from), from.size(), to);
  return s;
}

}  // namespace

TEST(SceneFile, ParsesAndNormalizes) {
  const Scene s = parse_scene(kGood);
  ASSERT_EQ(s.markers.size(), 1u);
  expect_vec(s.markers[0].unit_normal, {0, -1, 0});
  EXPECT_EQ(s.camera.width, 1024);
  EXPECT_FALSE(s.reference_center.has_value());
}

TEST(SceneFile, RoundTrip) {
  const Scene a = fovregion::testing::scene_file("two_marker.json");
  const Scene b = parse_scene(scene_to_json(a));
  EXPECT_EQ(scene_to_json(a), scene_to_json(b));
}

TEST(SceneFile, Rejections) {
  const std::vector<std::string> bad{
      "not json",
      "[]",
      replace(kGood, "\"h_c\": 1.5", "\"h_c\": 1.5, \"roll\": 0"),
      replace(kGood, "\"markers\"", "\"extra\": 1, \"markers\""),
      replace(kGood, "\"id\": \"a\",", "\"id\": \"a\", \"size\": 1,"),
      replace(kGood, ", \"phi\": 1.13", ""),
      replace(kGood, "\"width\": 1024", "\"width\": 10.5"),
      replace(kGood, "\"theta\": 1.13", "\"theta\": 3.2"),
      replace(kGood, "[0,-2,0]", "[0,0,0]"),
      replace(kGood, "[0,-2,0]", "[0,-1]"),
      replace(kGood, "[0.5,2,2]", "[0.5,2.5,2]"),
      replace(kGood, "\"id\": \"a\"", "\"id\": 7"),
      replace(kGood, "[[-0.5,2,1],[0.5,2,1],[0.5,2,2]]", "[[-0.5,2,1]]"),
  };
  for (const auto& text : bad) EXPECT_THROW(parse_scene(text), ValidationError) << text;
}

TEST(SceneFile, MissingFile) {
  EXPECT_THROW(load_scene("/nonexistent/scene.json"), ValidationError);
}

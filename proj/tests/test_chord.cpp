#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "fovregion/chord.hpp"
#include "fovregion/errors.hpp"
#include "support.hpp"

using namespace fovregion;
using fovregion::testing::Gen;

namespace {

constexpr double kPi = std::numbers::pi;

// Angle at g between g->e and g->f.
double angle_at(const Vec2& g, const Vec2& e, const Vec2& f) {
  const Vec2 a = e - g, b = f - g;
  return std::atan2(std::abs(a.x() * b.y() - a.y() * b.x()), a.dot(b));
}

}  // namespace

TEST(Chord, RightAngle) {
  const ChordParams c = chord_params(2.0, kPi / 2);
  EXPECT_NEAR(c.r, 1.0, 1e-12);
  EXPECT_EQ(c.d, 0.0);
}

TEST(Chord, ThirtyDegrees) {
  const ChordParams c = chord_params(2.0, kPi / 6);
  EXPECT_NEAR(c.r, 2.0, 1e-12);
  EXPECT_NEAR(c.d, std::sqrt(3.0), 1e-12);
}

TEST(Chord, HighPrecisionReference) {
  // 40-digit evaluation of l / (2 sin 1.13) and l / (2 tan 1.13), l = 1.
  const ChordParams c = chord_params(1.0, 1.13);
  EXPECT_NEAR(c.r, 0.5528452688628767304199325645933, 1e-12);
  EXPECT_NEAR(c.d, 0.2358768562281311636027045538594, 1e-12);
}

TEST(Chord, ObtuseApertureHasNegativeOffset) {
  const ChordParams c = chord_params(1.0, 2.0);
  EXPECT_LT(c.d, 0.0);
  EXPECT_GT(c.r, 0.5);
}

TEST(Chord, Rejects) {
  for (const auto& [l, a] : {std::pair{0.0, 1.0}, {-1.0, 1.0}, {1.0, 0.0}, {1.0, kPi}, {1.0, -0.1}}) {
    try {
      chord_params(l, a);
      FAIL() << l << " " << a;
    } catch (const GeometryError& e) {
      EXPECT_EQ(e.code(), ErrorCode::BadAperture);
    }
  }
}

TEST(ChordProperty, Formulas) {
  Gen gen(1);
  for (int i = 0; i < 1000; ++i) {
    const double l = gen.uniform(1e-3, 10), a = gen.uniform(1e-3, kPi - 1e-3);
    const ChordParams c = chord_params(l, a);
    EXPECT_NEAR(c.r, l / (2 * std::sin(a)), 1e-12 * std::max(1.0, c.r));
    EXPECT_GT(c.r, 0.0);
    if (a <= kPi / 2) {
      EXPECT_GE(c.d, 0.0);
    }
  }
}

TEST(ChordProperty, InscribedAngle) {
  Gen gen(2);
  for (int i = 0; i < 1000; ++i) {
    const double l = gen.uniform(0.01, 5), aperture = gen.uniform(0.05, kPi - 0.05);
    const ChordParams c = chord_params(l, aperture);
    const Vec2 e(-l / 2, 0), f(l / 2, 0), centre(0, c.d);
    // Arc on the observer side (y > 0) runs between the chord ends.
    const double start = std::atan2(-c.d, l / 2);
    const double sweep = kPi - 2 * start;
    for (int k = 1; k < 20; ++k) {
      const double psi = start + sweep * k / 20.0;
      const Vec2 g = centre + c.r * Vec2(std::cos(psi), std::sin(psi));
      ASSERT_GT(g.y(), 0.0);
      EXPECT_NEAR(angle_at(g, e, f), aperture, 1e-9);
    }
  }
}

TEST(ChordProperty, ShrinksWithAperture) {
  Gen gen(3);
  for (int i = 0; i < 500; ++i) {
    const double l = gen.uniform(0.01, 5);
    const double a = gen.uniform(0.05, kPi / 2 - 0.01);
    const double b = gen.uniform(a + 1e-3, kPi / 2);
    EXPECT_GT(chord_params(l, a).r, chord_params(l, b).r);
    EXPECT_GT(chord_params(l, a).d, chord_params(l, b).d);
  }
}

TEST(Inclination, TwoMarkerScene) {
  const Scene s = fovregion::testing::scene_file("two_marker.json");
  RectBox box;
  box.frame = scene_frame(s);
  const Vec3 n = s.markers[0].unit_normal;
  EXPECT_NEAR(inclination(box), std::acos(std::abs(n.z())), 1e-12);
  EXPECT_FALSE(leans_back(box));
  box.frame = compute_frame({0, -1, 0});
  EXPECT_EQ(inclination(box), kPi / 2);
}

#pragma once

#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "fovregion/box.hpp"
#include "fovregion/scene.hpp"
#include "fovregion/scene_io.hpp"

namespace fovregion::testing {

inline std::string scene_path(const std::string& name) {
  return std::string(FOVREGION_SCENES_DIR) + "/" + name;
}

inline Scene scene_file(const std::string& name) { return load_scene(scene_path(name)); }

// Fixed-seed generator so every property test sees the same cases.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<>(lo, hi)(rng_); }
  Vec3 unit() {
    std::normal_distribution<> n;
    Vec3 v(n(rng_), n(rng_), n(rng_));
    return v.normalized();
  }
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline Scene vertical_square(double h_c = 1.5, double theta = 1.13, double phi = 1.13) {
  Scene s;
  s.camera = {theta, phi, 1024, 1024, h_c};
  Marker m;
  m.id = "wall";
  m.points = {{-0.5, 2, 1}, {0.5, 2, 1}, {0.5, 2, 2}, {-0.5, 2, 2}};
  m.unit_normal = {0, -1, 0};
  s.markers.push_back(m);
  return s;
}

// Box in the plane with normal e0 (e0.z <= 0, so not leaning back), centred at
// `centre`, corners labelled as build_bv does.
inline RectBox make_box(const Vec3& e0, const Vec3& centre, double w, double h) {
  RectBox box;
  box.kind = BoxKind::BV;
  box.frame = compute_frame(e0);
  box.a = centre - 0.5 * w * box.frame.e1 + 0.5 * h * box.frame.e2;
  box.b = box.a + w * box.frame.e1;
  box.d = box.a - h * box.frame.e2;
  box.c = box.b - h * box.frame.e2;
  return box;
}

// Unit normal facing -y, tilted down towards the camera by `down` radians and
// yawed by `yaw`.
inline Vec3 tilted_normal(double down, double yaw) {
  return Vec3(std::sin(yaw) * std::cos(down), -std::cos(yaw) * std::cos(down), -std::sin(down));
}

}  // namespace fovregion::testing

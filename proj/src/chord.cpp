#include "fovregion/chord.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fovregion/errors.hpp"

namespace fovregion {

ChordParams chord_params(double l, double aperture) {
  if (!(l > 0.0)) throw GeometryError(ErrorCode::BadAperture, "chord length must be positive");
  if (!(aperture > 0.0 && aperture < std::numbers::pi))
    throw GeometryError(ErrorCode::BadAperture, "aperture must lie in (0, pi)");
  ChordParams c;
  c.l = l;
  c.aperture = aperture;
  c.r = l / (2.0 * std::sin(aperture));
  // tan(pi/2) is finite in floating point; pin the right-angle case to d = 0.
  c.d = aperture == std::numbers::pi / 2 ? 0.0 : l / (2.0 * std::tan(aperture));
  return c;
}

double inclination(const RectBox& box) {
  const double cz = std::clamp(std::abs(box.frame.e0.z()), 0.0, 1.0);
  if (cz == 0.0) return std::numbers::pi / 2;
  return std::acos(cz);
}

bool leans_back(const RectBox& box) { return box.frame.e0.z() > 1e-12; }

}  // namespace fovregion

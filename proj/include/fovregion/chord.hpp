#pragma once

#include "fovregion/box.hpp"

namespace fovregion {

// Circle through the ends of a chord of length l on which the chord subtends
// `aperture`: radius r = l / (2 sin aperture), centre offset d = l / (2 tan aperture)
// from the chord towards the observer.
struct ChordParams {
  double l = 0.0;
  double r = 0.0;
  double d = 0.0;
  double aperture = 0.0;
};

// Throws GeometryError(BadAperture) unless l > 0 and 0 < aperture < pi.
ChordParams chord_params(double l, double aperture);

// Inclination of the box plane against the horizontal, arccos(|e0 . z|), in (0, pi/2].
double inclination(const RectBox& box);

// True when the box normal (pointing at the robot) has a positive z component,
// i.e. the marker plane leans back away from the camera.
bool leans_back(const RectBox& box);

}  // namespace fovregion

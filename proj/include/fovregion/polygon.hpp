#pragma once

#include <span>
#include <vector>

#include "fovregion/scene.hpp"

namespace fovregion {

// Simple polygon in the xy plane, counter-clockwise, without the closing vertex.
using Ring = std::vector<Vec2>;

double signed_area(const Ring& ring);
void make_ccw(Ring& ring);

// Andrew's monotone chain; collinear points are dropped.
Ring convex_hull(std::vector<Vec2> points);

// Winding-number test. Points within `tol` of an edge count as inside.
bool point_in_ring(const Ring& ring, const Vec2& p, double tol = 1e-9);

double distance_to_boundary(const Ring& ring, const Vec2& p);

// Union of the given rings; holes of the result are dropped.
std::vector<Ring> ring_union(std::span<const Ring> rings);

// Outward offset by `distance` using mitred joins, so the result contains the
// exact Minkowski sum with a disc of that radius.
std::vector<Ring> inflate(std::span<const Ring> rings, double distance);

// Douglas-Peucker; every input vertex stays within `tolerance` of the result.
Ring simplify(const Ring& ring, double tolerance);

}  // namespace fovregion

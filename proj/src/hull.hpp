#pragma once

#include <vector>

#include "linalg.hpp"

namespace rootcones {

// Exact volume of the convex hull of rational points given in coordinates
// w.r.t. a (not necessarily orthonormal) basis; the result is in units of
// that basis' parallelepiped. Supports ambient coordinate dimension <= 3
// (after the points are expressed in subspace coordinates).
//
// Degenerate (lower-dimensional) hulls have volume 0.
Rat hull_volume(const std::vector<Vec>& coords);

// 2D convex hull (monotone chain), returned counterclockwise without
// repetition; exposed for the volume oracle's tests.
std::vector<Vec> hull_2d(std::vector<Vec> pts);

}  // namespace rootcones

#pragma once

#include "semshell/coons.hpp"
#include "semshell/nurbs.hpp"

namespace semshell {

/// Quarter of the cylindrical roof: a 40 degree rational-quadratic arc of
/// radius 25 (u direction, starting at the crown) ruled linearly along the
/// axis over half the length (v in [0, 25]). Exact circular section.
SurfacePatch scordelis_roof_patch();

/// Quarter of a hemisphere of radius 10 with an 18 degree polar hole:
/// bi-quadratic rational patch, u sweeping a 90 degree revolution and v the
/// meridian from the hole rim to the equator. Exact spherical surface.
SurfacePatch hemisphere_patch();

/// Boundary curves of the doubly curved free-form surface (cubic B-splines,
/// two interior knots, unit weights).
CoonsBoundary freeform_boundary();

/// Boundary curves of the free-form surface with a rational top curve whose
/// interior weights (1.5, 0.5) produce a sharp curvature change.
CoonsBoundary freeform_nurbs_boundary();

}  // namespace semshell

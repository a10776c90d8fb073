#pragma once

#include "semshell/nurbs.hpp"

namespace semshell {

/// Four boundary curves of a Coons patch. `bottom`/`top` run along u at
/// v = 0 and v = 1; `left`/`right` run along v at u = 0 and u = 1. The
/// curve endpoints must meet at the four corners.
struct CoonsBoundary {
  BoundaryCurve top;
  BoundaryCurve bottom;
  BoundaryCurve left;
  BoundaryCurve right;
};

/// Bilinearly blended Coons patch: the sum of the two ruled surfaces minus
/// the bilinear corner patch, assembled in homogeneous coordinates so NURBS
/// boundaries are reproduced exactly. The blend directions use the linear
/// precision of the opposite curve's basis (Greville abscissae), so no
/// degree elevation is needed; bottom/top must share one basis and
/// left/right the other.
///
/// Throws std::invalid_argument on incompatible bases or corner mismatch
/// beyond 1e-10.
SurfacePatch coons_patch(const CoonsBoundary& boundary);

}  // namespace semshell

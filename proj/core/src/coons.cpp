#include "semshell/coons.hpp"

#include <Eigen/Dense>
#include <stdexcept>

namespace semshell {

namespace {

using Vector4 = Eigen::Vector4d;

Vector4 homog(const BoundaryCurve& c, int i) {
  const double w = c.weight(i);
  Vector4 h;
  h << w * c.points[i], w;
  return h;
}

bool same_basis(const KnotVector& a, const KnotVector& b) {
  return a.degree == b.degree && a.knots == b.knots;
}

void check_corner(const Vector4& a, const Vector4& b, const char* name) {
  const Vector3 pa = a.head<3>() / a[3];
  const Vector3 pb = b.head<3>() / b[3];
  if ((pa - pb).norm() > 1e-10 || std::abs(a[3] - b[3]) > 1e-10) {
    throw std::invalid_argument(std::string("coons_patch: boundary curves do not meet at the ") +
                                name + " corner");
  }
}

}  // namespace

SurfacePatch coons_patch(const CoonsBoundary& bd) {
  bd.top.validate();
  bd.bottom.validate();
  bd.left.validate();
  bd.right.validate();
  if (!same_basis(bd.top.basis, bd.bottom.basis)) {
    throw std::invalid_argument("coons_patch: top/bottom bases differ");
  }
  if (!same_basis(bd.left.basis, bd.right.basis)) {
    throw std::invalid_argument("coons_patch: left/right bases differ");
  }

  const int nu = bd.bottom.basis.count();
  const int nv = bd.left.basis.count();

  // Homogeneous corner points: c00 = bottom(0), c10 = bottom(1),
  // c01 = top(0), c11 = top(1).
  const Vector4 c00 = homog(bd.bottom, 0);
  const Vector4 c10 = homog(bd.bottom, nu - 1);
  const Vector4 c01 = homog(bd.top, 0);
  const Vector4 c11 = homog(bd.top, nu - 1);
  check_corner(c00, homog(bd.left, 0), "u=0,v=0");
  check_corner(c01, homog(bd.left, nv - 1), "u=0,v=1");
  check_corner(c10, homog(bd.right, 0), "u=1,v=0");
  check_corner(c11, homog(bd.right, nv - 1), "u=1,v=1");

  const std::vector<double> gu = bd.bottom.basis.greville();
  const std::vector<double> gv = bd.left.basis.greville();

  SurfacePatch patch;
  patch.basis_u = bd.bottom.basis;
  patch.basis_v = bd.left.basis;
  patch.points.resize(size_t(nu) * nv);
  patch.weights.resize(size_t(nu) * nv);

  for (int j = 0; j < nv; ++j) {
    const double b = gv[j];
    for (int i = 0; i < nu; ++i) {
      const double a = gu[i];
      // Ruled surface between bottom and top, linear in v through the
      // Greville abscissae (linear precision of the v-basis).
      const Vector4 r1 = (1.0 - b) * homog(bd.bottom, i) + b * homog(bd.top, i);
      // Ruled surface between left and right.
      const Vector4 r2 = (1.0 - a) * homog(bd.left, j) + a * homog(bd.right, j);
      // Bilinear corner patch.
      const Vector4 t = (1.0 - a) * ((1.0 - b) * c00 + b * c01) +
                        a * ((1.0 - b) * c10 + b * c11);
      const Vector4 h = r1 + (r2 - t);
      if (!(h[3] > 0.0)) {
        throw std::invalid_argument("coons_patch: blended weight is not positive");
      }
      patch.points[size_t(j) * nu + i] = h.head<3>() / h[3];
      patch.weights[size_t(j) * nu + i] = h[3];
    }
  }
  patch.validate();
  return patch;
}

}  // namespace semshell

#pragma once

#include <Eigen/Dense>
#include <vector>

#include "semshell/rotation.hpp"

namespace semshell {

/// Open, non-decreasing knot vector. `count` basis functions of the given
/// degree require knots.size() == count + degree + 1.
struct KnotVector {
  int degree = 0;
  std::vector<double> knots;

  int count() const { return int(knots.size()) - degree - 1; }
  double front() const { return knots.front(); }
  double back() const { return knots.back(); }
  void validate() const;

  /// Index s with knots[s] <= u < knots[s+1], clamped to the last nonempty
  /// span at the right end of the domain.
  int find_span(double u) const;

  /// Distinct knot values strictly inside the domain.
  std::vector<double> interior_knots() const;

  /// Greville abscissae (knot averages), one per basis function.
  std::vector<double> greville() const;
};

/// Values and derivatives of the degree+1 B-spline basis functions that are
/// nonzero on the span containing u. Row r of `ders` holds the r-th
/// derivatives; `first` is the index of the first nonzero function.
struct BasisDerivatives {
  int first = 0;
  Eigen::MatrixXd ders;  // (nders+1) x (degree+1)
};
BasisDerivatives bspline_basis(const KnotVector& kv, double u, int nders = 2);

/// Rational B-spline curve in 3D.
struct BoundaryCurve {
  KnotVector basis;
  std::vector<Vector3> points;
  std::vector<double> weights;  // all positive; empty means all 1

  void validate() const;
  double weight(int i) const { return weights.empty() ? 1.0 : weights[i]; }
};

struct CurveJet {
  Vector3 x;
  Vector3 d1;
  Vector3 d2;
};
CurveJet curve_eval(const BoundaryCurve& curve, double u);

/// Tensor-product NURBS surface. Control points are stored row-major with
/// the u index varying fastest: index = j * count_u + i for (i, j).
struct SurfacePatch {
  KnotVector basis_u;
  KnotVector basis_v;
  std::vector<Vector3> points;
  std::vector<double> weights;

  int count_u() const { return basis_u.count(); }
  int count_v() const { return basis_v.count(); }
  void validate() const;
  double weight(int i, int j) const {
    return weights.empty() ? 1.0 : weights[j * count_u() + i];
  }
  const Vector3& point(int i, int j) const { return points[j * count_u() + i]; }
};

/// Surface position with first and second parametric derivatives.
struct SurfaceJet {
  Vector3 x;
  Vector3 xu, xv;
  Vector3 xuu, xuv, xvv;
};
SurfaceJet surface_eval(const SurfacePatch& patch, double u, double v);

/// Unit normal of the undeformed midsurface, D = (xu x xv)/|xu x xv|.
Vector3 director(const SurfaceJet& jet);

/// Director plus its parametric derivatives.
struct DirectorJet {
  Vector3 d;
  Vector3 du, dv;
};
DirectorJet director_jet(const SurfaceJet& jet);

}  // namespace semshell

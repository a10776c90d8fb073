#include "semshell/nurbs.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace semshell {

void KnotVector::validate() const {
  if (degree < 1) throw std::invalid_argument("knot vector: degree must be >= 1");
  if (count() < degree + 1) {
    throw std::invalid_argument("knot vector: too few knots for degree");
  }
  for (size_t i = 1; i < knots.size(); ++i) {
    if (knots[i] < knots[i - 1]) {
      throw std::invalid_argument("knot vector: knots must be non-decreasing");
    }
  }
  for (int i = 0; i <= degree; ++i) {
    if (knots[i] != knots.front() ||
        knots[knots.size() - 1 - i] != knots.back()) {
      throw std::invalid_argument("knot vector: must be open (clamped)");
    }
  }
  if (knots.front() == knots.back()) {
    throw std::invalid_argument("knot vector: empty parametric domain");
  }
}

int KnotVector::find_span(double u) const {
  const int n = count();
  if (u < front() || u > back()) {
    throw std::out_of_range("knot vector: parameter outside knot range");
  }
  if (u >= knots[n]) {
    // Right end: last span with positive length.
    int s = n - 1;
    while (s > degree && knots[s] == knots[s + 1]) --s;
    return s;
  }
  int lo = degree, hi = n;
  while (hi - lo > 1) {
    const int mid = (lo + hi) / 2;
    if (u < knots[mid]) hi = mid; else lo = mid;
  }
  return lo;
}

std::vector<double> KnotVector::interior_knots() const {
  std::vector<double> out;
  for (size_t i = degree + 1; i + degree + 1 < knots.size(); ++i) {
    if (knots[i] > front() && knots[i] < back() &&
        (out.empty() || knots[i] != out.back())) {
      out.push_back(knots[i]);
    }
  }
  return out;
}

std::vector<double> KnotVector::greville() const {
  std::vector<double> g(count());
  for (int i = 0; i < count(); ++i) {
    double s = 0.0;
    for (int k = 1; k <= degree; ++k) s += knots[i + k];
    g[i] = s / degree;
  }
  return g;
}

BasisDerivatives bspline_basis(const KnotVector& kv, double u, int nders) {
  const int p = kv.degree;
  const int span = kv.find_span(u);
  const std::vector<double>& knot = kv.knots;

  // Cox-de Boor triangle with stored inverted differences, then the
  // derivative recursion over the triangle (Piegl & Tiller A2.3).
  Eigen::MatrixXd ndu(p + 1, p + 1);
  std::vector<double> left(p + 1), right(p + 1);
  ndu(0, 0) = 1.0;
  for (int j = 1; j <= p; ++j) {
    left[j] = u - knot[span + 1 - j];
    right[j] = knot[span + j] - u;
    double saved = 0.0;
    for (int r = 0; r < j; ++r) {
      ndu(j, r) = right[r + 1] + left[j - r];
      const double temp = ndu(r, j - 1) / ndu(j, r);
      ndu(r, j) = saved + right[r + 1] * temp;
      saved = left[j - r] * temp;
    }
    ndu(j, j) = saved;
  }

  BasisDerivatives out;
  out.first = span - p;
  out.ders = Eigen::MatrixXd::Zero(nders + 1, p + 1);
  for (int j = 0; j <= p; ++j) out.ders(0, j) = ndu(j, p);

  const int nd = std::min(nders, p);
  Eigen::MatrixXd a(2, p + 1);
  for (int r = 0; r <= p; ++r) {
    int s1 = 0, s2 = 1;
    a(0, 0) = 1.0;
    for (int k = 1; k <= nd; ++k) {
      double d = 0.0;
      const int rk = r - k, pk = p - k;
      if (r >= k) {
        a(s2, 0) = a(s1, 0) / ndu(pk + 1, rk);
        d = a(s2, 0) * ndu(rk, pk);
      }
      const int j1 = (rk >= -1) ? 1 : -rk;
      const int j2 = (r - 1 <= pk) ? k - 1 : p - r;
      for (int j = j1; j <= j2; ++j) {
        a(s2, j) = (a(s1, j) - a(s1, j - 1)) / ndu(pk + 1, rk + j);
        d += a(s2, j) * ndu(rk + j, pk);
      }
      if (r <= pk) {
        a(s2, k) = -a(s1, k - 1) / ndu(pk + 1, r);
        d += a(s2, k) * ndu(r, pk);
      }
      out.ders(k, r) = d;
      std::swap(s1, s2);
    }
  }
  double factor = p;
  for (int k = 1; k <= nd; ++k) {
    out.ders.row(k) *= factor;
    factor *= (p - k);
  }
  return out;
}

void BoundaryCurve::validate() const {
  basis.validate();
  if (int(points.size()) != basis.count()) {
    throw std::invalid_argument("curve: control point count does not match basis");
  }
  if (!weights.empty()) {
    if (weights.size() != points.size()) {
      throw std::invalid_argument("curve: weight count does not match control points");
    }
    for (double w : weights) {
      if (!(w > 0.0)) throw std::invalid_argument("curve: weights must be positive");
    }
  }
}

CurveJet curve_eval(const BoundaryCurve& curve, double u) {
  const BasisDerivatives b = bspline_basis(curve.basis, u, 2);
  const int p = curve.basis.degree;

  Eigen::Matrix<double, 3, 3> aders = Eigen::Matrix<double, 3, 3>::Zero();
  Eigen::Vector3d wders = Eigen::Vector3d::Zero();
  for (int j = 0; j <= p; ++j) {
    const int idx = b.first + j;
    const double w = curve.weight(idx);
    for (int k = 0; k <= 2; ++k) {
      aders.col(k) += b.ders(k, j) * w * curve.points[idx];
      wders[k] += b.ders(k, j) * w;
    }
  }
  if (std::abs(wders[0]) < 1e-14) {
    throw std::runtime_error("curve_eval: vanishing rational denominator");
  }
  CurveJet jet;
  jet.x = aders.col(0) / wders[0];
  jet.d1 = (aders.col(1) - wders[1] * jet.x) / wders[0];
  jet.d2 = (aders.col(2) - 2.0 * wders[1] * jet.d1 - wders[2] * jet.x) / wders[0];
  return jet;
}

void SurfacePatch::validate() const {
  basis_u.validate();
  basis_v.validate();
  const size_t n = size_t(count_u()) * count_v();
  if (points.size() != n) {
    throw std::invalid_argument("patch: control net size does not match bases");
  }
  if (!weights.empty()) {
    if (weights.size() != n) {
      throw std::invalid_argument("patch: weight count does not match control net");
    }
    for (double w : weights) {
      if (!(w > 0.0)) throw std::invalid_argument("patch: weights must be positive");
    }
  }
}

SurfaceJet surface_eval(const SurfacePatch& patch, double u, double v) {
  const BasisDerivatives bu = bspline_basis(patch.basis_u, u, 2);
  const BasisDerivatives bv = bspline_basis(patch.basis_v, v, 2);
  const int pu = patch.basis_u.degree;
  const int pv = patch.basis_v.degree;
  const int nu = patch.count_u();

  // Homogeneous derivatives A^(k,l) and W^(k,l) for k+l <= 2.
  Vector3 a[3][3];
  double w[3][3] = {};
  for (auto& row : a) for (auto& e : row) e.setZero();
  for (int j = 0; j <= pv; ++j) {
    const int jj = bv.first + j;
    for (int i = 0; i <= pu; ++i) {
      const int ii = bu.first + i;
      const double wt = patch.weights.empty() ? 1.0 : patch.weights[jj * nu + ii];
      const Vector3 pw = wt * patch.points[jj * nu + ii];
      for (int k = 0; k <= 2; ++k) {
        for (int l = 0; l + k <= 2; ++l) {
          const double s = bu.ders(k, i) * bv.ders(l, j);
          a[k][l] += s * pw;
          w[k][l] += s * wt;
        }
      }
    }
  }
  if (std::abs(w[0][0]) < 1e-14) {
    throw std::runtime_error("surface_eval: vanishing rational denominator");
  }

  SurfaceJet jet;
  const double iw = 1.0 / w[0][0];
  jet.x = a[0][0] * iw;
  jet.xu = (a[1][0] - w[1][0] * jet.x) * iw;
  jet.xv = (a[0][1] - w[0][1] * jet.x) * iw;
  jet.xuu = (a[2][0] - 2.0 * w[1][0] * jet.xu - w[2][0] * jet.x) * iw;
  jet.xvv = (a[0][2] - 2.0 * w[0][1] * jet.xv - w[0][2] * jet.x) * iw;
  jet.xuv = (a[1][1] - w[1][0] * jet.xv - w[0][1] * jet.xu - w[1][1] * jet.x) * iw;
  return jet;
}

Vector3 director(const SurfaceJet& jet) {
  const Vector3 n = jet.xu.cross(jet.xv);
  const double len = n.norm();
  if (len < 1e-12) {
    throw std::runtime_error("director: degenerate tangent plane");
  }
  return n / len;
}

DirectorJet director_jet(const SurfaceJet& jet) {
  const Vector3 n = jet.xu.cross(jet.xv);
  const double len = n.norm();
  if (len < 1e-12) {
    throw std::runtime_error("director_jet: degenerate tangent plane");
  }
  DirectorJet dj;
  dj.d = n / len;
  const Vector3 nu = jet.xuu.cross(jet.xv) + jet.xu.cross(jet.xuv);
  const Vector3 nv = jet.xuv.cross(jet.xv) + jet.xu.cross(jet.xvv);
  dj.du = (nu - dj.d * dj.d.dot(nu)) / len;
  dj.dv = (nv - dj.d * dj.d.dot(nv)) / len;
  return dj;
}

}  // namespace semshell

#include "semshell/builtin_geometries.hpp"

#include <cmath>

namespace semshell {

namespace {

KnotVector quadratic_bezier_basis() { return {2, {0, 0, 0, 1, 1, 1}}; }
KnotVector linear_basis() { return {1, {0, 0, 1, 1}}; }

BoundaryCurve cubic_curve(std::vector<double> knots,
                          std::vector<Vector3> pts,
                          std::vector<double> weights = {}) {
  BoundaryCurve c;
  c.basis = {3, std::move(knots)};
  c.points = std::move(pts);
  c.weights = std::move(weights);
  return c;
}

}  // namespace

SurfacePatch scordelis_roof_patch() {
  const double radius = 25.0;
  const double half_length = 25.0;
  const double arc = 40.0 * M_PI / 180.0;

  // Circular arc from the crown: tangent intersection control point with
  // the half-angle weight gives the exact circle.
  const Vector3 a0(0.0, 0.0, radius);
  const Vector3 a1(radius * std::tan(0.5 * arc), 0.0, radius);
  const Vector3 a2(radius * std::sin(arc), 0.0, radius * std::cos(arc));
  const double wmid = std::cos(0.5 * arc);

  SurfacePatch patch;
  patch.basis_u = quadratic_bezier_basis();
  patch.basis_v = linear_basis();
  patch.points = {a0, a1, a2,
                  a0 + Vector3(0, half_length, 0), a1 + Vector3(0, half_length, 0),
                  a2 + Vector3(0, half_length, 0)};
  patch.weights = {1.0, wmid, 1.0, 1.0, wmid, 1.0};
  patch.validate();
  return patch;
}

SurfacePatch hemisphere_patch() {
  const double radius = 10.0;
  const double hole = 18.0 * M_PI / 180.0;

  // Meridian arc in the x-z plane from the hole rim (colatitude 18 deg) to
  // the equator; the middle control point sits on the tangent intersection.
  const double s0 = std::sin(hole), c0 = std::cos(hole);
  const double r[3] = {radius * s0, radius, radius};
  const double z[3] = {radius * c0, radius * (1.0 - s0) / c0, 0.0};
  const double wm = std::cos(0.5 * (0.5 * M_PI - hole));

  // Revolve by 90 degrees about z: (r,0,z) -> (r,r,z)/w -> (0,r,z).
  const double wa = std::sqrt(0.5);

  SurfacePatch patch;
  patch.basis_u = quadratic_bezier_basis();
  patch.basis_v = quadratic_bezier_basis();
  patch.points.resize(9);
  patch.weights.resize(9);
  const double wrow[3] = {1.0, wa, 1.0};
  const double wcol[3] = {1.0, wm, 1.0};
  for (int j = 0; j < 3; ++j) {  // meridian index (v)
    const Vector3 p0(r[j], 0.0, z[j]);
    const Vector3 p1(r[j], r[j], z[j]);
    const Vector3 p2(0.0, r[j], z[j]);
    const Vector3 pts[3] = {p0, p1, p2};
    for (int i = 0; i < 3; ++i) {  // revolution index (u)
      patch.points[size_t(j) * 3 + i] = pts[i];
      patch.weights[size_t(j) * 3 + i] = wrow[i] * wcol[j];
    }
  }
  patch.validate();
  return patch;
}

CoonsBoundary freeform_boundary() {
  const std::vector<double> knots = {0, 0, 0, 0, 1.0 / 3.0, 2.0 / 3.0, 1, 1, 1, 1};
  CoonsBoundary b;
  b.bottom = cubic_curve(knots, {{0, 0, 0}, {5, 0, 0}, {5, 5, 0},
                                 {10, 5, 0}, {10, 0, 0}, {11, 0, 0}});
  b.top = cubic_curve(knots, {{0, 0, 15},
                              {11.0 / 9.0, 2.0 / 3.0, 15},
                              {11.0 / 3.0, 2.0, 15},
                              {22.0 / 3.0, 4.0, 15},
                              {88.0 / 9.0, 16.0 / 3.0, 15},
                              {11, 6, 15}});
  b.left = cubic_curve(knots, {{0, 0, 0}, {0, 0, 5}, {0, 2, 7},
                               {0, 2, 10}, {0, 0, 12}, {0, 0, 15}});
  b.right = cubic_curve(knots, {{11, 0, 0},
                                {11, 0, 8.0 / 3.0},
                                {11, 2.0 / 9.0, 62.0 / 9.0},
                                {11, 17.0 / 9.0, 101.0 / 9.0},
                                {11, 13.0 / 3.0, 41.0 / 3.0},
                                {11, 6, 15}});
  return b;
}

CoonsBoundary freeform_nurbs_boundary() {
  const std::vector<double> knots = {0, 0, 0, 0, 1, 1, 1, 1};
  CoonsBoundary b;
  b.top = cubic_curve(knots, {{0, 4, 5}, {4.972, 7.188, 5}, {-1.303, 5.255, 5}, {5, 8, 5}},
                      {1.0, 1.5, 0.5, 1.0});
  b.bottom = cubic_curve(knots, {{0, 0, 0}, {4.202, 4.150, 0}, {0.938, -1.546, 0}, {5, 4, 0}});
  b.left = cubic_curve(knots, {{0, 0, 0}, {0, 4.151, 4.202}, {0, -1.547, 0.938}, {0, 4, 5}});
  b.right = cubic_curve(knots, {{5, 4, 0}, {5, 8.151, 4.202}, {5, 2.453, 0.938}, {5, 8, 5}});
  return b;
}

}  // namespace semshell

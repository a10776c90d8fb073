#include "semshell/rotation.hpp"

#include <cmath>
#include <stdexcept>

namespace semshell {

Matrix3 skew(const Vector3& v) {
  Matrix3 m;
  m << 0.0, -v.z(), v.y(),
       v.z(), 0.0, -v.x(),
      -v.y(), v.x(), 0.0;
  return m;
}

namespace {

// Taylor coefficients in w^2, derived symbolically from the closed forms.
constexpr double kSeriesR1[] = {1.0, -1.66666666666666657e-01, 8.33333333333333322e-03,
                                -1.98412698412698413e-04, 2.75573192239858925e-06,
                                -2.50521083854417202e-08, 1.60590438368216133e-10};
constexpr double kSeriesR2[] = {0.5, -4.16666666666666644e-02, 1.38888888888888894e-03,
                                -2.48015873015873016e-05, 2.75573192239858883e-07,
                                -2.08767569878681002e-09, 1.14707455977297245e-11};
constexpr double kSeriesH2[] = {1.66666666666666657e-01, -8.33333333333333322e-03,
                                1.98412698412698413e-04, -2.75573192239858925e-06,
                                2.50521083854417202e-08, -1.60590438368216133e-10,
                                7.64716373181981641e-13};
constexpr double kSeriesC3[] = {1.66666666666666657e-01, 2.77777777777777788e-03,
                                6.61375661375661420e-05, 1.65343915343915351e-06,
                                4.17535139757362004e-08, 1.05683802773749864e-09,
                                2.67650730613693577e-11};
constexpr double kSeriesC10[] = {1.66666666666666657e-01, 5.55555555555555577e-03,
                                 1.98412698412698413e-04, 6.61375661375661403e-06,
                                 2.08767569878680989e-07, 6.34102816642499145e-09,
                                 1.87355511429585511e-10};
constexpr double kSeriesC11[] = {-2.77777777777777788e-03, -1.32275132275132284e-04,
                                 -4.96031746031746031e-06, -1.67014055902944801e-07,
                                 -5.28419013868749343e-09, -1.60590438368216133e-10,
                                 -4.74555241485161621e-12};

double eval_series(const double (&c)[7], double w) {
  const double w2 = w * w;
  double acc = c[6];
  for (int k = 5; k >= 0; --k) acc = acc * w2 + c[k];
  return acc;
}

}  // namespace

double rotation_fn_series(RotationFn fn, double w) {
  switch (fn) {
    case RotationFn::R1: return eval_series(kSeriesR1, w);
    case RotationFn::R2: return eval_series(kSeriesR2, w);
    case RotationFn::H2: return eval_series(kSeriesH2, w);
    case RotationFn::C3: return eval_series(kSeriesC3, w);
    case RotationFn::C10Bar: return eval_series(kSeriesC10, w);
    case RotationFn::C11: return eval_series(kSeriesC11, w);
  }
  throw std::logic_error("rotation_fn_series: bad enum");
}

double rotation_fn_closed(RotationFn fn, double w) {
  const double s = std::sin(w);
  const double hs = std::sin(0.5 * w);
  const double cm1 = -2.0 * hs * hs;  // cos(w) - 1, cancellation-free
  switch (fn) {
    case RotationFn::R1: return s / w;
    case RotationFn::R2: return -cm1 / (w * w);
    case RotationFn::H2: return (w - s) / (w * w * w);
    case RotationFn::C3: return (w * s + 2.0 * cm1) / (w * w * cm1);
    case RotationFn::C10Bar: return (s - w) / (2.0 * w * cm1);
    case RotationFn::C11:
      return (4.0 * cm1 + w * w + w * s) / (2.0 * w * w * w * w * cm1);
  }
  throw std::logic_error("rotation_fn_closed: bad enum");
}

RotationCoeffs rotation_coeffs(const Vector3& omega) {
  RotationCoeffs c;
  c.angle = omega.norm();
  c.sin_w = std::sin(c.angle);
  c.cos_w = std::cos(c.angle);
  const bool series = c.angle < kAngleSwitch;
  auto eval = [&](RotationFn fn) {
    return series ? rotation_fn_series(fn, c.angle)
                  : rotation_fn_closed(fn, c.angle);
  };
  c.r1 = eval(RotationFn::R1);
  c.r2 = eval(RotationFn::R2);
  c.h2 = eval(RotationFn::H2);
  c.c3 = eval(RotationFn::C3);
  c.c10_bar = eval(RotationFn::C10Bar);
  c.c11 = eval(RotationFn::C11);
  return c;
}

Matrix3 rodrigues(const Vector3& omega) {
  const RotationCoeffs c = rotation_coeffs(omega);
  const Matrix3 om = skew(omega);
  return Matrix3::Identity() + c.r1 * om + c.r2 * (om * om);
}

Matrix3 h_matrix(const Vector3& omega) {
  const RotationCoeffs c = rotation_coeffs(omega);
  const Matrix3 om = skew(omega);
  return Matrix3::Identity() + c.r2 * om + c.h2 * (om * om);
}

NodalFrame nodal_frame(const Vector3& g2, const Vector3& director,
                       const Vector3* g1_fallback, bool intersection) {
  NodalFrame f;
  f.intersection = intersection;
  const Vector3 d = director.normalized();
  Vector3 a1 = g2.cross(d);
  if (a1.norm() < 1e-10 && g1_fallback != nullptr) {
    a1 = g1_fallback->cross(d);
  }
  if (a1.norm() < 1e-10) {
    // Most orthogonal global axis.
    int axis = 0;
    for (int k = 1; k < 3; ++k) {
      if (std::abs(d[k]) < std::abs(d[axis])) axis = k;
    }
    a1 = Vector3::Unit(axis).cross(d);
  }
  a1.normalize();
  Vector3 a2 = d.cross(a1);
  a2.normalize();
  f.ref.col(0) = a1;
  f.ref.col(1) = a2;
  f.ref.col(2) = d;
  return f;
}

Matrix3 t3_matrix(const Matrix3& triad, bool intersection, int& rot_dofs) {
  Matrix3 t3 = Matrix3::Zero();
  if (intersection) {
    rot_dofs = 3;
    t3 = Matrix3::Identity();
  } else {
    rot_dofs = 2;
    t3.col(0) = triad.col(0);
    t3.col(1) = triad.col(1);
  }
  return t3;
}

Matrix3 t_matrix(const Vector3& director, const Vector3& omega,
                 const Matrix3& t3) {
  return skew(director).transpose() * (h_matrix(omega) * t3);
}

Matrix3 m_matrix(const Vector3& director, const Vector3& omega,
                 const RotationCoeffs& c, const Vector3& h) {
  const Vector3 b = director.cross(h);
  const double b_dot_w = b.dot(omega);
  const Vector3 t = -c.c3 * b + (c.c11 * b_dot_w) * omega;
  const double c10 = c.c10_bar * b_dot_w - director.dot(h);
  Matrix3 m = 0.5 * (director * h.transpose() + h * director.transpose());
  m += 0.5 * (t * omega.transpose() + omega * t.transpose());
  m += c10 * Matrix3::Identity();
  return m;
}

NodalRotation make_nodal_rotation(const NodalFrame& frame,
                                  const Vector3& omega) {
  NodalRotation s;
  s.omega = omega;
  s.coeffs = rotation_coeffs(omega);
  const Matrix3 om = skew(omega);
  s.rot = Matrix3::Identity() + s.coeffs.r1 * om + s.coeffs.r2 * (om * om);
  s.triad = s.rot * frame.ref;
  s.director = s.triad.col(2);
  s.h = Matrix3::Identity() + s.coeffs.r2 * om + s.coeffs.h2 * (om * om);
  s.t3 = t3_matrix(s.triad, frame.intersection, s.rot_dofs);
  s.h_t3 = s.h * s.t3;
  s.t = skew(s.director).transpose() * s.h_t3;
  return s;
}

bool update_rotation(NodalRotation& state, const NodalFrame& frame,
                     const Eigen::Ref<const Eigen::VectorXd>& dbeta) {
  if (dbeta.size() != state.rot_dofs) {
    throw std::invalid_argument("update_rotation: dbeta size mismatch");
  }
  Vector3 domega = Vector3::Zero();
  for (int k = 0; k < state.rot_dofs; ++k) {
    domega += state.t3.col(k) * dbeta[k];
  }
  state = make_nodal_rotation(frame, state.omega + domega);
  return state.coeffs.angle > 1.75 * M_PI;
}

}  // namespace semshell

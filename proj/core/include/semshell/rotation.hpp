#pragma once

#include <Eigen/Dense>

namespace semshell {

using Vector3 = Eigen::Vector3d;
using Matrix3 = Eigen::Matrix3d;

Matrix3 skew(const Vector3& v);

/// Scalar coefficient functions of the rotation angle w = |omega| shared by
/// the rotation tensor, its differential and the second-variation matrix.
/// All of them are even, smooth functions of w; below `angle_switch` they
/// are evaluated from truncated Taylor series, above from closed forms
/// written with half-angle factors to avoid cancellation. Both branches
/// agree to ~1e-12 relative at the switch.
struct RotationCoeffs {
  double angle = 0.0;    // |omega|
  double sin_w = 0.0;
  double cos_w = 1.0;
  double r1 = 1.0;       // sin(w)/w
  double r2 = 0.5;       // (1-cos w)/w^2
  double h2 = 1.0 / 6.0; // (w-sin w)/w^3
  double c3 = 1.0 / 6.0;
  double c10_bar = 1.0 / 6.0;
  double c11 = -1.0 / 360.0;
};
RotationCoeffs rotation_coeffs(const Vector3& omega);

/// Threshold between the series and closed-form branches of the rotation
/// coefficient functions.
inline constexpr double kAngleSwitch = 0.5;

/// Both branches of a single coefficient function, exposed so continuity at
/// the switch point can be checked directly.
enum class RotationFn { R1, R2, H2, C3, C10Bar, C11 };
double rotation_fn_series(RotationFn fn, double angle);
double rotation_fn_closed(RotationFn fn, double angle);

/// R = 1 + sin(w)/w * Omega + (1-cos w)/w^2 * Omega^2.
Matrix3 rodrigues(const Vector3& omega);

/// H = 1 + (1-cos w)/w^2 * Omega + (w - sin w)/w^3 * Omega^2, the map from
/// variations of the rotation vector to spin variations of the director.
Matrix3 h_matrix(const Vector3& omega);

/// Orthonormal triad attached to a node: column k of `ref` is A_k, with
/// A_3 equal to the director of the undeformed midsurface.
struct NodalFrame {
  Matrix3 ref = Matrix3::Identity();
  bool intersection = false;
};

/// Builds the reference triad from the second covariant surface tangent and
/// the director: A3 = D, A1 = g2 x D normalized, A2 = D x A1. Falls back to
/// g1 and then to the most orthogonal global axis when the cross product
/// degenerates.
NodalFrame nodal_frame(const Vector3& g2, const Vector3& director,
                       const Vector3* g1_fallback = nullptr,
                       bool intersection = false);

/// Per-node rotation state: the total rotation vector plus everything the
/// element loops need, rebuilt whenever omega changes.
struct NodalRotation {
  Vector3 omega = Vector3::Zero();
  RotationCoeffs coeffs;
  Matrix3 rot = Matrix3::Identity();     // Rodrigues tensor R
  Matrix3 triad = Matrix3::Identity();   // columns a_k = R A_k
  Vector3 director = Vector3::UnitZ();   // d = R A3
  Matrix3 h = Matrix3::Identity();
  int rot_dofs = 2;                      // 2, or 3 on shell intersections
  // Only the leading rot_dofs columns of the 3x3 storage are meaningful.
  Matrix3 t3 = Matrix3::Zero();          // identity (3 dofs) or [a1 a2]
  Matrix3 t = Matrix3::Zero();           // T = skew(d)^T H T3
  Matrix3 h_t3 = Matrix3::Zero();        // H * T3
};

/// T3 maps nodal rotational dofs to increments of the global rotation
/// vector: the identity at intersections, [a1 a2] elsewhere.
Matrix3 t3_matrix(const Matrix3& triad, bool intersection, int& rot_dofs);

/// T = skew(d)^T H T3 relates director variations to nodal rotational dofs.
Matrix3 t_matrix(const Vector3& director, const Vector3& omega,
                 const Matrix3& t3);

/// Symmetric second-variation matrix M(h) of the director rotation.
Matrix3 m_matrix(const Vector3& director, const Vector3& omega,
                 const RotationCoeffs& coeffs, const Vector3& h);

NodalRotation make_nodal_rotation(const NodalFrame& frame,
                                  const Vector3& omega);

/// Additive update omega += T3 * dbeta followed by a rebuild of the rotated
/// quantities; dbeta has state.rot_dofs entries. Returns true when |omega|
/// is approaching 2*pi, where the rotation-vector parametrization
/// degenerates and the caller should log a warning.
bool update_rotation(NodalRotation& state, const NodalFrame& frame,
                     const Eigen::Ref<const Eigen::VectorXd>& dbeta);

}  // namespace semshell

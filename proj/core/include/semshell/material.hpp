#pragma once

#include <Eigen/Dense>
#include <stdexcept>

namespace semshell {

using Matrix8 = Eigen::Matrix<double, 8, 8>;
using Vector8 = Eigen::Matrix<double, 8, 1>;

/// Isotropic shell material with first-order shear deformation.
struct ShellMaterial {
  double youngs_modulus = 0.0;
  double poisson_ratio = 0.0;
  double thickness = 0.0;
  double shear_correction = 5.0 / 6.0;

  void validate() const {
    if (!(youngs_modulus > 0.0)) throw std::invalid_argument("material: E must be positive");
    if (!(poisson_ratio > -1.0 && poisson_ratio < 0.5)) {
      throw std::invalid_argument("material: nu must lie in (-1, 0.5)");
    }
    if (!(thickness > 0.0)) throw std::invalid_argument("material: thickness must be positive");
  }
};

/// Block-diagonal relation between the 8 shell strains
/// [eps11, eps22, 2eps12, kap11, kap22, 2kap12, gam1, gam2] and the
/// thickness-integrated stress resultants [n11, n22, n12, m11, m22, m12,
/// q1, q2]: membrane block h*Cp, bending block h^3/12*Cp, shear block h*Cs.
inline Matrix8 constitutive(const ShellMaterial& mat) {
  mat.validate();
  const double e = mat.youngs_modulus;
  const double nu = mat.poisson_ratio;
  const double h = mat.thickness;

  Eigen::Matrix3d cp;
  cp << 1.0, nu, 0.0,
        nu, 1.0, 0.0,
        0.0, 0.0, 0.5 * (1.0 - nu);
  cp *= e / (1.0 - nu * nu);

  const double cs = mat.shear_correction * e / (2.0 * (1.0 + nu));

  Matrix8 c = Matrix8::Zero();
  c.block<3, 3>(0, 0) = h * cp;
  c.block<3, 3>(3, 3) = (h * h * h / 12.0) * cp;
  c.block<2, 2>(6, 6) = h * cs * Eigen::Matrix2d::Identity();
  return c;
}

}  // namespace semshell

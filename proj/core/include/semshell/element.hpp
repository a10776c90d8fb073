#pragma once

#include <cstdint>
#include <vector>

#include "semshell/lagrange.hpp"
#include "semshell/material.hpp"
#include "semshell/mesh.hpp"
#include "semshell/rotation.hpp"

namespace semshell {

/// Isoparametric: geometry interpolated from the nodal values with the
/// Lagrange basis. NurbsGeometry: reference position and director data
/// taken exactly from the surface, with a two-stage Jacobian; unknown
/// fields remain Lagrange-interpolated.
enum class Formulation { Isoparametric, NurbsGeometry };

/// Scalar multiplications spent in the material and geometric stiffness
/// paths (divisions counted as multiplications, additions ignored).
struct MultCounters {
  std::uint64_t k_e = 0;
  std::uint64_t k_g = 0;

  MultCounters& operator+=(const MultCounters& o) {
    k_e += o.k_e;
    k_g += o.k_g;
    return *this;
  }
};

struct ElementMatrices {
  Eigen::MatrixXd k_e;    // material stiffness
  Eigen::MatrixXd k_g;    // geometric stiffness
  Eigen::VectorXd f_int;  // internal forces
  Eigen::VectorXd f_s;    // surface load vector
  Eigen::VectorXd f_l;    // boundary traction vector
  MultCounters mults;

  Eigen::MatrixXd tangent() const { return k_e + k_g; }
  Eigen::VectorXd residual() const { return f_s + f_l - f_int; }
};

/// Current and reference local-frame derivative vectors at one integration
/// point. The 1/2 subscripts are derivatives along the local in-plane axes.
struct LocalKinematics {
  Vector3 x1, x2;   // current midsurface derivatives
  Vector3 d, d1, d2;  // current director and derivatives
  Vector3 rx1, rx2;  // reference midsurface derivatives
  Vector3 rd, rd1, rd2;  // reference director and derivatives
};

/// Green-Lagrange shell strains
/// [eps11, eps22, 2eps12, kap11, kap22, 2kap12, gam1, gam2].
Vector8 shell_strains(const LocalKinematics& kin);

/// Strain-displacement block of one node: 8 x (3 + rot_dofs). `t` is the
/// nodal rotation operator T (leading rot_dofs columns used).
Eigen::Matrix<double, 8, 6> b_matrix_block(const LocalKinematics& kin,
                                           double n, double dn1, double dn2,
                                           const Matrix3& t, int rot_dofs);

/// 2x2 Jacobian from parametric tangents to the local frame axes,
/// J(a,b) = x_xi^a . A_b.
Eigen::Matrix2d frame_jacobian(const Vector3& x_xi1, const Vector3& x_xi2,
                               const Matrix3& frame);

struct EdgeTraction {
  Side side = Side::VMax;   // mesh boundary the traction acts on
  Vector3 value = Vector3::Zero();  // force per unit reference length
};

struct ElementOptions {
  Formulation formulation = Formulation::Isoparametric;
  bool use_cross_pattern = true;
  double load_scale = 1.0;
};

struct IntegrationPointRecord {
  int element = 0;
  int q = 0;
  double xi1 = 0.0, xi2 = 0.0;
  Vector8 strain = Vector8::Zero();
  Vector8 stress = Vector8::Zero();
};

/// Computes element tangent blocks, internal forces and load vectors by
/// GLL quadrature. With the cross pattern enabled, per-point loops run only
/// over the nodes sharing the point's grid row or column; the resulting
/// matrices are bit-identical to the full loops.
class ElementAssembler {
 public:
  ElementAssembler(const ShellMesh& mesh, const ShellMaterial& material,
                   ElementOptions options);

  void set_surface_load(const Vector3& per_area) { surface_load_ = per_area; }
  void add_edge_traction(const EdgeTraction& t) { edge_tractions_.push_back(t); }
  void set_load_scale(double s) { options_.load_scale = s; }
  void set_cross_pattern(bool on) { options_.use_cross_pattern = on; }
  const ElementOptions& options() const { return options_; }

  int element_dofs(int element_index) const;
  /// Local dof offset of each element node.
  std::vector<int> dof_offsets(int element_index) const;

  ElementMatrices compute(int element_index,
                          const std::vector<Vector3>& displacement,
                          const std::vector<NodalRotation>& rotation) const;

  std::vector<IntegrationPointRecord> integration_point_data(
      int element_index, const std::vector<Vector3>& displacement,
      const std::vector<NodalRotation>& rotation) const;

 private:
  const ShellMesh& mesh_;
  ShellMaterial material_;
  Matrix8 c_matrix_;
  ElementOptions options_;
  Vector3 surface_load_ = Vector3::Zero();
  std::vector<EdgeTraction> edge_tractions_;

  void integrate_edge_loads(int element_index, ElementMatrices& out) const;
};

}  // namespace semshell

#pragma once

#include <string>
#include <vector>

#include "semshell/dof_map.hpp"
#include "semshell/element.hpp"
#include "semshell/material.hpp"
#include "semshell/mesh.hpp"

namespace semshell {

struct PointLoad {
  int node = 0;
  Vector3 force = Vector3::Zero();
};

/// Complete boundary value problem: discretized geometry, material, loads
/// and single-dof constraints.
struct ShellModel {
  ShellMesh mesh;
  ShellMaterial material;
  Formulation formulation = Formulation::Isoparametric;
  Vector3 surface_load = Vector3::Zero();
  std::vector<EdgeTraction> edge_tractions;
  std::vector<PointLoad> point_loads;
  std::vector<Constraint> constraints;
};

enum class EdgeCondition { Clamped, SymmetryPlane, Diaphragm };

/// Appends the node constraints of a supported edge.
///
/// Clamped fixes every dof. A symmetry plane with (axis-aligned) normal n
/// fixes the displacement along n and the rotational dof whose nodal axis
/// is most orthogonal to n, i.e. rotation about the in-plane tangent. A
/// rigid diaphragm in the plane with normal n fixes both in-plane
/// displacements and the rotational dof whose axis is most parallel to n.
void apply_edge_condition(ShellModel& model, Side side, EdgeCondition cond,
                          const Vector3& normal);

/// Displacement and rotation state of every node plus the cached rotated
/// nodal quantities used by element integration.
class ModelState {
 public:
  ModelState() = default;
  explicit ModelState(const ShellModel& model);

  const std::vector<Vector3>& displacement() const { return displacement_; }
  const std::vector<NodalRotation>& rotation() const { return rotation_; }

  /// Current value of a single dof (translations global, rotations are the
  /// accumulated rotation-vector components in the nodal frame layout).
  double dof_value(const DofMap& map, int full) const;

  /// Applies a full-length increment vector: displacements additively,
  /// rotation vectors through the nodal T3 maps. Returns true if any node
  /// rotation is approaching the 2*pi parametrization limit.
  bool apply_increment(const ShellModel& model,
                       const Eigen::Ref<const Eigen::VectorXd>& delta_full);

  void reset(const ShellModel& model);

 private:
  std::vector<Vector3> displacement_;
  std::vector<NodalRotation> rotation_;
};

/// Writes node id, reference position, displacement, rotation vector and
/// current director as CSV.
void write_solution_csv(const ShellModel& model, const ModelState& state,
                        const std::string& path);

/// Per integration point strain/stress dump for all elements.
void write_integration_point_csv(const ShellModel& model,
                                 const ModelState& state,
                                 const std::string& path);

}  // namespace semshell

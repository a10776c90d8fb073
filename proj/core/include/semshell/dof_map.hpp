#pragma once

#include <vector>

#include "semshell/mesh.hpp"

namespace semshell {

/// Single-dof prescription. Local dofs 0..2 are the global displacement
/// components; 3.. are the rotational dofs expressed in the nodal frame
/// (or global axial components at intersection nodes).
struct Constraint {
  int node = 0;
  int local_dof = 0;
  double value = 0.0;
};

/// Contiguous global dof layout with 5 dofs per regular node and 6 per
/// intersection node. Constrained dofs are excluded from the solved system.
class DofMap {
 public:
  static DofMap build(const ShellMesh& mesh,
                      const std::vector<Constraint>& constraints);

  int total_dofs() const { return total_; }
  int free_count() const { return free_; }
  int node_width(int node) const { return widths_[node]; }
  int node_offset(int node) const { return offsets_[node]; }
  int full_index(int node, int local) const { return offsets_[node] + local; }
  /// Index into the reduced system, or -1 for a constrained dof.
  int free_index(int full) const { return free_index_[full]; }
  bool constrained(int full) const { return free_index_[full] < 0; }
  double prescribed_value(int full) const { return prescribed_[full]; }

 private:
  int total_ = 0;
  int free_ = 0;
  std::vector<int> widths_;
  std::vector<int> offsets_;
  std::vector<int> free_index_;
  std::vector<double> prescribed_;
};

}  // namespace semshell

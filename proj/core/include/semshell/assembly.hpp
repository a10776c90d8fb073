#pragma once

#include <Eigen/Sparse>

#include "semshell/dof_map.hpp"
#include "semshell/model.hpp"

namespace semshell {

/// Reduced tangent system over the free dofs. Either the dense or the
/// sparse storage is populated, depending on the requested solver path.
struct AssembledSystem {
  bool dense = true;
  Eigen::MatrixXd k_dense;
  Eigen::SparseMatrix<double> k_sparse;
  Eigen::VectorXd residual;  // f_ext - f_int on free dofs
  MultCounters mults;
};

struct AssemblyOptions {
  bool use_cross_pattern = true;
  bool dense = true;
  double load_scale = 1.0;
  bool tangent = true;  // skip stiffness scatter when only the residual is needed
};

/// Elements are processed in index order and scattered in a fixed order, so
/// repeated assembly of the same state is bit-reproducible.
AssembledSystem assemble(const ShellModel& model, const DofMap& map,
                         const ModelState& state,
                         const AssemblyOptions& options);

}  // namespace semshell

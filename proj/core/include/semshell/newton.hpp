#pragma once

#include <string>
#include <vector>

#include "semshell/assembly.hpp"

namespace semshell {

enum class LinearSolverKind { Auto, Dense, SparseDirect };

struct SolverConfig {
  int load_steps = 5;
  int max_iterations = 30;
  double tol_rel = 1e-9;   // relative to the first residual of each step
  double tol_abs = 1e-12;
  LinearSolverKind linear_solver = LinearSolverKind::Auto;
  int dense_dof_limit = 3000;
  bool use_cross_pattern = true;
  bool verbose = false;
};

struct IterationRecord {
  int load_step = 0;
  int iteration = 0;
  double residual_norm = 0.0;
  double energy_norm = 0.0;
};

struct NewtonReport {
  bool converged = false;
  std::string failure;
  std::vector<IterationRecord> history;
  int total_iterations = 0;
  MultCounters mults;
  bool rotation_warning = false;
  int free_dofs = 0;

  /// Iterations of one load step (1-based step index).
  std::vector<IterationRecord> step_history(int load_step) const;
};

/// Load-stepped Newton iteration on the free dofs. Residual convergence is
/// measured against the first residual of each step with an absolute floor.
/// Prescribed (nonzero) dof values are ramped with the load factor and
/// applied at the start of each step.
NewtonReport newton_solve(const ShellModel& model, const SolverConfig& config,
                          ModelState& state);

void write_convergence_csv(const NewtonReport& report, const std::string& path);

}  // namespace semshell

#pragma once

#include <string>
#include <vector>

#include "semshell/benchmark_cases.hpp"

namespace semshell {

enum class StudyMode { PRefine, HRefine };

struct StudySpec {
  StudyMode mode = StudyMode::PRefine;
  std::vector<int> orders;
  std::vector<int> meshes = {1};  // m gives an m x m mesh
  MeshScenario scenario = MeshScenario::EvenlySpaced;
  Formulation formulation = Formulation::Isoparametric;
};

struct ResultRow {
  std::string case_id;
  std::string formulation;
  std::string scenario;
  int order = 0;
  int mesh = 1;
  int elements = 0;
  int dofs = 0;
  double displacement = 0.0;
  double normalized = 0.0;
  int iterations = 0;
  bool converged = false;
  double wall_seconds = 0.0;
  std::uint64_t mults_k_e = 0;
  std::uint64_t mults_k_g = 0;
};
using ResultTable = std::vector<ResultRow>;

/// Runs the order x mesh grid of the study; solver failures are flagged in
/// the row and the study continues.
ResultTable run_case(const BenchmarkCase& bench, const StudySpec& spec,
                     const SolverConfig& config);

/// Solves one configuration and returns the row plus the full report.
ResultRow run_single(const BenchmarkCase& bench, const MeshSpec& mesh,
                     int order, Formulation formulation,
                     const SolverConfig& config, NewtonReport* report_out,
                     ModelState* state_out, ShellModel* model_out);

void write_result_csv(const ResultTable& table, const std::string& path);

/// One CSV per figure analog: normalized deflection vs order for
/// p-refinement; vs dofs and vs element count for h-refinement.
/// Throws std::runtime_error on an empty table.
void emit_plot_data(const ResultTable& table, StudyMode mode,
                    const std::string& out_dir);

struct TimingRow {
  int order = 0;
  double t_cross_seconds = 0.0;  // element tangent with the cross pattern
  double t_full_seconds = 0.0;   // element tangent with full loops
  double t_solve_seconds = 0.0;  // linear solve of the assembled system
  std::uint64_t counter_cross_k_e = 0, counter_cross_k_g = 0;
  std::uint64_t counter_full_k_e = 0, counter_full_k_g = 0;
};

/// Single-element cross-pattern efficiency study on the given case: one
/// load step is solved first, then the element tangent is timed with and
/// without the cross pattern at that state.
std::vector<TimingRow> timing_study(const BenchmarkCase& bench,
                                    const std::vector<int>& orders,
                                    const SolverConfig& config);

void write_timing_csv(const std::vector<TimingRow>& rows,
                      const std::string& path);

}  // namespace semshell

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "semshell/benchmark_cases.hpp"
#include "semshell/geometry_io.hpp"
#include "semshell/study.hpp"

namespace fs = std::filesystem;
using namespace semshell;

namespace {

struct CommonArgs {
  std::string case_id = "scordelis";
  std::string case_file;
  std::string config_file;
  std::string out_dir = "out";
  std::string scenario = "esk";
  std::string formulation = "semi";
  std::string mesh = "1x1";
  std::vector<int> orders = {6};
  int steps = -1;       // -1: case default
  double tol = 1e-9;
  int max_iterations = 30;
  bool no_cross = false;
  bool verbose = false;
  bool dump_ip = false;
};

void add_common_flags(CLI::App* cmd, CommonArgs& a, bool with_orders = true) {
  cmd->add_option("--case", a.case_id, "Built-in case id (scordelis, hemisphere, freeform, freeform-nurbs)");
  cmd->add_option("--case-file", a.case_file, "Case description JSON (overrides --case)");
  cmd->add_option("--config", a.config_file, "JSON config file; command-line flags win");
  cmd->add_option("--out", a.out_dir, "Output directory");
  cmd->add_option("--scenario", a.scenario, "Mesh scenario: esk (evenly spaced) or cad (knot aligned)")
      ->check(CLI::IsMember({"esk", "cad"}));
  cmd->add_option("--formulation", a.formulation, "semi or semn")
      ->check(CLI::IsMember({"semi", "semn"}));
  cmd->add_option("--mesh", a.mesh, "Elements as NxM, e.g. 2x2");
  if (with_orders) cmd->add_option("--order", a.orders, "Element order(s)");
  cmd->add_option("--steps", a.steps, "Load steps (default: per case)");
  cmd->add_option("--tol", a.tol, "Relative residual tolerance");
  cmd->add_option("--max-iterations", a.max_iterations, "Newton iteration cap");
  cmd->add_flag("--no-cross", a.no_cross, "Disable the cross-pattern loops");
  cmd->add_flag("--verbose", a.verbose, "Per-iteration residual output");
}

// The config file may set any long flag by name (e.g. {"order": [6,8]}).
void apply_config_file(CommonArgs& a, const CLI::App* cmd) {
  if (a.config_file.empty()) return;
  std::ifstream in(a.config_file);
  if (!in) throw std::runtime_error("cannot open config " + a.config_file);
  nlohmann::json j;
  in >> j;
  auto set_if_unset = [&](const char* flag, auto& target) {
    using T = std::decay_t<decltype(target)>;
    if (j.contains(flag) && cmd->count(std::string("--") + flag) == 0) {
      target = j.at(flag).get<T>();
    }
  };
  set_if_unset("case", a.case_id);
  set_if_unset("case-file", a.case_file);
  set_if_unset("out", a.out_dir);
  set_if_unset("scenario", a.scenario);
  set_if_unset("formulation", a.formulation);
  set_if_unset("mesh", a.mesh);
  set_if_unset("order", a.orders);
  set_if_unset("steps", a.steps);
  set_if_unset("tol", a.tol);
  set_if_unset("max-iterations", a.max_iterations);
}

std::pair<int, int> parse_mesh(const std::string& s) {
  int nu = 0, nv = 0;
  if (std::sscanf(s.c_str(), "%dx%d", &nu, &nv) != 2 || nu < 1 || nv < 1) {
    throw std::runtime_error("bad --mesh value '" + s + "', expected NxM");
  }
  return {nu, nv};
}

BenchmarkCase load_case(const CommonArgs& a) {
  if (!a.case_file.empty()) return case_from_json_file(a.case_file);
  return make_benchmark(a.case_id);
}

SolverConfig make_solver_config(const CommonArgs& a, const BenchmarkCase& bench) {
  SolverConfig cfg;
  cfg.load_steps = a.steps > 0 ? a.steps : bench.default_load_steps;
  cfg.tol_rel = a.tol;
  cfg.max_iterations = a.max_iterations;
  cfg.use_cross_pattern = !a.no_cross;
  cfg.verbose = a.verbose;
  return cfg;
}

MeshSpec make_mesh_spec(const CommonArgs& a) {
  auto [nu, nv] = parse_mesh(a.mesh);
  MeshSpec spec;
  spec.elements_u = nu;
  spec.elements_v = nv;
  spec.scenario = a.scenario == "cad" ? MeshScenario::CadAligned
                                      : MeshScenario::EvenlySpaced;
  return spec;
}

int cmd_run(CommonArgs& a, const CLI::App* cmd) {
  apply_config_file(a, cmd);
  const BenchmarkCase bench = load_case(a);
  const SolverConfig cfg = make_solver_config(a, bench);
  const MeshSpec mesh = make_mesh_spec(a);
  const Formulation form = a.formulation == "semn" ? Formulation::NurbsGeometry
                                                   : Formulation::Isoparametric;
  fs::create_directories(a.out_dir);

  NewtonReport report;
  ModelState state;
  ShellModel model;
  const ResultRow row = run_single(bench, mesh, a.orders.front(), form, cfg,
                                   &report, &state, &model);

  write_result_csv({row}, (fs::path(a.out_dir) / "result.csv").string());
  write_convergence_csv(report, (fs::path(a.out_dir) / "convergence.csv").string());
  write_solution_csv(model, state, (fs::path(a.out_dir) / "solution.csv").string());
  if (a.dump_ip) {
    write_integration_point_csv(model, state,
                                (fs::path(a.out_dir) / "integration_points.csv").string());
  }

  std::printf("%s p=%d mesh=%s %s: %s, %d iterations, dofs=%d\n",
              row.case_id.c_str(), row.order, a.mesh.c_str(),
              row.formulation.c_str(), row.converged ? "converged" : "FAILED",
              row.iterations, row.dofs);
  std::printf("monitored displacement = %.8f  normalized = %.6f\n",
              row.displacement, row.normalized);
  if (report.rotation_warning) {
    std::fprintf(stderr, "warning: nodal rotation magnitude approached 2*pi\n");
  }
  return row.converged ? 0 : 1;
}

int cmd_study(CommonArgs& a, const std::string& mode_str, const CLI::App* cmd,
              const std::vector<int>& meshes) {
  apply_config_file(a, cmd);
  const BenchmarkCase bench = load_case(a);
  const SolverConfig cfg = make_solver_config(a, bench);
  fs::create_directories(a.out_dir);

  StudySpec spec;
  spec.mode = mode_str == "h" ? StudyMode::HRefine : StudyMode::PRefine;
  spec.orders = a.orders;
  spec.meshes = meshes.empty() ? std::vector<int>{parse_mesh(a.mesh).first} : meshes;
  spec.scenario = a.scenario == "cad" ? MeshScenario::CadAligned
                                      : MeshScenario::EvenlySpaced;
  spec.formulation = a.formulation == "semn" ? Formulation::NurbsGeometry
                                             : Formulation::Isoparametric;

  const ResultTable table = run_case(bench, spec, cfg);
  write_result_csv(table, (fs::path(a.out_dir) / "study.csv").string());
  emit_plot_data(table, spec.mode, a.out_dir);

  bool all_ok = true;
  for (const ResultRow& r : table) {
    std::printf("%-14s %s %s p=%-2d mesh=%dx%d  normalized=%+.6f  iters=%d %s\n",
                r.case_id.c_str(), r.formulation.c_str(), r.scenario.c_str(),
                r.order, r.mesh, r.mesh, r.normalized, r.iterations,
                r.converged ? "" : " FAILED");
    all_ok &= r.converged;
  }
  return all_ok ? 0 : 1;
}

int cmd_timing(CommonArgs& a, const CLI::App* cmd) {
  apply_config_file(a, cmd);
  const BenchmarkCase bench = load_case(a);
  const SolverConfig cfg = make_solver_config(a, bench);
  fs::create_directories(a.out_dir);

  const std::vector<TimingRow> rows = timing_study(bench, a.orders, cfg);
  write_timing_csv(rows, (fs::path(a.out_dir) / "timing.csv").string());
  for (const TimingRow& r : rows) {
    std::printf("p=%-2d t_full/t_cross=%6.2f t_solve/t_cross=%6.2f  "
                "counters k_e cross/full = %llu / %llu\n",
                r.order, r.t_full_seconds / r.t_cross_seconds,
                r.t_solve_seconds / r.t_cross_seconds,
                (unsigned long long)r.counter_cross_k_e,
                (unsigned long long)r.counter_full_k_e);
  }
  return 0;
}

int cmd_geom(CommonArgs& a, const std::string& file, const CLI::App* cmd) {
  apply_config_file(a, cmd);
  const BenchmarkCase bench = load_case(a);
  const std::string text =
      bench.from_coons ? coons_to_json(bench.boundary) : patch_to_json(bench.patch);
  if (file.empty() || file == "-") {
    std::cout << text << '\n';
  } else {
    save_geometry_json(text, file);
    std::printf("wrote %s\n", file.c_str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Geometrically nonlinear spectral Reissner-Mindlin shell solver"};
  app.require_subcommand(1);

  CommonArgs run_args, study_args, timing_args, geom_args;
  std::string study_mode = "p";
  std::vector<int> study_meshes;
  std::string geom_file;

  CLI::App* run = app.add_subcommand("run", "Solve a single configuration");
  add_common_flags(run, run_args);
  run->add_flag("--dump-ip", run_args.dump_ip,
                "Write per integration point strains/stresses");

  CLI::App* study = app.add_subcommand("study", "Refinement sweep");
  add_common_flags(study, study_args);
  study->add_option("--mode", study_mode, "p or h refinement")
      ->check(CLI::IsMember({"p", "h"}));
  study->add_option("--meshes", study_meshes, "Mesh sizes m (for m x m), h-refinement");

  CLI::App* timing = app.add_subcommand("timing", "Cross-pattern efficiency study");
  add_common_flags(timing, timing_args);

  CLI::App* geom = app.add_subcommand("geom", "Export built-in geometry as JSON");
  add_common_flags(geom, geom_args, false);
  geom->add_option("--file", geom_file, "Output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return cmd_run(run_args, run);
    if (study->parsed()) return cmd_study(study_args, study_mode, study, study_meshes);
    if (timing->parsed()) return cmd_timing(timing_args, timing);
    if (geom->parsed()) return cmd_geom(geom_args, geom_file, geom);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}

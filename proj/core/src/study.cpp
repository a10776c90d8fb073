#include "semshell/study.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace semshell {

namespace {

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

const char* formulation_name(Formulation f) {
  return f == Formulation::Isoparametric ? "semi" : "semn";
}

const char* scenario_name(MeshScenario s) {
  switch (s) {
    case MeshScenario::EvenlySpaced: return "esk";
    case MeshScenario::CadAligned: return "cad";
    case MeshScenario::Custom: return "custom";
  }
  return "?";
}

}  // namespace

ResultRow run_single(const BenchmarkCase& bench, const MeshSpec& mesh,
                     int order, Formulation formulation,
                     const SolverConfig& config, NewtonReport* report_out,
                     ModelState* state_out, ShellModel* model_out) {
  ResultRow row;
  row.case_id = bench.id;
  row.formulation = formulation_name(formulation);
  row.scenario = scenario_name(mesh.scenario);
  row.order = order;
  row.mesh = mesh.elements_u;

  const auto t0 = std::chrono::steady_clock::now();
  ShellModel model = build_model(bench, mesh, order, formulation);
  ModelState state(model);
  const NewtonReport report = newton_solve(model, config, state);

  row.elements = int(model.mesh.elements.size());
  row.dofs = report.free_dofs;
  row.converged = report.converged;
  row.iterations = report.total_iterations;
  row.displacement = monitored_displacement(bench, model, state);
  row.normalized = row.displacement / bench.reference_value;
  row.wall_seconds = seconds_since(t0);
  row.mults_k_e = report.mults.k_e;
  row.mults_k_g = report.mults.k_g;

  if (report_out) *report_out = report;
  if (state_out) *state_out = std::move(state);
  if (model_out) *model_out = std::move(model);
  return row;
}

ResultTable run_case(const BenchmarkCase& bench, const StudySpec& spec,
                     const SolverConfig& config) {
  if (spec.orders.empty() || spec.meshes.empty()) {
    throw std::invalid_argument("run_case: empty order or mesh list");
  }
  ResultTable table;
  for (int m : spec.meshes) {
    for (int p : spec.orders) {
      MeshSpec mesh{m, m, spec.scenario};
      table.push_back(run_single(bench, mesh, p, spec.formulation, config,
                                 nullptr, nullptr, nullptr));
    }
  }
  return table;
}

void write_result_csv(const ResultTable& table, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << "case,formulation,scenario,order,mesh,elements,dofs,displacement,"
         "normalized,iterations,converged,wall_seconds,mults_k_e,mults_k_g\n";
  out.precision(12);
  for (const ResultRow& r : table) {
    out << r.case_id << ',' << r.formulation << ',' << r.scenario << ','
        << r.order << ',' << r.mesh << ',' << r.elements << ',' << r.dofs
        << ',' << r.displacement << ',' << r.normalized << ',' << r.iterations
        << ',' << (r.converged ? 1 : 0) << ',' << r.wall_seconds << ','
        << r.mults_k_e << ',' << r.mults_k_g << '\n';
  }
}

void emit_plot_data(const ResultTable& table, StudyMode mode,
                    const std::string& out_dir) {
  if (table.empty()) {
    throw std::runtime_error("emit_plot_data: empty result table");
  }
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);
  if (mode == StudyMode::PRefine) {
    std::ofstream out(fs::path(out_dir) / "normalized_vs_order.csv");
    out << "formulation,scenario,mesh,order,normalized\n";
    out.precision(12);
    for (const ResultRow& r : table) {
      out << r.formulation << ',' << r.scenario << ',' << r.mesh << ','
          << r.order << ',' << r.normalized << '\n';
    }
  } else {
    {
      std::ofstream out(fs::path(out_dir) / "normalized_vs_dofs.csv");
      out << "formulation,scenario,order,mesh,dofs,normalized\n";
      out.precision(12);
      for (const ResultRow& r : table) {
        out << r.formulation << ',' << r.scenario << ',' << r.order << ','
            << r.mesh << ',' << r.dofs << ',' << r.normalized << '\n';
      }
    }
    {
      std::ofstream out(fs::path(out_dir) / "normalized_vs_elements.csv");
      out << "formulation,scenario,order,mesh,elements,normalized\n";
      out.precision(12);
      for (const ResultRow& r : table) {
        out << r.formulation << ',' << r.scenario << ',' << r.order << ','
            << r.mesh << ',' << r.elements << ',' << r.normalized << '\n';
      }
    }
  }
}

std::vector<TimingRow> timing_study(const BenchmarkCase& bench,
                                    const std::vector<int>& orders,
                                    const SolverConfig& base_config) {
  std::vector<TimingRow> rows;
  for (int p : orders) {
    TimingRow row;
    row.order = p;

    SolverConfig config = base_config;
    config.load_steps = 1;
    ShellModel model = build_model(bench, MeshSpec{1, 1}, p,
                                   Formulation::Isoparametric);
    ModelState state(model);
    const NewtonReport report = newton_solve(model, config, state);
    if (!report.converged) {
      throw std::runtime_error("timing_study: solve failed at order " +
                               std::to_string(p));
    }

    ElementOptions opts;
    opts.formulation = Formulation::Isoparametric;
    ElementAssembler assembler(model.mesh, model.material, opts);
    assembler.set_surface_load(model.surface_load);

    const int reps = std::max(1, 2000000 / ((p + 1) * (p + 1) * (p + 1) * (p + 1)));
    auto time_tangent = [&](bool cross, std::uint64_t& ke, std::uint64_t& kg) {
      assembler.set_cross_pattern(cross);
      ElementMatrices em =
          assembler.compute(0, state.displacement(), state.rotation());
      ke = em.mults.k_e;
      kg = em.mults.k_g;
      const auto t0 = std::chrono::steady_clock::now();
      for (int r = 0; r < reps; ++r) {
        em = assembler.compute(0, state.displacement(), state.rotation());
      }
      return seconds_since(t0) / reps;
    };
    row.t_cross_seconds = time_tangent(true, row.counter_cross_k_e, row.counter_cross_k_g);
    row.t_full_seconds = time_tangent(false, row.counter_full_k_e, row.counter_full_k_g);

    // One tangent solve at the converged state.
    const DofMap map = DofMap::build(model.mesh, model.constraints);
    AssemblyOptions aopts;
    aopts.dense = true;
    const AssembledSystem sys = assemble(model, map, state, aopts);
    const auto t0 = std::chrono::steady_clock::now();
    const Eigen::VectorXd dx =
        Eigen::PartialPivLU<Eigen::MatrixXd>(sys.k_dense).solve(sys.residual);
    row.t_solve_seconds = seconds_since(t0);
    if (!dx.allFinite()) {
      throw std::runtime_error("timing_study: solve produced non-finite values");
    }
    rows.push_back(row);
  }
  return rows;
}

void write_timing_csv(const std::vector<TimingRow>& rows,
                      const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << "order,t_cross_seconds,t_full_seconds,t_solve_seconds,"
         "t_full_over_t_cross,t_solve_over_t_cross,"
         "counter_cross_k_e,counter_cross_k_g,counter_full_k_e,counter_full_k_g\n";
  out.precision(12);
  for (const TimingRow& r : rows) {
    out << r.order << ',' << r.t_cross_seconds << ',' << r.t_full_seconds
        << ',' << r.t_solve_seconds << ',' << r.t_full_seconds / r.t_cross_seconds
        << ',' << r.t_solve_seconds / r.t_cross_seconds << ','
        << r.counter_cross_k_e << ',' << r.counter_cross_k_g << ','
        << r.counter_full_k_e << ',' << r.counter_full_k_g << '\n';
  }
}

}  // namespace semshell

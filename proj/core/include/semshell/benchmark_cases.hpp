#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semshell/builtin_geometries.hpp"
#include "semshell/model.hpp"
#include "semshell/newton.hpp"

namespace semshell {

struct MonitorSpec {
  Eigen::Vector2d uv = {0.0, 0.0};
  Vector3 direction = Vector3::UnitZ();
};

/// A complete solvable configuration: geometry, material, loads, boundary
/// conditions, the monitored displacement and its converged reference value.
struct BenchmarkCase {
  std::string id;
  bool from_coons = false;
  SurfacePatch patch;
  CoonsBoundary boundary;  // populated when from_coons

  ShellMaterial material;
  Vector3 surface_load = Vector3::Zero();
  std::vector<EdgeTraction> edge_tractions;

  struct PointForce {
    Eigen::Vector2d uv;
    Vector3 force;
  };
  std::vector<PointForce> point_forces;

  struct EdgeBc {
    Side side;
    EdgeCondition condition;
    Vector3 normal = Vector3::UnitX();  // ignored for clamped edges
  };
  std::vector<EdgeBc> edge_bcs;

  struct PointBc {
    Eigen::Vector2d uv;
    int local_dof;
    double value = 0.0;
  };
  std::vector<PointBc> point_bcs;

  MonitorSpec monitor;
  double reference_value = 1.0;
  int default_load_steps = 5;
};

std::vector<std::string> benchmark_ids();
BenchmarkCase make_benchmark(const std::string& id);

/// Case description from JSON (schema in the README): geometry by builtin
/// name, file reference or inline object, plus material, loads, constraints
/// and monitor.
BenchmarkCase case_from_json_file(const std::string& path);
BenchmarkCase case_from_json_text(const std::string& text);

struct MeshSpec {
  int elements_u = 1;
  int elements_v = 1;
  MeshScenario scenario = MeshScenario::EvenlySpaced;
};

/// Discretizes the case: places nodes, resolves edge/point constraints and
/// point loads to node ids.
ShellModel build_model(const BenchmarkCase& bench, const MeshSpec& spec,
                       int order, Formulation formulation);

double monitored_displacement(const BenchmarkCase& bench,
                              const ShellModel& model,
                              const ModelState& state);

}  // namespace semshell

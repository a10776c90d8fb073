#include "semshell/benchmark_cases.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "semshell/geometry_io.hpp"

namespace semshell {

std::vector<std::string> benchmark_ids() {
  return {"scordelis", "hemisphere", "freeform", "freeform-nurbs"};
}

BenchmarkCase make_benchmark(const std::string& id) {
  BenchmarkCase c;
  c.id = id;
  if (id == "scordelis") {
    c.patch = scordelis_roof_patch();
    c.material = {4.32e8, 0.0, 0.25};
    c.surface_load = {0.0, 0.0, -90.0};
    // u = 0 is the crown symmetry plane (normal x), v = 0 the mid-length
    // symmetry plane (normal y), v = 1 the rigid diaphragm in the x-z
    // plane; the straight edge u = 1 is free.
    c.edge_bcs = {{Side::UMin, EdgeCondition::SymmetryPlane, Vector3::UnitX()},
                  {Side::VMin, EdgeCondition::SymmetryPlane, Vector3::UnitY()},
                  {Side::VMax, EdgeCondition::Diaphragm, Vector3::UnitY()}};
    c.monitor = {{1.0, 0.0}, Vector3::UnitZ()};
    c.reference_value = -0.25356483;
    c.default_load_steps = 1;
  } else if (id == "hemisphere") {
    c.patch = hemisphere_patch();
    c.material = {6.825e7, 0.3, 0.04};
    // Quarter model: the full shell carries alternating radial forces 2F;
    // each symmetry cut carries F = 100 (inward along x at u=0, outward
    // along y at u=1, both on the equator v=1).
    c.point_forces = {{{0.0, 1.0}, {-100.0, 0.0, 0.0}},
                      {{1.0, 1.0}, {0.0, 100.0, 0.0}}};
    c.edge_bcs = {{Side::UMin, EdgeCondition::SymmetryPlane, Vector3::UnitY()},
                  {Side::UMax, EdgeCondition::SymmetryPlane, Vector3::UnitX()}};
    // One vertical gauge dof removes the remaining rigid translation.
    c.point_bcs = {{{0.0, 1.0}, 2, 0.0}};
    c.monitor = {{0.0, 1.0}, -Vector3::UnitX()};  // inward radial motion
    c.reference_value = 5.86799;
    c.default_load_steps = 5;
  } else if (id == "freeform") {
    c.from_coons = true;
    c.boundary = freeform_boundary();
    c.patch = coons_patch(c.boundary);
    c.material = {1.2e6, 0.3, 0.1};
    c.edge_tractions = {{Side::VMax, {0.0, 10.0, 0.0}}};
    c.edge_bcs = {{Side::VMin, EdgeCondition::Clamped, Vector3::UnitZ()}};
    c.monitor = {{1.0, 1.0}, Vector3::UnitY()};
    c.reference_value = 0.734541;
    c.default_load_steps = 5;
  } else if (id == "freeform-nurbs") {
    c.from_coons = true;
    c.boundary = freeform_nurbs_boundary();
    c.patch = coons_patch(c.boundary);
    c.material = {1.2e6, 0.3, 0.1};
    c.edge_tractions = {{Side::VMax, {0.0, 10.0, 0.0}}};
    c.edge_bcs = {{Side::VMin, EdgeCondition::Clamped, Vector3::UnitZ()}};
    c.monitor = {{1.0, 1.0}, Vector3::UnitY()};
    c.reference_value = 0.3326847;
    c.default_load_steps = 5;
  } else {
    throw std::invalid_argument("unknown benchmark case '" + id + "'");
  }
  return c;
}

namespace {

using nlohmann::json;

Side side_from_string(const std::string& s) {
  if (s == "umin") return Side::UMin;
  if (s == "umax") return Side::UMax;
  if (s == "vmin") return Side::VMin;
  if (s == "vmax") return Side::VMax;
  throw std::runtime_error("case JSON: unknown side '" + s + "'");
}

Vector3 vec3(const json& j) {
  return {j.at(0).get<double>(), j.at(1).get<double>(), j.at(2).get<double>()};
}

int dof_from_string(const std::string& s) {
  if (s == "u1") return 0;
  if (s == "u2") return 1;
  if (s == "u3") return 2;
  if (s == "b1") return 3;
  if (s == "b2") return 4;
  if (s == "b3") return 5;
  throw std::runtime_error("case JSON: unknown dof '" + s + "'");
}

Vector3 axis_from_string(const std::string& s) {
  if (s == "x") return Vector3::UnitX();
  if (s == "y") return Vector3::UnitY();
  if (s == "z") return Vector3::UnitZ();
  throw std::runtime_error("case JSON: unknown axis '" + s + "'");
}

}  // namespace

BenchmarkCase case_from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(std::string("case JSON: ") + e.what());
  }

  const json& geom = j.at("geometry");
  BenchmarkCase c;
  if (geom.contains("builtin")) {
    c = make_benchmark(geom.at("builtin").get<std::string>());
    // Everything below overrides the builtin defaults where present.
  } else if (geom.contains("file")) {
    GeometryFile gf = load_geometry_json(geom.at("file").get<std::string>());
    c.from_coons = gf.is_coons;
    c.patch = gf.patch;
    c.boundary = gf.boundary;
  } else {
    GeometryFile gf = parse_geometry_json(geom.dump());
    c.from_coons = gf.is_coons;
    c.patch = gf.patch;
    c.boundary = gf.boundary;
  }
  c.id = j.value("id", c.id.empty() ? std::string("custom") : c.id);

  if (j.contains("material")) {
    const json& m = j.at("material");
    c.material.youngs_modulus = m.at("youngs_modulus").get<double>();
    c.material.poisson_ratio = m.at("poisson_ratio").get<double>();
    c.material.thickness = m.at("thickness").get<double>();
    if (m.contains("shear_correction")) {
      c.material.shear_correction = m.at("shear_correction").get<double>();
    }
    c.material.validate();
  }

  if (j.contains("loads")) {
    const json& l = j.at("loads");
    if (l.contains("surface")) c.surface_load = vec3(l.at("surface"));
    if (l.contains("edges")) {
      c.edge_tractions.clear();
      for (const auto& e : l.at("edges")) {
        c.edge_tractions.push_back({side_from_string(e.at("side").get<std::string>()),
                                    vec3(e.at("traction"))});
      }
    }
    if (l.contains("points")) {
      c.point_forces.clear();
      for (const auto& e : l.at("points")) {
        c.point_forces.push_back(
            {{e.at("at").at(0).get<double>(), e.at("at").at(1).get<double>()},
             vec3(e.at("force"))});
      }
    }
  }

  if (j.contains("constraints")) {
    c.edge_bcs.clear();
    c.point_bcs.clear();
    for (const auto& e : j.at("constraints")) {
      if (e.contains("side")) {
        BenchmarkCase::EdgeBc bc;
        bc.side = side_from_string(e.at("side").get<std::string>());
        const std::string type = e.at("type").get<std::string>();
        if (type == "clamped") {
          bc.condition = EdgeCondition::Clamped;
        } else if (type == "symmetry") {
          bc.condition = EdgeCondition::SymmetryPlane;
          bc.normal = axis_from_string(e.at("normal").get<std::string>());
        } else if (type == "diaphragm") {
          bc.condition = EdgeCondition::Diaphragm;
          bc.normal = axis_from_string(e.at("normal").get<std::string>());
        } else {
          throw std::runtime_error("case JSON: unknown constraint type '" + type + "'");
        }
        c.edge_bcs.push_back(bc);
      } else {
        const Eigen::Vector2d at(e.at("at").at(0).get<double>(),
                                 e.at("at").at(1).get<double>());
        const double value = e.value("value", 0.0);
        for (const auto& d : e.at("fix")) {
          c.point_bcs.push_back({at, dof_from_string(d.get<std::string>()), value});
        }
      }
    }
  }

  if (j.contains("monitor")) {
    const json& m = j.at("monitor");
    c.monitor.uv = {m.at("at").at(0).get<double>(), m.at("at").at(1).get<double>()};
    c.monitor.direction = vec3(m.at("direction"));
  }
  if (j.contains("reference")) c.reference_value = j.at("reference").get<double>();
  if (j.contains("load_steps")) c.default_load_steps = j.at("load_steps").get<int>();
  return c;
}

BenchmarkCase case_from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return case_from_json_text(ss.str());
}

ShellModel build_model(const BenchmarkCase& bench, const MeshSpec& spec,
                       int order, Formulation formulation) {
  MeshLayout layout;
  switch (spec.scenario) {
    case MeshScenario::EvenlySpaced:
      layout = evenly_spaced_layout(spec.elements_u, spec.elements_v);
      break;
    case MeshScenario::CadAligned:
      layout = cad_aligned_layout(bench.patch, spec.elements_u, spec.elements_v);
      break;
    case MeshScenario::Custom:
      throw std::invalid_argument("build_model: custom layouts need explicit borders");
  }

  ShellModel model;
  model.mesh = place_nodes(bench.patch, layout, order);
  model.material = bench.material;
  model.formulation = formulation;
  model.surface_load = bench.surface_load;
  model.edge_tractions = bench.edge_tractions;

  for (const auto& pf : bench.point_forces) {
    model.point_loads.push_back({model.mesh.node_at(pf.uv[0], pf.uv[1]), pf.force});
  }
  for (const auto& bc : bench.edge_bcs) {
    apply_edge_condition(model, bc.side, bc.condition, bc.normal);
  }
  for (const auto& bc : bench.point_bcs) {
    model.constraints.push_back(
        {model.mesh.node_at(bc.uv[0], bc.uv[1]), bc.local_dof, bc.value});
  }
  return model;
}

double monitored_displacement(const BenchmarkCase& bench,
                              const ShellModel& model,
                              const ModelState& state) {
  const int node = model.mesh.node_at(bench.monitor.uv[0], bench.monitor.uv[1]);
  return state.displacement()[node].dot(bench.monitor.direction);
}

}  // namespace semshell

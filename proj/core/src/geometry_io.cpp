#include "semshell/geometry_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace semshell {

namespace {

using nlohmann::json;

json curve_to_json_obj(const BoundaryCurve& c) {
  json j;
  j["degree"] = c.basis.degree;
  j["knots"] = c.basis.knots;
  json pts = json::array();
  for (const Vector3& p : c.points) pts.push_back({p.x(), p.y(), p.z()});
  j["control_points"] = pts;
  if (!c.weights.empty()) j["weights"] = c.weights;
  return j;
}

BoundaryCurve curve_from_json(const json& j) {
  BoundaryCurve c;
  c.basis.degree = j.at("degree").get<int>();
  c.basis.knots = j.at("knots").get<std::vector<double>>();
  for (const auto& p : j.at("control_points")) {
    c.points.emplace_back(p.at(0).get<double>(), p.at(1).get<double>(),
                          p.at(2).get<double>());
  }
  if (j.contains("weights")) c.weights = j.at("weights").get<std::vector<double>>();
  c.validate();
  return c;
}

}  // namespace

std::string patch_to_json(const SurfacePatch& patch) {
  json j;
  j["type"] = "patch";
  j["degree_u"] = patch.basis_u.degree;
  j["degree_v"] = patch.basis_v.degree;
  j["knots_u"] = patch.basis_u.knots;
  j["knots_v"] = patch.basis_v.knots;
  json pts = json::array();
  for (const Vector3& p : patch.points) pts.push_back({p.x(), p.y(), p.z()});
  j["control_points"] = pts;
  if (!patch.weights.empty()) j["weights"] = patch.weights;
  return j.dump(2);
}

std::string coons_to_json(const CoonsBoundary& boundary) {
  json j;
  j["type"] = "coons";
  j["top"] = curve_to_json_obj(boundary.top);
  j["bottom"] = curve_to_json_obj(boundary.bottom);
  j["left"] = curve_to_json_obj(boundary.left);
  j["right"] = curve_to_json_obj(boundary.right);
  return j.dump(2);
}

GeometryFile parse_geometry_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(std::string("geometry JSON: ") + e.what());
  }
  GeometryFile out;
  const std::string type = j.at("type").get<std::string>();
  if (type == "patch") {
    out.is_coons = false;
    out.patch.basis_u.degree = j.at("degree_u").get<int>();
    out.patch.basis_v.degree = j.at("degree_v").get<int>();
    out.patch.basis_u.knots = j.at("knots_u").get<std::vector<double>>();
    out.patch.basis_v.knots = j.at("knots_v").get<std::vector<double>>();
    for (const auto& p : j.at("control_points")) {
      out.patch.points.emplace_back(p.at(0).get<double>(), p.at(1).get<double>(),
                                    p.at(2).get<double>());
    }
    if (j.contains("weights")) {
      out.patch.weights = j.at("weights").get<std::vector<double>>();
    }
    out.patch.validate();
  } else if (type == "coons") {
    out.is_coons = true;
    out.boundary.top = curve_from_json(j.at("top"));
    out.boundary.bottom = curve_from_json(j.at("bottom"));
    out.boundary.left = curve_from_json(j.at("left"));
    out.boundary.right = curve_from_json(j.at("right"));
    out.patch = coons_patch(out.boundary);
  } else {
    throw std::runtime_error("geometry JSON: unknown type '" + type + "'");
  }
  return out;
}

GeometryFile load_geometry_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_geometry_json(ss.str());
}

void save_geometry_json(const std::string& json_text, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << json_text << '\n';
}

}  // namespace semshell

#pragma once

#include <string>

#include "semshell/coons.hpp"
#include "semshell/nurbs.hpp"

namespace semshell {

/// Geometry file content: either a surface patch directly or four boundary
/// curves from which a Coons patch is built.
struct GeometryFile {
  bool is_coons = false;
  SurfacePatch patch;       // always usable (built from the boundary if needed)
  CoonsBoundary boundary;   // only meaningful when is_coons
};

/// JSON schema, documented in the README:
///   patch: {"type":"patch", "degree_u", "degree_v", "knots_u": [...],
///           "knots_v": [...], "control_points": [[x,y,z], ...] row-major
///           with the u index fastest, "weights": [...] (optional)}
///   coons: {"type":"coons", "top"|"bottom"|"left"|"right":
///           {"degree", "knots", "control_points", "weights"(optional)}}
GeometryFile load_geometry_json(const std::string& path);
GeometryFile parse_geometry_json(const std::string& text);

std::string patch_to_json(const SurfacePatch& patch);
std::string coons_to_json(const CoonsBoundary& boundary);
void save_geometry_json(const std::string& json_text, const std::string& path);

}  // namespace semshell

#pragma once

#include <vector>

#include "semshell/nurbs.hpp"
#include "semshell/rotation.hpp"

namespace semshell {

enum class MeshScenario { EvenlySpaced, CadAligned, Custom };

/// Axis-aligned element rectangles tiling the parametric domain, given by
/// the border coordinates per direction (normalized to [0,1]).
struct MeshLayout {
  std::vector<double> borders_u;  // size = elements_u + 1
  std::vector<double> borders_v;
  MeshScenario scenario = MeshScenario::EvenlySpaced;

  int elements_u() const { return int(borders_u.size()) - 1; }
  int elements_v() const { return int(borders_v.size()) - 1; }
  void validate() const;
};

MeshLayout evenly_spaced_layout(int elements_u, int elements_v);

/// Element borders at the patch's interior CAD knots, refined to the
/// requested element count by even subdivision of the knot spans. A single
/// leftover subdivision goes to the middle span, pairs are handed to the
/// outermost spans first.
MeshLayout cad_aligned_layout(const SurfacePatch& patch, int elements_u,
                              int elements_v);

MeshLayout custom_layout(std::vector<double> borders_u,
                         std::vector<double> borders_v);

std::vector<double> subdivide_spans(const std::vector<double>& base,
                                    int target_spans);

struct ShellNode {
  Vector3 position;       // exact midsurface point
  Vector3 director;       // unit normal of the undeformed surface
  NodalFrame frame;       // reference triad, frame.ref.col(2) == director
  Eigen::Vector2d uv;     // patch parameters
  // Exact surface data used by the non-isoparametric formulation.
  Vector3 xu, xv;         // surface derivatives at uv
  Vector3 dir_u, dir_v;   // director derivatives at uv
  bool intersection = false;
};

struct SpectralElement {
  int order = 0;
  std::vector<int> nodes;  // (p+1)^2 global ids, row-major in (xi1, xi2)
  double u0 = 0, u1 = 1, v0 = 0, v1 = 1;  // parametric rectangle

  int num_nodes() const { return (order + 1) * (order + 1); }
};

enum class Side { UMin, UMax, VMin, VMax };

struct ShellMesh {
  std::vector<ShellNode> nodes;
  std::vector<SpectralElement> elements;
  MeshLayout layout;
  int order = 0;

  std::vector<int> nodes_on_side(Side side) const;
  /// (element index, local edge side) pairs along a mesh boundary.
  std::vector<std::pair<int, Side>> element_edges_on_side(Side side) const;
  /// Global node nearest to the parametric point.
  int node_at(double u, double v) const;
};

/// Places the (p+1)^2 GLL nodes of every element through the element
/// rectangle onto the exact surface. Nodes shared between elements get one
/// global index; positions, directors and frames are evaluated from the
/// patch, never interpolated.
ShellMesh place_nodes(const SurfacePatch& patch, const MeshLayout& layout,
                      int order);

}  // namespace semshell

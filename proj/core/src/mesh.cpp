#include "semshell/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "semshell/gll.hpp"

namespace semshell {

void MeshLayout::validate() const {
  auto check = [](const std::vector<double>& b, const char* name) {
    if (b.size() < 2) throw std::invalid_argument(std::string("layout: need at least one span in ") + name);
    if (b.front() != 0.0 || b.back() != 1.0) {
      throw std::invalid_argument(std::string("layout: borders must span [0,1] in ") + name);
    }
    for (size_t i = 1; i < b.size(); ++i) {
      if (b[i] <= b[i - 1]) {
        throw std::invalid_argument(std::string("layout: borders must be strictly increasing in ") + name);
      }
    }
  };
  check(borders_u, "u");
  check(borders_v, "v");
}

MeshLayout evenly_spaced_layout(int mu, int mv) {
  MeshLayout l;
  l.scenario = MeshScenario::EvenlySpaced;
  l.borders_u.resize(mu + 1);
  l.borders_v.resize(mv + 1);
  for (int i = 0; i <= mu; ++i) l.borders_u[i] = double(i) / mu;
  for (int j = 0; j <= mv; ++j) l.borders_v[j] = double(j) / mv;
  l.borders_u.back() = 1.0;
  l.borders_v.back() = 1.0;
  l.validate();
  return l;
}

std::vector<double> subdivide_spans(const std::vector<double>& base,
                                    int target) {
  const int k = int(base.size()) - 1;
  if (target < k) {
    throw std::invalid_argument("subdivide_spans: fewer elements than base spans");
  }
  std::vector<int> counts(k, target / k);
  int rem = target % k;
  if (rem % 2 == 1) {
    counts[k / 2] += 1;
    --rem;
  }
  // Remaining pairs go to the outermost spans first, then move inwards.
  for (int t = 0; rem >= 2; ++t, rem -= 2) {
    counts[t] += 1;
    counts[k - 1 - t] += 1;
  }
  std::vector<double> out;
  out.reserve(target + 1);
  out.push_back(base.front());
  for (int s = 0; s < k; ++s) {
    for (int c = 1; c <= counts[s]; ++c) {
      const double t = double(c) / counts[s];
      out.push_back(c == counts[s] ? base[s + 1]
                                   : base[s] * (1.0 - t) + base[s + 1] * t);
    }
  }
  return out;
}

namespace {

std::vector<double> normalized_knot_borders(const KnotVector& kv) {
  std::vector<double> b;
  b.push_back(0.0);
  const double lo = kv.front(), hi = kv.back();
  for (double t : kv.interior_knots()) b.push_back((t - lo) / (hi - lo));
  b.push_back(1.0);
  return b;
}

}  // namespace

MeshLayout cad_aligned_layout(const SurfacePatch& patch, int mu, int mv) {
  MeshLayout l;
  l.scenario = MeshScenario::CadAligned;
  l.borders_u = subdivide_spans(normalized_knot_borders(patch.basis_u), mu);
  l.borders_v = subdivide_spans(normalized_knot_borders(patch.basis_v), mv);
  l.validate();
  return l;
}

MeshLayout custom_layout(std::vector<double> bu, std::vector<double> bv) {
  MeshLayout l;
  l.scenario = MeshScenario::Custom;
  l.borders_u = std::move(bu);
  l.borders_v = std::move(bv);
  l.validate();
  return l;
}

std::vector<int> ShellMesh::nodes_on_side(Side side) const {
  std::vector<int> out;
  for (int n = 0; n < int(nodes.size()); ++n) {
    const Eigen::Vector2d& uv = nodes[n].uv;
    const bool hit = (side == Side::UMin && uv[0] == 0.0) ||
                     (side == Side::UMax && uv[0] == 1.0) ||
                     (side == Side::VMin && uv[1] == 0.0) ||
                     (side == Side::VMax && uv[1] == 1.0);
    if (hit) out.push_back(n);
  }
  return out;
}

std::vector<std::pair<int, Side>> ShellMesh::element_edges_on_side(Side side) const {
  std::vector<std::pair<int, Side>> out;
  for (int e = 0; e < int(elements.size()); ++e) {
    const SpectralElement& el = elements[e];
    if (side == Side::UMin && el.u0 == 0.0) out.emplace_back(e, Side::UMin);
    if (side == Side::UMax && el.u1 == 1.0) out.emplace_back(e, Side::UMax);
    if (side == Side::VMin && el.v0 == 0.0) out.emplace_back(e, Side::VMin);
    if (side == Side::VMax && el.v1 == 1.0) out.emplace_back(e, Side::VMax);
  }
  return out;
}

int ShellMesh::node_at(double u, double v) const {
  int best = -1;
  double best_d = std::numeric_limits<double>::max();
  for (int n = 0; n < int(nodes.size()); ++n) {
    const double d = (nodes[n].uv - Eigen::Vector2d(u, v)).norm();
    if (d < best_d) {
      best_d = d;
      best = n;
    }
  }
  return best;
}

ShellMesh place_nodes(const SurfacePatch& patch, const MeshLayout& layout,
                      int order) {
  layout.validate();
  patch.validate();
  const GllRule& rule = gll_rule(order);
  const int n1 = order + 1;
  const double ulo = patch.basis_u.front(), uhi = patch.basis_u.back();
  const double vlo = patch.basis_v.front(), vhi = patch.basis_v.back();

  ShellMesh mesh;
  mesh.layout = layout;
  mesh.order = order;

  // Shared nodes must map to one global index. The convex-combination map
  // yields bit-identical parameters from both sides of a shared border, so
  // exact keys are sufficient.
  std::map<std::pair<double, double>, int> index;

  for (int ev = 0; ev < layout.elements_v(); ++ev) {
    for (int eu = 0; eu < layout.elements_u(); ++eu) {
      SpectralElement el;
      el.order = order;
      el.u0 = layout.borders_u[eu];
      el.u1 = layout.borders_u[eu + 1];
      el.v0 = layout.borders_v[ev];
      el.v1 = layout.borders_v[ev + 1];
      el.nodes.resize(size_t(n1) * n1);
      for (int j = 0; j < n1; ++j) {
        const double tv = 0.5 * (rule.nodes[j] + 1.0);
        const double v = el.v0 * (1.0 - tv) + el.v1 * tv;
        for (int i = 0; i < n1; ++i) {
          const double tu = 0.5 * (rule.nodes[i] + 1.0);
          const double u = el.u0 * (1.0 - tu) + el.u1 * tu;
          auto [it, inserted] = index.try_emplace({u, v}, int(mesh.nodes.size()));
          if (inserted) {
            ShellNode node;
            node.uv = {u, v};
            const double pu = ulo + u * (uhi - ulo);
            const double pv = vlo + v * (vhi - vlo);
            const SurfaceJet jet = surface_eval(patch, pu, pv);
            const DirectorJet dj = director_jet(jet);
            node.position = jet.x;
            node.director = dj.d;
            // Chain rule for the [0,1] normalization of the patch domain.
            node.xu = jet.xu * (uhi - ulo);
            node.xv = jet.xv * (vhi - vlo);
            node.dir_u = dj.du * (uhi - ulo);
            node.dir_v = dj.dv * (vhi - vlo);
            const Vector3 g1 = node.xu;
            node.frame = nodal_frame(node.xv, node.director, &g1, false);
            mesh.nodes.push_back(std::move(node));
          }
          el.nodes[size_t(j) * n1 + i] = it->second;
        }
      }
      mesh.elements.push_back(std::move(el));
    }
  }
  return mesh;
}

}  // namespace semshell

#include "semshell/assembly.hpp"

#include <vector>

namespace semshell {

AssembledSystem assemble(const ShellModel& model, const DofMap& map,
                         const ModelState& state,
                         const AssemblyOptions& options) {
  AssembledSystem sys;
  sys.dense = options.dense;
  const int nf = map.free_count();
  sys.residual = Eigen::VectorXd::Zero(nf);

  std::vector<Eigen::Triplet<double>> triplets;
  if (options.dense) {
    sys.k_dense = Eigen::MatrixXd::Zero(nf, nf);
  } else {
    // Rough upper bound: every element couples all of its dofs.
    size_t nnz = 0;
    for (const SpectralElement& el : model.mesh.elements) {
      const size_t nd = el.nodes.size() * 6;
      nnz += nd * nd;
    }
    triplets.reserve(nnz);
  }

  ElementOptions eopts;
  eopts.formulation = model.formulation;
  eopts.use_cross_pattern = options.use_cross_pattern;
  eopts.load_scale = options.load_scale;
  ElementAssembler assembler(model.mesh, model.material, eopts);
  assembler.set_surface_load(model.surface_load);
  for (const EdgeTraction& t : model.edge_tractions) assembler.add_edge_traction(t);

  for (int e = 0; e < int(model.mesh.elements.size()); ++e) {
    const ElementMatrices em =
        assembler.compute(e, state.displacement(), state.rotation());
    sys.mults += em.mults;
    const Eigen::VectorXd f_res = em.residual();
    const SpectralElement& el = model.mesh.elements[e];
    const std::vector<int> off = assembler.dof_offsets(e);

    // Scatter. Element-local dof -> full dof -> free dof.
    std::vector<int> full(f_res.size());
    for (size_t a = 0; a < el.nodes.size(); ++a) {
      const int g = el.nodes[a];
      const int w = map.node_width(g);
      for (int k = 0; k < w; ++k) full[off[a] + k] = map.full_index(g, k);
    }
    for (int r = 0; r < f_res.size(); ++r) {
      const int fr = map.free_index(full[r]);
      if (fr < 0) continue;
      sys.residual[fr] += f_res[r];
      if (!options.tangent) continue;
      for (int c = 0; c < f_res.size(); ++c) {
        const int fc = map.free_index(full[c]);
        if (fc < 0) continue;
        const double v = em.k_e(r, c) + em.k_g(r, c);
        if (options.dense) {
          sys.k_dense(fr, fc) += v;
        } else {
          triplets.emplace_back(fr, fc, v);
        }
      }
    }
  }

  for (const PointLoad& pl : model.point_loads) {
    for (int k = 0; k < 3; ++k) {
      const int fr = map.free_index(map.full_index(pl.node, k));
      if (fr >= 0) sys.residual[fr] += options.load_scale * pl.force[k];
    }
  }

  if (!options.dense && options.tangent) {
    sys.k_sparse.resize(nf, nf);
    sys.k_sparse.setFromTriplets(triplets.begin(), triplets.end());
    sys.k_sparse.makeCompressed();
  }
  return sys;
}

}  // namespace semshell

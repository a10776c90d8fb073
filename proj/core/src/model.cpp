#include "semshell/model.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

namespace semshell {

namespace {

int dominant_axis(const Vector3& n) {
  int axis = 0;
  for (int k = 1; k < 3; ++k) {
    if (std::abs(n[k]) > std::abs(n[axis])) axis = k;
  }
  if (std::abs(n[axis]) < 0.99 * n.norm()) {
    throw std::invalid_argument("edge condition: plane normal must be a global axis");
  }
  return axis;
}

}  // namespace

void apply_edge_condition(ShellModel& model, Side side, EdgeCondition cond,
                          const Vector3& normal) {
  const std::vector<int> nodes = model.mesh.nodes_on_side(side);
  if (nodes.empty()) throw std::invalid_argument("edge condition: no nodes on side");

  for (int n : nodes) {
    const ShellNode& node = model.mesh.nodes[n];
    const int rot_dofs = node.intersection ? 3 : 2;
    switch (cond) {
      case EdgeCondition::Clamped:
        for (int k = 0; k < 3 + rot_dofs; ++k) model.constraints.push_back({n, k, 0.0});
        break;
      case EdgeCondition::SymmetryPlane: {
        const int axis = dominant_axis(normal);
        model.constraints.push_back({n, axis, 0.0});
        if (node.intersection) {
          // Rotations about both in-plane axes vanish on the plane.
          for (int k = 0; k < 3; ++k) {
            if (k != axis) model.constraints.push_back({n, 3 + k, 0.0});
          }
        } else {
          // The nodal rotation axis most orthogonal to the normal is the
          // in-plane tangent; rotation about it is blocked by symmetry.
          const double a1 = std::abs(node.frame.ref.col(0)[axis]);
          const double a2 = std::abs(node.frame.ref.col(1)[axis]);
          model.constraints.push_back({n, (a1 <= a2) ? 3 : 4, 0.0});
        }
        break;
      }
      case EdgeCondition::Diaphragm: {
        const int axis = dominant_axis(normal);
        for (int k = 0; k < 3; ++k) {
          if (k != axis) model.constraints.push_back({n, k, 0.0});
        }
        if (node.intersection) {
          model.constraints.push_back({n, 3 + axis, 0.0});
        } else {
          // Rotation within the diaphragm plane has its axis along the
          // plane normal; fix the nodal dof most parallel to it.
          const double a1 = std::abs(node.frame.ref.col(0)[axis]);
          const double a2 = std::abs(node.frame.ref.col(1)[axis]);
          model.constraints.push_back({n, (a1 >= a2) ? 3 : 4, 0.0});
        }
        break;
      }
    }
  }
}

ModelState::ModelState(const ShellModel& model) { reset(model); }

void ModelState::reset(const ShellModel& model) {
  const size_t n = model.mesh.nodes.size();
  displacement_.assign(n, Vector3::Zero());
  rotation_.clear();
  rotation_.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    rotation_.push_back(
        make_nodal_rotation(model.mesh.nodes[i].frame, Vector3::Zero()));
  }
}

double ModelState::dof_value(const DofMap& map, int full) const {
  // Locate the owning node by offset.
  int node = 0;
  for (int i = 0; full >= map.node_offset(i) + map.node_width(i); ++i) node = i + 1;
  const int local = full - map.node_offset(node);
  if (local < 3) return displacement_[node][local];
  return 0.0;  // rotational dofs are incremental; no accumulated beta exists
}

bool ModelState::apply_increment(
    const ShellModel& model, const Eigen::Ref<const Eigen::VectorXd>& delta) {
  bool warn = false;
  int offset = 0;
  for (size_t n = 0; n < displacement_.size(); ++n) {
    const int rot_dofs = rotation_[n].rot_dofs;
    displacement_[n] += delta.segment(offset, 3);
    warn |= update_rotation(rotation_[n], model.mesh.nodes[n].frame,
                            delta.segment(offset + 3, rot_dofs));
    offset += 3 + rot_dofs;
  }
  if (offset != delta.size()) {
    throw std::invalid_argument("apply_increment: increment size mismatch");
  }
  return warn;
}

void write_solution_csv(const ShellModel& model, const ModelState& state,
                        const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << "node,X1,X2,X3,u1,u2,u3,w1,w2,w3,d1,d2,d3\n";
  for (size_t n = 0; n < model.mesh.nodes.size(); ++n) {
    const ShellNode& nd = model.mesh.nodes[n];
    const Vector3& u = state.displacement()[n];
    const Vector3& w = state.rotation()[n].omega;
    const Vector3& d = state.rotation()[n].director;
    out.precision(17);
    out << n << ',' << nd.position.x() << ',' << nd.position.y() << ','
        << nd.position.z() << ',' << u.x() << ',' << u.y() << ',' << u.z()
        << ',' << w.x() << ',' << w.y() << ',' << w.z() << ',' << d.x() << ','
        << d.y() << ',' << d.z() << '\n';
  }
}

void write_integration_point_csv(const ShellModel& model,
                                 const ModelState& state,
                                 const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << "element,q,xi1,xi2,eps11,eps22,eps12x2,kap11,kap22,kap12x2,gam1,gam2,"
         "n11,n22,n12,m11,m22,m12,q1,q2\n";
  ElementOptions opts;
  opts.formulation = model.formulation;
  ElementAssembler assembler(model.mesh, model.material, opts);
  out.precision(17);
  for (int e = 0; e < int(model.mesh.elements.size()); ++e) {
    for (const IntegrationPointRecord& rec : assembler.integration_point_data(
             e, state.displacement(), state.rotation())) {
      out << rec.element << ',' << rec.q << ',' << rec.xi1 << ',' << rec.xi2;
      for (int k = 0; k < 8; ++k) out << ',' << rec.strain[k];
      for (int k = 0; k < 8; ++k) out << ',' << rec.stress[k];
      out << '\n';
    }
  }
}

}  // namespace semshell

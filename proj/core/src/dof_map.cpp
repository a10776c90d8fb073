#include "semshell/dof_map.hpp"

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

namespace semshell {

DofMap DofMap::build(const ShellMesh& mesh,
                     const std::vector<Constraint>& constraints) {
  DofMap m;
  const int n = int(mesh.nodes.size());
  m.widths_.resize(n);
  m.offsets_.resize(n);
  int total = 0;
  for (int i = 0; i < n; ++i) {
    m.widths_[i] = mesh.nodes[i].intersection ? 6 : 5;
    m.offsets_[i] = total;
    total += m.widths_[i];
  }
  m.total_ = total;
  m.free_index_.assign(total, 0);
  m.prescribed_.assign(total, 0.0);

  std::map<int, double> fixed;
  for (const Constraint& c : constraints) {
    if (c.node < 0 || c.node >= n) {
      throw std::invalid_argument("constraint references unknown node " +
                                  std::to_string(c.node));
    }
    if (c.local_dof < 0 || c.local_dof >= m.widths_[c.node]) {
      throw std::invalid_argument("constraint references dof " +
                                  std::to_string(c.local_dof) + " of node " +
                                  std::to_string(c.node));
    }
    const int full = m.offsets_[c.node] + c.local_dof;
    auto [it, inserted] = fixed.try_emplace(full, c.value);
    if (!inserted && std::abs(it->second - c.value) > 1e-14) {
      throw std::invalid_argument("conflicting prescriptions on node " +
                                  std::to_string(c.node) + " dof " +
                                  std::to_string(c.local_dof));
    }
  }

  int free = 0;
  for (int full = 0; full < total; ++full) {
    auto it = fixed.find(full);
    if (it != fixed.end()) {
      m.free_index_[full] = -1;
      m.prescribed_[full] = it->second;
    } else {
      m.free_index_[full] = free++;
    }
  }
  m.free_ = free;
  return m;
}

}  // namespace semshell

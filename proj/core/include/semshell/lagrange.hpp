#pragma once

#include <Eigen/Dense>
#include <vector>

#include "semshell/gll.hpp"

namespace semshell {

/// Values and first derivatives of the p+1 Lagrange cardinal functions on
/// the rule's nodes, evaluated at xi in [-1,1].
struct Lagrange1d {
  Eigen::VectorXd values;
  Eigen::VectorXd derivs;
};
Lagrange1d lagrange_1d(const GllRule& rule, double xi);

/// Tabulated 2D tensor-product shape functions at the (p+1)^2 GLL points.
///
/// Node and quadrature-point numbering is row-major in the (xi1, xi2) grid:
/// I = j*(p+1) + i for grid position (i, j). Because nodes and quadrature
/// points coincide, values(I,Q) = delta_IQ up to the signs of exact zeros.
struct ShapeTable {
  int order = 0;
  Eigen::MatrixXd values;   // N_I(xi_Q),      (p+1)^2 x (p+1)^2
  Eigen::MatrixXd derivs1;  // N_I,xi1(xi_Q)
  Eigen::MatrixXd derivs2;  // N_I,xi2(xi_Q)

  int num_nodes() const { return (order + 1) * (order + 1); }
};
const ShapeTable& shape_table_2d(int order);

/// Per quadrature point Q, the sorted indices of the nodes sharing Q's grid
/// row or column. These are exactly the nodes with a nonzero shape-function
/// value or derivative at Q; all 2p+1 of them.
struct CrossPattern {
  int order = 0;
  std::vector<std::vector<int>> members;  // members[Q], ascending

  bool contains(int q, int node) const;
};
const CrossPattern& cross_pattern(int order);

/// Evaluate the tensor-product shape functions at an arbitrary parametric
/// point. Used for geometry checks; assembly always reads the cached table.
void shape_values_at(int order, double xi1, double xi2, Eigen::VectorXd& n,
                     Eigen::VectorXd& d1, Eigen::VectorXd& d2);

}  // namespace semshell

#pragma once

#include <vector>

namespace semshell {

/// Gauss-Lobatto-Legendre quadrature rule on [-1,1].
///
/// The p+1 nodes are the roots of (1-x^2) * L_p'(x), i.e. the interval
/// endpoints plus the extrema of the Legendre polynomial of degree p.
/// The rule integrates polynomials of degree <= 2p-1 exactly.
struct GllRule {
  int order = 0;                 // polynomial order p, nodes = p+1
  std::vector<double> nodes;     // strictly increasing, nodes[0] = -1, nodes[p] = +1
  std::vector<double> weights;   // positive, sum = 2

  int num_points() const { return order + 1; }
};

inline constexpr int kMaxGllOrder = 24;

/// Legendre polynomial L_n and its first two derivatives at x.
struct LegendreEval {
  double value;
  double deriv;
  double deriv2;
};
LegendreEval legendre(int n, double x);

/// Returns the cached GLL rule of order p (1 <= p <= 24).
/// Throws std::invalid_argument outside the supported range.
const GllRule& gll_rule(int order);

}  // namespace semshell

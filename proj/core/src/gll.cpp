#include "semshell/gll.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>
#include <string>

namespace semshell {

LegendreEval legendre(int n, double x) {
  if (n == 0) return {1.0, 0.0, 0.0};
  double pm1 = 1.0;  // L_{k-1}
  double p = x;      // L_k
  for (int k = 2; k <= n; ++k) {
    const double pk = ((2 * k - 1) * x * p - (k - 1) * pm1) / k;
    pm1 = p;
    p = pk;
  }
  const double omx2 = 1.0 - x * x;
  double dp, ddp;
  if (std::abs(omx2) > 1e-13) {
    dp = n * (pm1 - x * p) / omx2;
    // Legendre ODE: (1-x^2) L'' - 2x L' + n(n+1) L = 0
    ddp = (2.0 * x * dp - double(n) * (n + 1) * p) / omx2;
  } else {
    const double sign = (x > 0.0 || n % 2 == 1) ? 1.0 : -1.0;   // sign of L_n'(x)
    dp = sign * 0.5 * n * (n + 1);
    const double sign2 = (x > 0.0 || n % 2 == 0) ? 1.0 : -1.0;  // sign of L_n''(x)
    ddp = sign2 * 0.125 * double(n - 1) * n * (n + 1) * (n + 2);
  }
  return {p, dp, ddp};
}

namespace {

GllRule compute_rule(int p) {
  GllRule rule;
  rule.order = p;
  const int n = p + 1;
  rule.nodes.assign(n, 0.0);
  rule.weights.assign(n, 0.0);

  rule.nodes[0] = -1.0;
  rule.nodes[p] = 1.0;

  // Interior nodes are the roots of L_p'. Newton iteration started from
  // Chebyshev-Gauss-Lobatto points; the symmetric partner is mirrored.
  constexpr double tol = 1e-15;
  constexpr int max_iter = 100;
  for (int i = 1; 2 * i < p; ++i) {
    double x = -std::cos(M_PI * i / p);
    for (int it = 0; it < max_iter; ++it) {
      const LegendreEval le = legendre(p, x);
      const double dx = le.deriv / le.deriv2;
      x -= dx;
      if (std::abs(dx) < tol) break;
    }
    rule.nodes[i] = x;
    rule.nodes[p - i] = -x;
  }
  if (p % 2 == 0 && p >= 2) rule.nodes[p / 2] = 0.0;

  // w_i = 2 / (p (p+1) L_p(x_i)^2), the integral of the i-th cardinal
  // function over [-1,1].
  for (int i = 0; i < n; ++i) {
    const double lp = legendre(p, rule.nodes[i]).value;
    rule.weights[i] = 2.0 / (double(p) * n * lp * lp);
  }
  return rule;
}

}  // namespace

const GllRule& gll_rule(int order) {
  if (order < 1 || order > kMaxGllOrder) {
    throw std::invalid_argument("gll_rule: order must be in [1, " +
                                std::to_string(kMaxGllOrder) + "], got " +
                                std::to_string(order));
  }
  static std::vector<GllRule> cache(kMaxGllOrder + 1);
  static std::vector<std::once_flag> flags(kMaxGllOrder + 1);
  std::call_once(flags[order], [&] { cache[order] = compute_rule(order); });
  return cache[order];
}

}  // namespace semshell

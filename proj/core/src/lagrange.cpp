#include "semshell/lagrange.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace semshell {

Lagrange1d lagrange_1d(const GllRule& rule, double xi) {
  const int n = rule.num_points();
  Lagrange1d out;
  out.values.resize(n);
  out.derivs.resize(n);
  const std::vector<double>& x = rule.nodes;
  for (int i = 0; i < n; ++i) {
    double denom = 1.0;
    for (int j = 0; j < n; ++j) {
      if (j != i) denom *= x[i] - x[j];
    }
    double num = 1.0;
    for (int j = 0; j < n; ++j) {
      if (j != i) num *= xi - x[j];
    }
    out.values[i] = num / denom;

    // d/dxi of the product: sum over the factor being differentiated.
    double dnum = 0.0;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      double term = 1.0;
      for (int k = 0; k < n; ++k) {
        if (k != i && k != j) term *= xi - x[k];
      }
      dnum += term;
    }
    out.derivs[i] = dnum / denom;
  }
  return out;
}

namespace {

ShapeTable compute_table(int p) {
  const GllRule& rule = gll_rule(p);
  const int n1 = p + 1;
  const int n = n1 * n1;

  // 1D values/derivatives of every cardinal function at every node.
  Eigen::MatrixXd v(n1, n1), d(n1, n1);  // (i, q)
  for (int q = 0; q < n1; ++q) {
    const Lagrange1d l = lagrange_1d(rule, rule.nodes[q]);
    v.col(q) = l.values;
    d.col(q) = l.derivs;
  }

  ShapeTable t;
  t.order = p;
  t.values.resize(n, n);
  t.derivs1.resize(n, n);
  t.derivs2.resize(n, n);
  for (int qj = 0; qj < n1; ++qj) {
    for (int qi = 0; qi < n1; ++qi) {
      const int q = qj * n1 + qi;
      for (int j = 0; j < n1; ++j) {
        for (int i = 0; i < n1; ++i) {
          const int node = j * n1 + i;
          t.values(node, q) = v(i, qi) * v(j, qj);
          t.derivs1(node, q) = d(i, qi) * v(j, qj);
          t.derivs2(node, q) = v(i, qi) * d(j, qj);
        }
      }
    }
  }
  return t;
}

CrossPattern compute_cross(int p) {
  const int n1 = p + 1;
  CrossPattern c;
  c.order = p;
  c.members.resize(n1 * n1);
  for (int qj = 0; qj < n1; ++qj) {
    for (int qi = 0; qi < n1; ++qi) {
      std::vector<int>& m = c.members[qj * n1 + qi];
      m.reserve(2 * p + 1);
      for (int j = 0; j < n1; ++j) {
        for (int i = 0; i < n1; ++i) {
          if (i == qi || j == qj) m.push_back(j * n1 + i);
        }
      }
    }
  }
  return c;
}

}  // namespace

bool CrossPattern::contains(int q, int node) const {
  const std::vector<int>& m = members.at(q);
  return std::binary_search(m.begin(), m.end(), node);
}

const ShapeTable& shape_table_2d(int order) {
  if (order < 1 || order > kMaxGllOrder) {
    throw std::invalid_argument("shape_table_2d: unsupported order");
  }
  static std::vector<ShapeTable> cache(kMaxGllOrder + 1);
  static std::vector<std::once_flag> flags(kMaxGllOrder + 1);
  std::call_once(flags[order], [&] { cache[order] = compute_table(order); });
  return cache[order];
}

const CrossPattern& cross_pattern(int order) {
  if (order < 1 || order > kMaxGllOrder) {
    throw std::invalid_argument("cross_pattern: unsupported order");
  }
  static std::vector<CrossPattern> cache(kMaxGllOrder + 1);
  static std::vector<std::once_flag> flags(kMaxGllOrder + 1);
  std::call_once(flags[order], [&] { cache[order] = compute_cross(order); });
  return cache[order];
}

void shape_values_at(int order, double xi1, double xi2, Eigen::VectorXd& n,
                     Eigen::VectorXd& d1, Eigen::VectorXd& d2) {
  const GllRule& rule = gll_rule(order);
  const Lagrange1d a = lagrange_1d(rule, xi1);
  const Lagrange1d b = lagrange_1d(rule, xi2);
  const int n1 = order + 1;
  n.resize(n1 * n1);
  d1.resize(n1 * n1);
  d2.resize(n1 * n1);
  for (int j = 0; j < n1; ++j) {
    for (int i = 0; i < n1; ++i) {
      const int node = j * n1 + i;
      n[node] = a.values[i] * b.values[j];
      d1[node] = a.derivs[i] * b.values[j];
      d2[node] = a.values[i] * b.derivs[j];
    }
  }
}

}  // namespace semshell

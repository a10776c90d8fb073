#include "semshell/element.hpp"

#include <numeric>
#include <stdexcept>

namespace semshell {

Vector8 shell_strains(const LocalKinematics& k) {
  Vector8 e;
  e[0] = 0.5 * (k.x1.dot(k.x1) - k.rx1.dot(k.rx1));
  e[1] = 0.5 * (k.x2.dot(k.x2) - k.rx2.dot(k.rx2));
  e[2] = k.x1.dot(k.x2) - k.rx1.dot(k.rx2);
  e[3] = k.x1.dot(k.d1) - k.rx1.dot(k.rd1);
  e[4] = k.x2.dot(k.d2) - k.rx2.dot(k.rd2);
  e[5] = k.x1.dot(k.d2) + k.x2.dot(k.d1) - k.rx1.dot(k.rd2) - k.rx2.dot(k.rd1);
  e[6] = k.x1.dot(k.d) - k.rx1.dot(k.rd);
  e[7] = k.x2.dot(k.d) - k.rx2.dot(k.rd);
  return e;
}

Eigen::Matrix<double, 8, 6> b_matrix_block(const LocalKinematics& kin,
                                           double n, double dn1, double dn2,
                                           const Matrix3& t, int rot_dofs) {
  Eigen::Matrix<double, 8, 6> b = Eigen::Matrix<double, 8, 6>::Zero();
  const int w = rot_dofs;
  Eigen::Matrix<double, 1, 3> x1t = Eigen::Matrix<double, 1, 3>::Zero();
  Eigen::Matrix<double, 1, 3> x2t = Eigen::Matrix<double, 1, 3>::Zero();
  x1t.leftCols(w) = kin.x1.transpose() * t.leftCols(w);
  x2t.leftCols(w) = kin.x2.transpose() * t.leftCols(w);

  b.block<1, 3>(0, 0) = dn1 * kin.x1.transpose();
  b.block<1, 3>(1, 0) = dn2 * kin.x2.transpose();
  b.block<1, 3>(2, 0) = dn1 * kin.x2.transpose() + dn2 * kin.x1.transpose();
  b.block<1, 3>(3, 0) = dn1 * kin.d1.transpose();
  b.block<1, 3>(4, 0) = dn2 * kin.d2.transpose();
  b.block<1, 3>(5, 0) = dn1 * kin.d2.transpose() + dn2 * kin.d1.transpose();
  b.block<1, 3>(6, 0) = dn1 * kin.d.transpose();
  b.block<1, 3>(7, 0) = dn2 * kin.d.transpose();

  b.block(3, 3, 1, w) = dn1 * x1t.leftCols(w);
  b.block(4, 3, 1, w) = dn2 * x2t.leftCols(w);
  b.block(5, 3, 1, w) = dn1 * x2t.leftCols(w) + dn2 * x1t.leftCols(w);
  b.block(6, 3, 1, w) = n * x1t.leftCols(w);
  b.block(7, 3, 1, w) = n * x2t.leftCols(w);
  return b;
}

Eigen::Matrix2d frame_jacobian(const Vector3& x_xi1, const Vector3& x_xi2,
                               const Matrix3& frame) {
  Eigen::Matrix2d j;
  j(0, 0) = x_xi1.dot(frame.col(0));
  j(0, 1) = x_xi1.dot(frame.col(1));
  j(1, 0) = x_xi2.dot(frame.col(0));
  j(1, 1) = x_xi2.dot(frame.col(1));
  return j;
}

ElementAssembler::ElementAssembler(const ShellMesh& mesh,
                                   const ShellMaterial& material,
                                   ElementOptions options)
    : mesh_(mesh), material_(material), options_(options) {
  c_matrix_ = constitutive(material_);
}

int ElementAssembler::element_dofs(int ei) const {
  int total = 0;
  for (int g : mesh_.elements[ei].nodes) {
    total += mesh_.nodes[g].intersection ? 6 : 5;
  }
  return total;
}

std::vector<int> ElementAssembler::dof_offsets(int ei) const {
  const SpectralElement& el = mesh_.elements[ei];
  std::vector<int> off(el.nodes.size());
  int total = 0;
  for (size_t a = 0; a < el.nodes.size(); ++a) {
    off[a] = total;
    total += mesh_.nodes[el.nodes[a]].intersection ? 6 : 5;
  }
  return off;
}

namespace {

struct PointScratch {
  std::vector<double> nv, dn1, dn2;
};

}  // namespace

ElementMatrices ElementAssembler::compute(
    int ei, const std::vector<Vector3>& displacement,
    const std::vector<NodalRotation>& rotation) const {
  const SpectralElement& el = mesh_.elements[ei];
  const int p = el.order;
  const ShapeTable& table = shape_table_2d(p);
  const CrossPattern& cross = cross_pattern(p);
  const GllRule& rule = gll_rule(p);
  const int n1 = p + 1;
  const int n_en = n1 * n1;
  const bool semi = options_.formulation == Formulation::Isoparametric;

  std::vector<int> off(n_en), width(n_en);
  int total = 0;
  for (int a = 0; a < n_en; ++a) {
    width[a] = mesh_.nodes[el.nodes[a]].intersection ? 6 : 5;
    off[a] = total;
    total += width[a];
  }

  ElementMatrices out;
  out.k_e = Eigen::MatrixXd::Zero(total, total);
  out.k_g = Eigen::MatrixXd::Zero(total, total);
  out.f_int = Eigen::VectorXd::Zero(total);
  out.f_s = Eigen::VectorXd::Zero(total);
  out.f_l = Eigen::VectorXd::Zero(total);
  MultCounters& mc = out.mults;

  std::vector<int> all(n_en);
  std::iota(all.begin(), all.end(), 0);

  PointScratch scratch;
  scratch.nv.assign(n_en, 0.0);
  scratch.dn1.assign(n_en, 0.0);
  scratch.dn2.assign(n_en, 0.0);

  std::vector<Eigen::Matrix<double, 8, 6>> b_blocks(n_en);
  std::vector<Eigen::Matrix<double, 8, 6>> cb_blocks(n_en);
  std::vector<double> s1(n_en), s2(n_en), t1(n_en), t2(n_en), uq(n_en);

  const Vector3 pbar = options_.load_scale * surface_load_;

  for (int q = 0; q < n_en; ++q) {
    const std::vector<int>& set =
        options_.use_cross_pattern ? cross.members[q] : all;
    const int qi = q % n1;
    const int qj = q / n1;
    const ShellNode& qnode = mesh_.nodes[el.nodes[q]];
    const Matrix3& aframe = qnode.frame.ref;

    // ---- Jacobian to the local frame and the reference area density.
    Eigen::Matrix2d jac;
    double darea;
    LocalKinematics kin;
    if (semi) {
      Vector3 xi1 = Vector3::Zero(), xi2 = Vector3::Zero();
      for (int a : set) {
        const Vector3& xr = mesh_.nodes[el.nodes[a]].position;
        xi1 += table.derivs1(a, q) * xr;
        xi2 += table.derivs2(a, q) * xr;
      }
      mc.k_e += 6 * set.size();
      darea = xi1.cross(xi2).norm();
      jac = frame_jacobian(xi1, xi2, aframe);
      mc.k_e += 21;  // cross 6, norm 3, jacobian 12
    } else {
      Eigen::Matrix2d j1 = frame_jacobian(qnode.xu, qnode.xv, aframe);
      const double su = 0.5 * (el.u1 - el.u0);
      const double sv = 0.5 * (el.v1 - el.v0);
      jac.row(0) = su * j1.row(0);
      jac.row(1) = sv * j1.row(1);
      const double det_j2 = su * sv;
      darea = qnode.xu.cross(qnode.xv).norm() * det_j2;
      mc.k_e += 30;  // jacobian 12, scalings 7, cross+norm 9, area scale 2
    }
    const double det = jac(0, 0) * jac(1, 1) - jac(0, 1) * jac(1, 0);
    if (std::abs(det) < 1e-14) {
      throw std::runtime_error("element " + std::to_string(ei) +
                               ": degenerate Jacobian at integration point " +
                               std::to_string(q));
    }
    const double idet = 1.0 / det;
    const double iv00 = jac(1, 1) * idet, iv01 = -jac(0, 1) * idet;
    const double iv10 = -jac(1, 0) * idet, iv11 = jac(0, 0) * idet;
    const double w_da = rule.weights[qi] * rule.weights[qj] * darea;
    mc.k_e += 9;  // det 2, inverse 5, weight 2

    // ---- Transformed derivatives and interpolated fields.
    for (int a : set) {
      const double d1 = table.derivs1(a, q), d2 = table.derivs2(a, q);
      scratch.dn1[a] = iv00 * d1 + iv01 * d2;
      scratch.dn2[a] = iv10 * d1 + iv11 * d2;
      scratch.nv[a] = table.values(a, q);
    }
    mc.k_e += 4 * set.size();

    kin.rd = qnode.director;
    if (semi) {
      kin.rx1.setZero();
      kin.rx2.setZero();
      kin.rd1.setZero();
      kin.rd2.setZero();
      for (int a : set) {
        const ShellNode& nd = mesh_.nodes[el.nodes[a]];
        kin.rx1 += scratch.dn1[a] * nd.position;
        kin.rx2 += scratch.dn2[a] * nd.position;
        kin.rd1 += scratch.dn1[a] * nd.director;
        kin.rd2 += scratch.dn2[a] * nd.director;
      }
      mc.k_e += 12 * set.size();
    } else {
      kin.rx1 = aframe.col(0);
      kin.rx2 = aframe.col(1);
      const double su = 0.5 * (el.u1 - el.u0);
      const double sv = 0.5 * (el.v1 - el.v0);
      const Vector3 dxi1 = su * qnode.dir_u;
      const Vector3 dxi2 = sv * qnode.dir_v;
      kin.rd1 = iv00 * dxi1 + iv01 * dxi2;
      kin.rd2 = iv10 * dxi1 + iv11 * dxi2;
      mc.k_e += 18;
    }
    kin.x1 = kin.rx1;
    kin.x2 = kin.rx2;
    kin.d = kin.rd;
    kin.d1 = kin.rd1;
    kin.d2 = kin.rd2;
    for (int a : set) {
      const int g = el.nodes[a];
      const Vector3 ddiff = rotation[g].director - mesh_.nodes[g].director;
      kin.x1 += scratch.dn1[a] * displacement[g];
      kin.x2 += scratch.dn2[a] * displacement[g];
      kin.d += scratch.nv[a] * ddiff;
      kin.d1 += scratch.dn1[a] * ddiff;
      kin.d2 += scratch.dn2[a] * ddiff;
    }
    mc.k_e += 15 * set.size();

    // ---- Strains and weighted stress resultants.
    const Vector8 strain = shell_strains(kin);
    Vector8 stress;
    stress.head<3>() = c_matrix_.block<3, 3>(0, 0) * strain.head<3>();
    stress.segment<3>(3) = c_matrix_.block<3, 3>(3, 3) * strain.segment<3>(3);
    stress.tail<2>() = c_matrix_.block<2, 2>(6, 6) * strain.tail<2>();
    const Vector8 stress_w = w_da * stress;
    mc.k_g += 86;  // strain dots 56, constitutive 22, weighting 8

    // ---- Per-node blocks.
    for (int a : set) {
      const int g = el.nodes[a];
      const NodalRotation& rot = rotation[g];
      const int w = width[a];
      const int wr = w - 3;

      b_blocks[a] = b_matrix_block(kin, scratch.nv[a], scratch.dn1[a],
                                   scratch.dn2[a], rot.t, wr);
      mc.k_e += 30 + 12 * wr;

      cb_blocks[a].leftCols(w).topRows<3>() =
          c_matrix_.block<3, 3>(0, 0) * b_blocks[a].leftCols(w).topRows<3>();
      cb_blocks[a].leftCols(w).middleRows<3>(3) =
          c_matrix_.block<3, 3>(3, 3) * b_blocks[a].leftCols(w).middleRows<3>(3);
      cb_blocks[a].leftCols(w).bottomRows<2>() =
          c_matrix_.block<2, 2>(6, 6) * b_blocks[a].leftCols(w).bottomRows<2>();
      cb_blocks[a].leftCols(w) *= w_da;
      mc.k_e += 30 * w;  // constitutive blocks 22 w, weighting 8 w

      out.f_int.segment(off[a], w) +=
          b_blocks[a].leftCols(w).transpose() * stress_w;

      if (!pbar.isZero()) {
        out.f_s.segment(off[a], 3) += (scratch.nv[a] * w_da) * pbar;
      }

      // Geometric-stiffness node factors.
      s1[a] = stress_w[0] * scratch.dn1[a] + stress_w[2] * scratch.dn2[a];
      s2[a] = stress_w[2] * scratch.dn1[a] + stress_w[1] * scratch.dn2[a];
      t1[a] = stress_w[3] * scratch.dn1[a] + stress_w[5] * scratch.dn2[a];
      t2[a] = stress_w[5] * scratch.dn1[a] + stress_w[4] * scratch.dn2[a];
      uq[a] = stress_w[6] * scratch.dn1[a] + stress_w[7] * scratch.dn2[a];
      mc.k_g += 10;

      // Rotational diagonal block via the combined moment-shear vector.
      const double hc1 = t1[a] + stress_w[6] * scratch.nv[a];
      const double hc2 = t2[a] + stress_w[7] * scratch.nv[a];
      const Vector3 hvec = hc1 * kin.x1 + hc2 * kin.x2;
      const Matrix3 m_hat = m_matrix(rot.director, rot.omega, rot.coeffs, hvec);
      const auto ht3 = rot.h_t3.leftCols(wr);
      out.k_g.block(off[a] + 3, off[a] + 3, wr, wr) +=
          ht3.transpose() * (m_hat * ht3);
      mc.k_g += 8 + 74 + 9 * wr + 3 * wr * wr;
    }

    // ---- Pair loops.
    for (int a : set) {
      const int wa = width[a];
      for (int k : set) {
        const int wk = width[k];
        out.k_e.block(off[a], off[k], wa, wk) +=
            b_blocks[a].leftCols(wa).transpose() * cb_blocks[k].leftCols(wk);
        mc.k_e += std::uint64_t(8) * wa * wk;

        const double n_hat = s1[a] * scratch.dn1[k] + s2[a] * scratch.dn2[k];
        const double m_hat = t1[a] * scratch.dn1[k] + t2[a] * scratch.dn2[k];
        const double q_hat = uq[a] * scratch.nv[k];
        const double q_tld = scratch.nv[a] * uq[k];
        out.k_g.block(off[a], off[k], 3, 3).diagonal().array() += n_hat;
        out.k_g.block(off[a], off[k] + 3, 3, wk - 3) +=
            (m_hat + q_hat) * rotation[el.nodes[k]].t.leftCols(wk - 3);
        out.k_g.block(off[a] + 3, off[k], wa - 3, 3) +=
            (m_hat + q_tld) * rotation[el.nodes[a]].t.leftCols(wa - 3).transpose();
        mc.k_g += 6 + 3 * (wk - 3) + 3 * (wa - 3);
      }
    }
  }

  integrate_edge_loads(ei, out);
  return out;
}

void ElementAssembler::integrate_edge_loads(int ei, ElementMatrices& out) const {
  if (edge_tractions_.empty()) return;
  const SpectralElement& el = mesh_.elements[ei];
  const int p = el.order;
  const int n1 = p + 1;
  const GllRule& rule = gll_rule(p);
  const bool semi = options_.formulation == Formulation::Isoparametric;
  const std::vector<int> off = dof_offsets(ei);

  // 1D derivative matrix d l_m / d xi at the rule nodes.
  Eigen::MatrixXd d1d(n1, n1);
  for (int q = 0; q < n1; ++q) {
    d1d.col(q) = lagrange_1d(rule, rule.nodes[q]).derivs;
  }

  for (const EdgeTraction& tr : edge_tractions_) {
    const bool on_side = (tr.side == Side::UMin && el.u0 == 0.0) ||
                         (tr.side == Side::UMax && el.u1 == 1.0) ||
                         (tr.side == Side::VMin && el.v0 == 0.0) ||
                         (tr.side == Side::VMax && el.v1 == 1.0);
    if (!on_side) continue;

    const bool along_u = (tr.side == Side::VMin || tr.side == Side::VMax);
    std::vector<int> local(n1);
    for (int m = 0; m < n1; ++m) {
      switch (tr.side) {
        case Side::UMin: local[m] = m * n1; break;
        case Side::UMax: local[m] = m * n1 + p; break;
        case Side::VMin: local[m] = m; break;
        case Side::VMax: local[m] = p * n1 + m; break;
      }
    }
    const Vector3 t_scaled = options_.load_scale * tr.value;
    for (int q = 0; q < n1; ++q) {
      double ds;
      if (semi) {
        Vector3 tangent = Vector3::Zero();
        for (int m = 0; m < n1; ++m) {
          tangent += d1d(m, q) * mesh_.nodes[el.nodes[local[m]]].position;
        }
        ds = tangent.norm();
      } else {
        const ShellNode& nd = mesh_.nodes[el.nodes[local[q]]];
        ds = along_u ? (0.5 * (el.u1 - el.u0) * nd.xu).norm()
                     : (0.5 * (el.v1 - el.v0) * nd.xv).norm();
      }
      out.f_l.segment(off[local[q]], 3) += (rule.weights[q] * ds) * t_scaled;
    }
  }
}

std::vector<IntegrationPointRecord> ElementAssembler::integration_point_data(
    int ei, const std::vector<Vector3>& displacement,
    const std::vector<NodalRotation>& rotation) const {
  // Diagnostics reuse the stiffness path; strains and stresses are
  // recomputed here from the same kinematics.
  const SpectralElement& el = mesh_.elements[ei];
  const int p = el.order;
  const ShapeTable& table = shape_table_2d(p);
  const GllRule& rule = gll_rule(p);
  const int n1 = p + 1;
  const int n_en = n1 * n1;
  const bool semi = options_.formulation == Formulation::Isoparametric;

  std::vector<IntegrationPointRecord> records;
  records.reserve(n_en);
  for (int q = 0; q < n_en; ++q) {
    const int qi = q % n1;
    const int qj = q / n1;
    const ShellNode& qnode = mesh_.nodes[el.nodes[q]];
    const Matrix3& aframe = qnode.frame.ref;

    Eigen::Matrix2d jac;
    LocalKinematics kin;
    if (semi) {
      Vector3 xi1 = Vector3::Zero(), xi2 = Vector3::Zero();
      for (int a = 0; a < n_en; ++a) {
        const Vector3& xr = mesh_.nodes[el.nodes[a]].position;
        xi1 += table.derivs1(a, q) * xr;
        xi2 += table.derivs2(a, q) * xr;
      }
      jac = frame_jacobian(xi1, xi2, aframe);
    } else {
      Eigen::Matrix2d j1 = frame_jacobian(qnode.xu, qnode.xv, aframe);
      jac.row(0) = 0.5 * (el.u1 - el.u0) * j1.row(0);
      jac.row(1) = 0.5 * (el.v1 - el.v0) * j1.row(1);
    }
    const double det = jac(0, 0) * jac(1, 1) - jac(0, 1) * jac(1, 0);
    const double idet = 1.0 / det;
    const double iv00 = jac(1, 1) * idet, iv01 = -jac(0, 1) * idet;
    const double iv10 = -jac(1, 0) * idet, iv11 = jac(0, 0) * idet;

    kin.rd = qnode.director;
    if (semi) {
      kin.rx1.setZero();
      kin.rx2.setZero();
      kin.rd1.setZero();
      kin.rd2.setZero();
    } else {
      kin.rx1 = aframe.col(0);
      kin.rx2 = aframe.col(1);
      const Vector3 dxi1 = 0.5 * (el.u1 - el.u0) * qnode.dir_u;
      const Vector3 dxi2 = 0.5 * (el.v1 - el.v0) * qnode.dir_v;
      kin.rd1 = iv00 * dxi1 + iv01 * dxi2;
      kin.rd2 = iv10 * dxi1 + iv11 * dxi2;
    }
    kin.x1.setZero();
    kin.x2.setZero();
    kin.d.setZero();
    kin.d1.setZero();
    kin.d2.setZero();
    for (int a = 0; a < n_en; ++a) {
      const int g = el.nodes[a];
      const double d1 = table.derivs1(a, q), d2 = table.derivs2(a, q);
      const double dn1 = iv00 * d1 + iv01 * d2;
      const double dn2 = iv10 * d1 + iv11 * d2;
      const Vector3 ddiff = rotation[g].director - mesh_.nodes[g].director;
      if (semi) {
        kin.rx1 += dn1 * mesh_.nodes[g].position;
        kin.rx2 += dn2 * mesh_.nodes[g].position;
        kin.rd1 += dn1 * mesh_.nodes[g].director;
        kin.rd2 += dn2 * mesh_.nodes[g].director;
      }
      kin.x1 += dn1 * displacement[g];
      kin.x2 += dn2 * displacement[g];
      kin.d += table.values(a, q) * ddiff;
      kin.d1 += dn1 * ddiff;
      kin.d2 += dn2 * ddiff;
    }
    kin.x1 += kin.rx1;
    kin.x2 += kin.rx2;
    kin.d += kin.rd;
    kin.d1 += kin.rd1;
    kin.d2 += kin.rd2;

    IntegrationPointRecord rec;
    rec.element = ei;
    rec.q = q;
    rec.xi1 = rule.nodes[qi];
    rec.xi2 = rule.nodes[qj];
    rec.strain = shell_strains(kin);
    rec.stress.head<3>() = c_matrix_.block<3, 3>(0, 0) * rec.strain.head<3>();
    rec.stress.segment<3>(3) =
        c_matrix_.block<3, 3>(3, 3) * rec.strain.segment<3>(3);
    rec.stress.tail<2>() = c_matrix_.block<2, 2>(6, 6) * rec.strain.tail<2>();
    records.push_back(rec);
  }
  return records;
}

}  // namespace semshell

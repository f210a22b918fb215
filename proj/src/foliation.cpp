#include "spinflow/foliation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "spinflow/errors.hpp"

namespace spinflow {
namespace {

void check_index(int n, int idx, const char* what) {
  if (idx < 0 || idx >= n)
    throw InvalidArgument(std::string(what) + " index " + std::to_string(idx + 1) +
                          " outside frame of dimension " + std::to_string(n));
}

RVector row_vector(const RMatrix& m, int i) { return m.row(i).transpose(); }

double rel_norm(const CVector& v, const CVector& psi) { return v.norm() / psi.norm(); }

}  // namespace

RMatrix FlowStructure::h_q() const {
  const int k = q_dim();
  RMatrix out(k, k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) out(a, b) = h(q[a], q[b]);
  return out;
}

FlowStructure flow_structure(const FrameManifold& m, const LeviCivitaConnection& conn,
                             int xi_index, double tol) {
  const int n = m.dim();
  check_index(n, xi_index, "flow");
  if (n < 2) throw InvalidArgument("a flow needs dimension at least 2");

  FlowStructure f;
  f.xi = xi_index;
  f.q = complement_indices(n, xi_index);
  f.h = RMatrix(n, n);
  f.bracket_xi = RMatrix(n, n);
  f.oneill_xi = RMatrix(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      f.h(i, j) = conn.gamma(i, xi_index, j);
      f.bracket_xi(i, j) = m.c(i, j, xi_index);
      f.oneill_xi(i, j) = conn.gamma(i, j, xi_index);
    }
  f.kappa = row_vector(f.h, xi_index);

  for (int a : f.q)
    for (int b : f.q) f.riemannian_residual = std::max(f.riemannian_residual,
                                                       std::abs(f.h(a, b) + f.h(b, a)));
  for (int i = 0; i < n; ++i)
    f.xi_column_residual = std::max(f.xi_column_residual, std::abs(f.h(i, xi_index)));
  f.riemannian = f.riemannian_residual <= tol;
  f.minimal = f.kappa.lpNorm<Eigen::Infinity>() <= tol;
  if (n == 3) f.b = f.h(f.q[0], f.q[1]);
  f.lie_xi = lie_derivative_metric(conn, xi_index);
  return f;
}

OneillReport oneill(const FrameManifold& m, const LeviCivitaConnection& conn,
                    const FlowStructure& flow) {
  if (!flow.riemannian) throw NonRiemannianFlow("O'Neill tensor requested for a non-Riemannian flow");
  const int k = flow.q_dim();
  const int xi = flow.xi;
  OneillReport r;
  r.a_zw = RMatrix(k, k);
  r.a_z_xi = RMatrix(k, k);
  r.half_bracket = RMatrix(k, k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      const int qa = flow.q[a], qb = flow.q[b];
      // A_Z W is the xi-component of nabla_Z W; A_Z xi the Q-component of nabla_Z xi.
      r.a_zw(a, b) = conn.gamma(qa, qb, xi);
      r.a_z_xi(a, b) = conn.gamma(qa, xi, qb);
      r.half_bracket(a, b) = 0.5 * m.c(qa, qb, xi);
    }
  const RMatrix hq = flow.h_q();
  r.bracket_residual = (r.a_zw - r.half_bracket).cwiseAbs().maxCoeff();
  r.h_residual = std::max((r.a_zw + hq).cwiseAbs().maxCoeff(),
                          (r.a_z_xi - hq).cwiseAbs().maxCoeff());
  r.skew_residual = (r.a_zw + r.a_zw.transpose()).cwiseAbs().maxCoeff();
  return r;
}

namespace {

HypersurfaceReport restrict_impl(const SpinorField& field, int nu, const RMatrix& h,
                                 const RMatrix& lie, double tol) {
  const auto& rep = field.rep();
  const int n = rep.dim();
  check_index(n, nu, "normal");
  if (h.rows() != n || h.cols() != n) throw DimensionError("h must be n x n");

  HypersurfaceReport r{restrict_rep(rep, nu), {}, BilinearTensor::zero(n), false, false,
                       false, 0.0, 0.0, 0.0};
  const CMatrix& g_nu = rep.gamma(nu);
  for (int i = 0; i < n; ++i)
    r.induced.push_back(field.derivative(i) - 0.5 * rep.vector_action(row_vector(h, i)) * g_nu);

  const CVector& psi = field.psi().components();
  const double n2 = psi.squaredNorm();
  // Clifford action of pi^perp(e_x) in the hypersurface representation.
  auto act_l = [&](int x) -> CMatrix {
    if (x == nu) return CMatrix::Zero(rep.spinor_dim(), rep.spinor_dim());
    return g_nu * rep.gamma(x);
  };
  RMatrix t(n, n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const CVector s = act_l(x) * (r.induced[y] * psi) + act_l(y) * (r.induced[x] * psi);
      t(x, y) = 0.5 * real_inner(s, psi) / n2;
    }
  r.t_phi = BilinearTensor(t);

  double amb = 0.0;
  for (int i = 0; i < n; ++i) amb = std::max(amb, rel_norm(field.derivative_of_psi(i), psi));
  r.parallel_ambient = amb <= tol;

  const auto l_idx = complement_indices(n, nu);
  double h_nu = 0.0, t_nu = 0.0;
  for (int x : l_idx) {
    for (int y : l_idx) {
      r.weingarten_residual = std::max(r.weingarten_residual, std::abs(t(x, y) + 0.5 * h(x, y)));
      r.lie_residual = std::max(r.lie_residual, std::abs(t(x, y) - 0.25 * lie(x, y)));
    }
    r.normal_residual = std::max(r.normal_residual, std::abs(t(x, nu) + 0.25 * h(nu, x)));
    h_nu = std::max(h_nu, std::abs(h(nu, x)));
    t_nu = std::max(t_nu, std::abs(t(x, nu)));
  }
  r.riemannian = h_nu <= tol;
  r.normal_t_phi_vanishes = t_nu <= tol;
  return r;
}

}  // namespace

HypersurfaceReport hypersurface_restrict(const SpinorField& field, int nu_index,
                                         const RMatrix& h, double tol) {
  return restrict_impl(field, nu_index, h, -(h + h.transpose()), tol);
}

HypersurfaceReport hypersurface_restrict(const SpinorField& field, int nu_index,
                                         const LeviCivitaConnection& conn, double tol) {
  const int n = conn.dim();
  check_index(n, nu_index, "normal");
  RMatrix h(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) h(i, j) = -conn.gamma(i, nu_index, j);
  return restrict_impl(field, nu_index, h, lie_derivative_metric(conn, nu_index).entries(), tol);
}

int common_kernel_dim(const std::vector<CMatrix>& mats, double tol) {
  if (mats.empty()) throw InvalidArgument("no matrices given");
  const Eigen::Index cols = mats.front().cols();
  CMatrix stacked(cols * static_cast<Eigen::Index>(mats.size()), cols);
  Eigen::Index row = 0;
  for (const auto& m : mats) {
    if (m.cols() != cols || m.rows() != cols) throw DimensionError("matrices must share a square shape");
    stacked.middleRows(row, cols) = m;
    row += cols;
  }
  Eigen::JacobiSVD<CMatrix> svd(stacked);
  const auto& sv = svd.singularValues();
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > tol) ++rank;
  return static_cast<int>(cols) - rank;
}

TransversalConnection transversal_connection(const FrameManifold& m,
                                             const LeviCivitaConnection& conn,
                                             const SpinorField& field,
                                             const FlowStructure& flow) {
  if (!flow.riemannian)
    throw NonRiemannianFlow("transversal connection needs a Riemannian flow");
  const auto& rep = field.rep();
  const int n = rep.dim();
  if (n != m.dim()) throw DimensionError("field and manifold dimensions differ");
  const int xi = flow.xi;
  const int k = flow.q_dim();
  const CMatrix& g_xi = rep.gamma(xi);

  TransversalConnection t;
  t.xi = xi;
  t.q = flow.q;

  // Spinorial side: nabla_Z = M_Z - 1/2 xi.h(Z) on Q, and along xi the extra
  // Clifford contraction of h over Q.
  CMatrix h_contract = CMatrix::Zero(rep.spinor_dim(), rep.spinor_dim());
  for (int a : flow.q) h_contract += rep.gamma(a) * rep.vector_action(row_vector(flow.h, a));
  t.derivative.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const CMatrix hi = rep.vector_action(row_vector(flow.h, i));
    if (i == xi)
      t.derivative[i] = field.derivative(i) - 0.25 * h_contract - 0.5 * g_xi * hi;
    else
      t.derivative[i] = field.derivative(i) - 0.5 * g_xi * hi;
  }

  // Christoffel symbols of nabla on Q: pi(nabla_Z W) along Q, pi[xi, W] along xi.
  t.christoffel.assign(static_cast<std::size_t>(n), RMatrix::Zero(k, k));
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b)
        t.christoffel[i](a, b) = i == xi ? m.c(xi, flow.q[a], flow.q[b])
                                         : conn.gamma(i, flow.q[a], flow.q[b]);

  // Spin lift. gamma^Q_a gamma^Q_b = gamma_a gamma_b for a != b, so the ambient
  // products serve in every dimension.
  for (int i = 0; i < n; ++i) {
    CMatrix w = CMatrix::Zero(rep.spinor_dim(), rep.spinor_dim());
    for (int a = 0; a < k; ++a)
      for (int b = a + 1; b < k; ++b)
        w += 0.5 * t.christoffel[i](a, b) * rep.gamma(flow.q[a]) * rep.gamma(flow.q[b]);
    t.from_christoffel.push_back(w);
  }
  if (field.source() == SpinorField::Source::FromSpinConnection) {
    double worst = 0.0;
    for (int i = 0; i < n; ++i)
      worst = std::max(worst, (t.derivative[i] - t.from_christoffel[i]).norm());
    t.route_residual = worst;
  }

  const auto& G = t.christoffel;
  t.curvature.assign(static_cast<std::size_t>(n),
                     std::vector<RMatrix>(static_cast<std::size_t>(n), RMatrix::Zero(k, k)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      RMatrix r = G[j] * G[i] - G[i] * G[j];
      for (int l = 0; l < n; ++l) r -= m.c(i, j, l) * G[l];
      t.curvature[i][j] = r;
    }
  t.ricci = RMatrix::Zero(k, k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      for (int c = 0; c < k; ++c) t.ricci(a, b) += t.curvature[flow.q[a]][flow.q[c]](c, b);
  t.scal_direct = t.ricci.trace();
  for (int j : flow.q)
    t.xi_curvature_residual = std::max(t.xi_curvature_residual,
                                       t.curvature[xi][j].cwiseAbs().maxCoeff());

  const double scal_m = riemann_curvature(m, conn).scal;
  double div_kappa = 0.0;
  for (int a : flow.q)
    for (int l = 0; l < n; ++l) div_kappa += flow.kappa(l) * conn.gamma(a, l, a);
  t.scal_oneill = scal_m - 2.0 * div_kappa + 2.0 * flow.kappa.squaredNorm() +
                  flow.h_q().squaredNorm();

  t.kernel_dim = common_kernel_dim(t.derivative);
  const CVector& psi = field.psi().components();
  for (int i = 0; i < n; ++i)
    t.field_residual = std::max(t.field_residual, rel_norm(t.derivative[i] * psi, psi));
  return t;
}

FlowEnergyMomentum flow_emt(const SpinorField& field, const FlowStructure& flow,
                            double parallel_tol) {
  const auto& rep = field.rep();
  const int n = rep.dim();
  const int xi = flow.xi;
  const CMatrix& g_xi = rep.gamma(xi);
  const CVector& psi = field.psi().components();
  const double n2 = psi.squaredNorm();

  RMatrix e(n, n);
  for (int i = 0; i < n; ++i) {
    const CVector d = field.derivative_of_psi(i);
    for (int j = 0; j < n; ++j) e(i, j) = real_inner(g_xi * (rep.gamma(j) * d), psi) / n2;
  }
  FlowEnergyMomentum r;
  r.E = BilinearTensor(e);
  r.T = r.E.sym();
  r.Q = r.E.skew();
  for (int a : flow.q)
    for (int b : flow.q) r.e_q_norm_sq += e(a, b) * e(a, b);

  for (int a : flow.q) {
    const CMatrix na = field.derivative(a) - 0.5 * g_xi * rep.vector_action(row_vector(flow.h, a));
    r.q_parallel_residual = std::max(r.q_parallel_residual, rel_norm(na * psi, psi));
  }
  const CMatrix kap = rep.vector_action(flow.kappa);
  r.xi_parallel_residual = rel_norm((field.derivative(xi) - 0.5 * g_xi * kap) * psi, psi);
  if (flow.riemannian) {
    CMatrix h_contract = CMatrix::Zero(rep.spinor_dim(), rep.spinor_dim());
    for (int a : flow.q) h_contract += rep.gamma(a) * rep.vector_action(row_vector(flow.h, a));
    r.xi_transversal_residual = rel_norm(
        (field.derivative(xi) - 0.25 * h_contract - 0.5 * g_xi * kap) * psi, psi);
  }
  r.q_parallel = r.q_parallel_residual <= parallel_tol;
  if (r.xi_parallel_residual <= parallel_tol) {
    r.xi_parallel = true;
    r.xi_hypothesis = "gauss";
  } else if (n == 3 && r.xi_transversal_residual && *r.xi_transversal_residual <= parallel_tol) {
    // In dimension 3 the extra h-contraction only adds a Q-bivector term, which
    // drops out of T(xi, Z).
    r.xi_parallel = true;
    r.xi_hypothesis = "transversal";
  }

  if (r.q_parallel) {
    double lie = 0.0, br = 0.0, on = 0.0;
    for (int a : flow.q)
      for (int b : flow.q) {
        lie = std::max(lie, std::abs(r.T(a, b) + 0.25 * flow.lie_xi(a, b)));
        br = std::max(br, std::abs(r.Q(a, b) - 0.25 * flow.bracket_xi(a, b)));
        on = std::max(on, std::abs(r.Q(a, b) - 0.5 * flow.oneill_xi(a, b)));
      }
    r.lie_residual = lie;
    r.bracket_residual = br;
    if (flow.riemannian) r.oneill_residual = on;
  }
  if (r.q_parallel && r.xi_parallel) {
    double kr = 0.0, mixed = 0.0;
    for (int a : flow.q) {
      kr = std::max(kr, std::abs(r.T(xi, a) + 0.25 * flow.kappa(a)));
      mixed = std::max(mixed, std::abs(r.T(xi, a)));
    }
    r.kappa_residual = kr;
    const double scale = std::max(1.0, flow.kappa.lpNorm<Eigen::Infinity>());
    r.minimal_iff_mixed_t_vanishes = flow.minimal == (mixed <= 1e-9 * scale);
  }
  return r;
}

ThreeDReport three_d_equivalence(const SpinorField& field, const FlowStructure& flow,
                                 const TransversalConnection& transversal, double tol) {
  const auto& rep = field.rep();
  if (rep.dim() != 3) throw InvalidArgument("three-dimensional check needs n = 3");
  if (!flow.riemannian) throw NonRiemannianFlow("flow is not Riemannian");
  if (!flow.minimal) throw InvalidArgument("flow is not minimal");
  const double b = *flow.b;
  const CVector& psi = field.psi().components();
  const CMatrix id = rep.identity();

  ThreeDReport r;
  r.b = b;
  r.kernel_dim = transversal.kernel_dim;
  r.kernel_nonempty = r.kernel_dim > 0;

  const auto d = dirac(field, tol);
  r.dirac_b_residual = rel_norm(d.value - 0.5 * b * psi, psi);
  if (field.source() == SpinorField::Source::FromSpinConnection)
    r.solution_dim = common_kernel_dim({d.dirac_matrix - 0.5 * b * id});
  else
    r.solution_dim = r.dirac_b_residual <= tol ? 1 : 0;
  r.solution_exists = r.solution_dim > 0;
  r.equivalent = r.kernel_nonempty == r.solution_exists;
  r.scal_transversal = transversal.scal_direct;
  r.scal_nonnegative = r.scal_transversal >= -tol;

  CVector split = 0.5 * b * psi;
  for (int i = 0; i < 3; ++i) split += rep.gamma(i) * (transversal.derivative[i] * psi);
  r.dirac_split_residual = rel_norm(d.value - split, psi);

  const CMatrix& g_xi = rep.gamma(flow.xi);
  r.transversal_dirac = CVector::Zero(psi.size());
  for (int a : flow.q) r.transversal_dirac += g_xi * (rep.gamma(a) * (transversal.derivative[a] * psi));
  r.dtr_xi_residual =
      rel_norm(r.transversal_dirac - transversal.derivative[flow.xi] * psi, psi);
  return r;
}

}  // namespace spinflow

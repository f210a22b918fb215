#include "spinflow/sasaki_kahler.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "spinflow/errors.hpp"

namespace spinflow {
namespace {

double binomial(int m, int r) {
  double b = 1.0;
  for (int i = 1; i <= r; ++i) b = b * (m - r + i) / i;
  return b;
}

double max_abs(const CMatrix& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

// Omega = 1/2 sum_i gamma_i J(e_i) for the given gammas.
CMatrix omega_matrix(const CliffordAlgebraRep& rep, const std::vector<int>& idx,
                     const RMatrix& J) {
  const int k = static_cast<int>(idx.size());
  CMatrix w = CMatrix::Zero(rep.spinor_dim(), rep.spinor_dim());
  for (int i = 0; i < k; ++i) {
    CMatrix je = CMatrix::Zero(rep.spinor_dim(), rep.spinor_dim());
    for (int j = 0; j < k; ++j) je += J(j, i) * rep.gamma(idx[j]);
    w += 0.5 * rep.gamma(idx[i]) * je;
  }
  return w;
}

}  // namespace

EtaEinsteinFit eta_einstein_fit(const RMatrix& ric, int xi_index, int m, double tol) {
  const int n = static_cast<int>(ric.rows());
  if (ric.cols() != n) throw InvalidArgument("Ricci matrix must be square");
  if (xi_index < 0 || xi_index >= n) throw InvalidArgument("xi index outside frame");
  if ((ric - ric.transpose()).cwiseAbs().maxCoeff() > tol)
    throw InvalidArgument("Ricci matrix is not symmetric");

  // Normal equations in the basis {Id, P = e_xi e_xi^T}: <Id,Id> = n, <Id,P> = <P,P> = 1.
  const double tr = ric.trace();
  const double rxx = ric(xi_index, xi_index);
  Eigen::Matrix2d a;
  a << n, 1, 1, 1;
  const Eigen::Vector2d sol = a.fullPivLu().solve(Eigen::Vector2d(tr, rxx));

  EtaEinsteinFit f;
  f.beta = sol(0);
  f.gamma = sol(1);
  RMatrix fit = f.beta * RMatrix::Identity(n, n);
  fit(xi_index, xi_index) += f.gamma;
  f.residual = (ric - fit).norm();
  f.m = m;
  f.sum_residual = std::abs(f.beta + f.gamma - 2.0 * m);
  f.sum_matches = f.sum_residual <= tol;
  if (f.residual > tol)
    throw NotEtaEinstein("Ricci tensor is not of the form beta g + gamma xi(x)xi", f.residual);
  return f;
}

SasakiReport check_sasakian(const FrameManifold& m, const LeviCivitaConnection& conn,
                            int xi_index, double tol) {
  const int n = m.dim();
  if (xi_index < 0 || xi_index >= n)
    throw InvalidArgument("xi index " + std::to_string(xi_index + 1) + " outside frame");
  RMatrix h(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) h(i, j) = conn.gamma(i, xi_index, j);

  SasakiReport r;
  r.killing_residual = (h + h.transpose()).cwiseAbs().maxCoeff();
  r.is_unit_killing = r.killing_residual <= tol;

  // As an endomorphism on column vectors h is h^T.
  const RMatrix hm = h.transpose();
  RMatrix a1 = hm * hm + RMatrix::Identity(n, n);
  a1(xi_index, xi_index) -= 1.0;
  r.axiom1_residual = a1.cwiseAbs().maxCoeff();

  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      RVector lhs = RVector::Zero(n);
      for (int j = 0; j < n; ++j)
        for (int l = 0; l < n; ++l)
          lhs(l) += h(k, j) * conn.gamma(i, j, l) - conn.gamma(i, k, j) * h(j, l);
      if (k == xi_index) lhs(i) -= 1.0;
      if (i == k) lhs(xi_index) += 1.0;
      r.axiom2_residual = std::max(r.axiom2_residual, lhs.cwiseAbs().maxCoeff());
    }
  r.sasakian = n % 2 == 1 && r.is_unit_killing && r.axiom1_residual <= tol &&
               r.axiom2_residual <= tol;

  try {
    r.eta_einstein = eta_einstein_fit(riemann_curvature(m, conn).ricci, xi_index, (n - 1) / 2);
  } catch (const NotEtaEinstein&) {
  }
  return r;
}

TransversalRicciCheck transversal_ricci_check(const RMatrix& ric, const FlowStructure& flow,
                                              const TransversalConnection& transversal) {
  const int n = static_cast<int>(ric.rows());
  const int k = flow.q_dim();
  const int m = (n - 1) / 2;
  TransversalRicciCheck c;
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      c.q_residual = std::max(c.q_residual,
                              std::abs(transversal.ricci(a, b) - ric(flow.q[a], flow.q[b]) -
                                       (a == b ? 2.0 : 0.0)));
  for (int i = 0; i < n; ++i)
    c.xi_residual = std::max(c.xi_residual,
                             std::abs(ric(flow.xi, i) - (i == flow.xi ? 2.0 * m : 0.0)));
  return c;
}

double limiting_ricci_residual(const RMatrix& ric, const FlowStructure& flow) {
  const int n = static_cast<int>(ric.rows());
  const int m = (n - 1) / 2;
  RMatrix target = -2.0 * RMatrix::Identity(n, n);
  target(flow.xi, flow.xi) = 2.0 * m;
  return (ric - target).cwiseAbs().maxCoeff();
}

KahlerDecomposition kahler_form_spinor(const CliffordAlgebraRep& rep_q, const RMatrix& J) {
  const int dim = rep_q.dim();
  if (dim % 2 != 0) throw InvalidArgument("Kahler form needs an even-dimensional representation");
  validate_complex_structure(J, dim);
  std::vector<int> idx(static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i) idx[i] = i;

  KahlerDecomposition d;
  d.m = dim / 2;
  d.omega = omega_matrix(rep_q, idx, J);
  d.trace = d.omega.trace();
  d.skew_residual = max_abs(d.omega.adjoint() + d.omega);

  const CMatrix herm = Complex(0.0, -1.0) * d.omega;
  Eigen::SelfAdjointEigenSolver<CMatrix> es(0.5 * (herm + herm.adjoint()));
  const auto& mu = es.eigenvalues();
  const auto& vecs = es.eigenvectors();
  const int N = rep_q.spinor_dim();
  d.projectors.assign(static_cast<std::size_t>(d.m + 1), CMatrix::Zero(N, N));
  d.multiplicities.assign(static_cast<std::size_t>(d.m + 1), 0);
  for (int r = 0; r <= d.m; ++r) d.eigenvalues.emplace_back(0.0, 2.0 * r - d.m);
  for (int a = 0; a < N; ++a) {
    const int r = std::clamp(static_cast<int>(std::lround((mu(a) + d.m) / 2.0)), 0, d.m);
    d.spectrum_residual = std::max(d.spectrum_residual, std::abs(mu(a) - (2.0 * r - d.m)));
    d.projectors[r] += vecs.col(a) * vecs.col(a).adjoint();
    ++d.multiplicities[r];
  }

  CMatrix sum = CMatrix::Zero(N, N);
  d.multiplicities_binomial = true;
  for (int r = 0; r <= d.m; ++r) {
    sum += d.projectors[r];
    if (d.multiplicities[r] != static_cast<int>(std::lround(binomial(d.m, r))))
      d.multiplicities_binomial = false;
    for (int s = r + 1; s <= d.m; ++s)
      d.orthogonality_residual =
          std::max(d.orthogonality_residual, max_abs(d.projectors[r] * d.projectors[s]));
  }
  d.resolution_residual = max_abs(sum - CMatrix::Identity(N, N));
  return d;
}

XiActionReport xi_action_rule(const CliffordAlgebraRep& rep3, int xi_index, const RMatrix& J) {
  if (rep3.dim() != 3) throw InvalidArgument("xi action rule needs n = 3");
  const auto rep_q = restrict_rep(rep3, xi_index);
  const auto d = kahler_form_spinor(rep_q, J);
  const CMatrix& xi = rep3.gamma(xi_index);

  XiActionReport r;
  r.b = J(1, 0);
  if (std::abs(std::abs(r.b) - 1.0) > 1e-10)
    throw InvalidArgument("J must be a rotation by +-pi/2");
  r.omega_b_xi_residual = max_abs(d.omega - r.b * xi);
  for (int k = 0; k <= d.m; ++k) {
    const CMatrix& p = d.projectors[k];
    const CMatrix xp = xi * p;
    // Sigma_r is one-dimensional here; read off the scalar from the trace.
    const double rank = p.trace().real();
    r.observed.push_back(rank > 0.5 ? xp.trace() / rank : Complex(0.0, 0.0));
    const double mu = 2.0 * k - d.m;
    r.b_rule_residual =
        std::max(r.b_rule_residual, max_abs(xp - Complex(0.0, mu / r.b) * p));
    const double sign = k % 2 == 0 ? -1.0 : 1.0;
    r.sign_rule_residual = std::max(r.sign_rule_residual, max_abs(xp - Complex(0.0, sign) * p));
  }
  r.sign_rule_holds = r.sign_rule_residual <= 1e-10;
  return r;
}

SasakiSpinorReport sasaki_spinor_check(const SpinorField& field, const FlowStructure& flow) {
  const auto& rep = field.rep();
  const int n = rep.dim();
  const CVector& psi = field.psi().components();
  const CMatrix& g_xi = rep.gamma(flow.xi);
  if (n % 2 == 0) throw InvalidArgument("Sasakian spinor identities need odd n");
  std::vector<int> idx(flow.q.size());
  for (std::size_t a = 0; a < idx.size(); ++a) idx[a] = static_cast<int>(a);
  const CMatrix omega = omega_matrix(restrict_rep(rep, flow.xi), idx, flow.complex_structure_q());

  SasakiSpinorReport r;
  r.xi_residual = (field.derivative_of_psi(flow.xi) - 0.5 * omega * psi).norm() / psi.norm();
  for (int a : flow.q) {
    const CVector target = 0.5 * g_xi * (rep.vector_action(flow.h.row(a).transpose()) * psi);
    r.q_residual = std::max(r.q_residual, (field.derivative_of_psi(a) - target).norm() / psi.norm());
  }
  if (n == 3 && flow.b)
    r.omega_b_xi_residual = (omega * psi - *flow.b * (g_xi * psi)).norm() / psi.norm();
  return r;
}

}  // namespace spinflow

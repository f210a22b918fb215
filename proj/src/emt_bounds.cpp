#include "spinflow/emt_bounds.hpp"

#include <cmath>

#include "spinflow/errors.hpp"
#include "spinflow/foliation.hpp"

namespace spinflow {
namespace {

BoundCheck make_bound(double lambda_sq, double rhs, double tol) {
  BoundCheck b;
  b.rhs = rhs;
  b.slack = lambda_sq - rhs;
  b.holds = b.slack >= -tol;
  b.equality = std::abs(b.slack) <= tol;
  return b;
}

}  // namespace

EnergyMomentum emt_tensors(const SpinorField& field) {
  const auto& rep = field.rep();
  const int n = rep.dim();
  const CVector& psi = field.psi().components();
  const double n2 = psi.squaredNorm();
  RMatrix e(n, n);
  for (int i = 0; i < n; ++i) {
    const CVector d = field.derivative_of_psi(i);
    for (int j = 0; j < n; ++j) e(i, j) = real_inner(rep.gamma(j) * d, psi) / n2;
  }
  BilinearTensor E(e);
  return {E, E.sym(), E.skew()};
}

EnergyMomentum emt_tensors_direct(const SpinorField& field) {
  const auto& rep = field.rep();
  const int n = rep.dim();
  const CVector& psi = field.psi().components();
  const double n2 = psi.squaredNorm();
  RMatrix t(n, n), q(n, n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const CVector x_dy = rep.gamma(x) * field.derivative_of_psi(y);
      const CVector y_dx = rep.gamma(y) * field.derivative_of_psi(x);
      t(x, y) = 0.5 * real_inner(x_dy + y_dx, psi) / n2;
      q(x, y) = 0.5 * real_inner(y_dx - x_dy, psi) / n2;
    }
  BilinearTensor T(t), Q(q);
  return {BilinearTensor(t + q), T, Q};
}

double equality_residual(const SpinorField& field, const BilinearTensor& E) {
  const auto& rep = field.rep();
  const int n = rep.dim();
  if (E.dim() != n) throw DimensionError("tensor size differs from frame dimension");
  const CVector& psi = field.psi().components();
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    const CVector r = field.derivative_of_psi(i) +
                      rep.vector_action(E.entries().row(i).transpose()) * psi;
    worst = std::max(worst, r.norm());
  }
  return worst / psi.norm();
}

IdentitySides modified_connection_identity(const SpinorField& field) {
  const auto& rep = field.rep();
  const int n = rep.dim();
  const CVector& psi = field.psi().components();
  const auto emt = emt_tensors(field);
  IdentitySides s;
  for (int i = 0; i < n; ++i) {
    const CVector d = field.derivative_of_psi(i);
    s.lhs += (d + rep.vector_action(emt.E.entries().row(i).transpose()) * psi).squaredNorm();
    s.rhs += d.squaredNorm();
  }
  s.rhs -= emt.E.frob_sq() * psi.squaredNorm();
  return s;
}

BilinearTensor complex_structure_form(const RMatrix& J) {
  return BilinearTensor(J.transpose());
}

PairingReport pairing_identity(const SpinorField& field, const RMatrix& J) {
  const int n = field.dim();
  const Spinor twisted = twisted_dirac(field, J);  // validates J and parity
  const auto emt = emt_tensors(field);
  const double n2 = field.psi().norm_sq();
  PairingReport r;
  r.re_twisted = real_inner(twisted.components(), field.psi().components());
  const double jq = complex_structure_form(J).pairing(emt.Q);
  r.paired = jq * n2;
  r.q_norm_sq = emt.Q.frob_sq();
  r.jq_sq_over_n = jq * jq / n;
  r.t_norm_sq = emt.T.frob_sq();
  r.tr_t_sq_over_n = emt.T.trace() * emt.T.trace() / n;
  return r;
}

BoundReport check_bounds(const SpinorField& field, double scal, const FlowStructure* flow,
                         double tol) {
  const auto data = dirac(field, tol);
  if (!data.lambda_sq)
    throw NotAnEigenspinor("bounds need an eigenspinor of D^2", data.eigen_residual);
  const double lambda_sq = *data.lambda_sq;
  const int n = field.dim();
  const auto emt = emt_tensors(field);

  BoundReport r;
  r.lambda_sq = lambda_sq;
  r.scal = scal;
  r.t_norm_sq = emt.T.frob_sq();
  r.q_norm_sq = emt.Q.frob_sq();
  const double friedrich = n > 1 ? n * scal / (4.0 * (n - 1)) : 0.0;
  r.friedrich = make_bound(lambda_sq, friedrich, tol);
  r.main = make_bound(lambda_sq, scal / 4.0 + r.t_norm_sq + r.q_norm_sq, tol);

  // The |T|^2 estimate is stated for eigenspinors of D itself.
  const CVector& psi = field.psi().components();
  const Complex mu = psi.dot(data.value) / psi.squaredNorm();
  if ((data.value - mu * psi).norm() <= tol * psi.norm())
    r.emt = make_bound(lambda_sq, scal / 4.0 + r.t_norm_sq, tol);

  if (flow) {
    const auto tensors = flow_emt(field, *flow);
    r.flow = make_bound(lambda_sq, scal / 4.0 + tensors.E.frob_sq(), tol);
    r.flow_q = make_bound(lambda_sq, scal / 4.0 + tensors.e_q_norm_sq, tol);
  }
  r.equality_residual = equality_residual(field, emt.E);
  return r;
}

}  // namespace spinflow

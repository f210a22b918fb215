#include "spinflow/spinor_fields.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "spinflow/errors.hpp"

namespace spinflow {
namespace {

void check_shapes(const CliffordAlgebraRep& rep, const Spinor& psi0,
                  const std::vector<CMatrix>& mats, const char* what) {
  if (psi0.size() != rep.spinor_dim())
    throw DimensionError("spinor has " + std::to_string(psi0.size()) +
                         " components, rep expects " + std::to_string(rep.spinor_dim()));
  if (static_cast<int>(mats.size()) != rep.dim())
    throw DimensionError(std::string(what) + ": expected one matrix per frame direction");
  for (const auto& m : mats)
    if (m.rows() != rep.spinor_dim() || m.cols() != rep.spinor_dim())
      throw DimensionError(std::string(what) + ": matrix shape differs from spinor dimension");
}

}  // namespace

std::vector<CMatrix> spin_connection(const LeviCivitaConnection& conn,
                                     const CliffordAlgebraRep& rep) {
  const int n = rep.dim();
  if (conn.dim() != n) throw DimensionError("connection and rep differ in dimension");
  std::vector<CMatrix> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    CMatrix w = CMatrix::Zero(rep.spinor_dim(), rep.spinor_dim());
    for (int j = 0; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        if (conn.gamma(i, j, k) != 0.0)
          w += 0.5 * conn.gamma(i, j, k) * (rep.gamma(j) * rep.gamma(k));
    out.push_back(std::move(w));
  }
  return out;
}

SpinorField::SpinorField(CliffordAlgebraRep rep, Spinor psi, std::vector<CMatrix> deriv,
                         std::vector<CMatrix> frame_connection, Source source)
    : rep_(std::move(rep)),
      psi_(std::move(psi)),
      deriv_(std::move(deriv)),
      frame_connection_(std::move(frame_connection)),
      source_(source) {
  const double n2 = psi_.norm_sq();
  for (const auto& m : deriv_)
    norm_drift_ =
        std::max(norm_drift_, std::abs(real_inner(m * psi_.components(), psi_.components())) / n2);
}

SpinorField make_field(const CliffordAlgebraRep& rep, const Spinor& psi0,
                       const std::vector<CMatrix>& spin_conn) {
  check_shapes(rep, psi0, spin_conn, "spin connection");
  if (psi0.is_zero()) throw InvalidArgument("spinor field base value must be nonzero");
  return SpinorField(rep, psi0, spin_conn, spin_conn, SpinorField::Source::FromSpinConnection);
}

SpinorField make_prescribed_field(const CliffordAlgebraRep& rep, const Spinor& psi0,
                                  const std::vector<CMatrix>& deriv,
                                  std::optional<std::vector<CMatrix>> frame_connection) {
  check_shapes(rep, psi0, deriv, "prescriptions");
  if (psi0.is_zero()) throw InvalidArgument("spinor field base value must be nonzero");
  std::vector<CMatrix> conn;
  if (frame_connection) {
    check_shapes(rep, psi0, *frame_connection, "frame connection");
    conn = std::move(*frame_connection);
  } else {
    conn.assign(static_cast<std::size_t>(rep.dim()),
                CMatrix::Zero(rep.spinor_dim(), rep.spinor_dim()));
  }
  return SpinorField(rep, psi0, deriv, std::move(conn), SpinorField::Source::Prescribed);
}

SpinorField make_prescribed_field(const CliffordAlgebraRep& rep, const Spinor& psi0,
                                  const std::vector<CliffordElement>& prescriptions,
                                  std::optional<std::vector<CMatrix>> frame_connection) {
  std::vector<CMatrix> deriv;
  deriv.reserve(prescriptions.size());
  for (const auto& a : prescriptions) deriv.push_back(a.matrix(rep));
  return make_prescribed_field(rep, psi0, deriv, std::move(frame_connection));
}

DiracData dirac(const SpinorField& field, double tol) {
  const auto& rep = field.rep();
  const int n = rep.dim();
  const CVector& psi = field.psi().components();
  CMatrix d = CMatrix::Zero(rep.spinor_dim(), rep.spinor_dim());
  for (int i = 0; i < n; ++i) d += rep.gamma(i) * field.derivative(i);

  CVector d2 = CVector::Zero(psi.size());
  for (int i = 0; i < n; ++i) {
    const CMatrix& w = field.frame_connection()[static_cast<std::size_t>(i)];
    d2 += rep.gamma(i) * ((w * d - d * w) * psi + d * (field.derivative(i) * psi));
  }

  DiracData out;
  out.dirac_matrix = d;
  out.value = d * psi;
  out.square_value = d2;
  const double n2 = psi.squaredNorm();
  const double lambda_sq = real_inner(d2, psi) / n2;
  out.eigen_residual = (d2 - lambda_sq * psi).norm() / std::sqrt(n2);
  if (out.eigen_residual <= tol) out.lambda_sq = lambda_sq;
  return out;
}

double rayleigh_eigencheck(const SpinorField& field, double tol) {
  const auto data = dirac(field, tol);
  if (!data.lambda_sq)
    throw NotAnEigenspinor("spinor is not an eigenvector of D^2 (residual " +
                               std::to_string(data.eigen_residual) + ")",
                           data.eigen_residual);
  return *data.lambda_sq;
}

void validate_complex_structure(const RMatrix& J, int n) {
  if (n % 2 != 0) throw InvalidArgument("complex structure needs even dimension");
  if (J.rows() != n || J.cols() != n)
    throw DimensionError("complex structure must be " + std::to_string(n) + "x" +
                         std::to_string(n));
  const RMatrix id = RMatrix::Identity(n, n);
  if ((J * J + id).cwiseAbs().maxCoeff() > 1e-10)
    throw InvalidArgument("complex structure must satisfy J^2 = -Id");
  if ((J.transpose() * J - id).cwiseAbs().maxCoeff() > 1e-10)
    throw InvalidArgument("complex structure must be orthogonal");
}

CMatrix twisted_dirac_matrix(const SpinorField& field, const RMatrix& J) {
  const auto& rep = field.rep();
  validate_complex_structure(J, rep.dim());
  CMatrix out = CMatrix::Zero(rep.spinor_dim(), rep.spinor_dim());
  for (int i = 0; i < rep.dim(); ++i)
    out += rep.vector_action(J.col(i)) * field.derivative(i);
  return out;
}

Spinor twisted_dirac(const SpinorField& field, const RMatrix& J) {
  return Spinor(twisted_dirac_matrix(field, J) * field.psi().components());
}

TwistedComparison compare_twisted(const SpinorField& field, const RMatrix& J) {
  const CMatrix t = twisted_dirac_matrix(field, J);
  const CMatrix d = dirac(field).dirac_matrix;
  return {(t * t - d * d).norm(), (t * d + d * t).norm()};
}

}  // namespace spinflow

#include "spinflow/clifford.hpp"

#include <string>

#include "spinflow/errors.hpp"

namespace spinflow {
namespace {

const Complex kI{0.0, 1.0};

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index r = 0; r < a.rows(); ++r)
    for (Eigen::Index c = 0; c < a.cols(); ++c)
      out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
  return out;
}

CMatrix pauli(int which) {
  CMatrix s = CMatrix::Zero(2, 2);
  switch (which) {
    case 1:
      s(0, 1) = 1.0;
      s(1, 0) = 1.0;
      break;
    case 2:
      s(0, 1) = -kI;
      s(1, 0) = kI;
      break;
    default:
      s(0, 0) = 1.0;
      s(1, 1) = -1.0;
      break;
  }
  return s;
}

CMatrix volume_of(const std::vector<CMatrix>& gammas, int spinor_dim) {
  CMatrix prod = CMatrix::Identity(spinor_dim, spinor_dim);
  for (const auto& g : gammas) prod = prod * g;
  const int n = static_cast<int>(gammas.size());
  Complex phase{1.0, 0.0};
  for (int p = 0; p < (n + 1) / 2; ++p) phase *= kI;
  return phase * prod;
}

std::vector<CMatrix> even_gammas(int n) {
  if (n == 0) return {};
  const auto lower = even_gammas(n - 2);
  const int lower_dim = lower.empty() ? 1 : static_cast<int>(lower.front().rows());
  std::vector<CMatrix> out;
  out.reserve(static_cast<std::size_t>(n));
  for (const auto& g : lower) out.push_back(kron(g, pauli(3)));
  const CMatrix id = CMatrix::Identity(lower_dim, lower_dim);
  out.push_back(kron(id, -kI * pauli(1)));
  out.push_back(kron(id, -kI * pauli(2)));
  return out;
}

}  // namespace

CliffordAlgebraRep::CliffordAlgebraRep(std::vector<CMatrix> gammas)
    : gammas_(std::move(gammas)) {
  if (gammas_.empty()) throw InvalidArgument("Clifford representation needs n >= 1");
  spinor_dim_ = static_cast<int>(gammas_.front().rows());
  for (const auto& g : gammas_) {
    if (g.rows() != spinor_dim_ || g.cols() != spinor_dim_)
      throw DimensionError("gamma matrices must share one square shape");
  }
}

CliffordAlgebraRep CliffordAlgebraRep::build(int n) {
  if (n < kMinDim || n > kMaxDim)
    throw InvalidArgument("Clifford dimension " + std::to_string(n) +
                          " outside supported range [1, 10]");
  if (n % 2 == 0) return CliffordAlgebraRep(even_gammas(n));

  auto gammas = even_gammas(n - 1);
  const int dim = gammas.empty() ? 1 : static_cast<int>(gammas.front().rows());
  const CMatrix even_volume = volume_of(gammas, dim);
  gammas.push_back(-kI * even_volume);
  const CMatrix vol = volume_of(gammas, dim);
  if ((vol + CMatrix::Identity(dim, dim)).norm() < 1e-8) gammas.back() *= -1.0;
  return CliffordAlgebraRep(std::move(gammas));
}

CMatrix CliffordAlgebraRep::complex_volume() const {
  return volume_of(gammas_, spinor_dim_);
}

CMatrix CliffordAlgebraRep::vector_action(const RVector& v) const {
  if (v.size() != dim())
    throw DimensionError("vector of length " + std::to_string(v.size()) +
                         " in a rep of dimension " + std::to_string(dim()));
  CMatrix out = CMatrix::Zero(spinor_dim_, spinor_dim_);
  for (int i = 0; i < dim(); ++i)
    if (v(i) != 0.0) out += v(i) * gammas_[static_cast<std::size_t>(i)];
  return out;
}

RepResiduals invariant_residuals(const CliffordAlgebraRep& rep) {
  RepResiduals r;
  const CMatrix id = rep.identity();
  for (int i = 0; i < rep.dim(); ++i) {
    r.skew_hermitian =
        std::max(r.skew_hermitian, (rep.gamma(i).adjoint() + rep.gamma(i)).norm());
    for (int j = 0; j < rep.dim(); ++j) {
      CMatrix ac = rep.gamma(i) * rep.gamma(j) + rep.gamma(j) * rep.gamma(i);
      if (i == j) ac += 2.0 * id;
      r.anticommutation = std::max(r.anticommutation, ac.norm());
    }
  }
  if (rep.dim() % 2 == 1) r.odd_volume = (rep.complex_volume() - id).norm();
  return r;
}

CliffordElement CliffordElement::scalar(Complex s, int n) {
  CliffordElement e(n);
  e.scalar_ = s;
  return e;
}

CliffordElement CliffordElement::vector(const RVector& v) {
  CliffordElement e(static_cast<int>(v.size()));
  e.vector_ = v;
  return e;
}

CliffordElement CliffordElement::basis_vector(int n, int i, double coefficient) {
  if (i < 0 || i >= n) throw InvalidArgument("basis index out of range");
  CliffordElement e(n);
  e.vector_(i) = coefficient;
  return e;
}

CliffordElement CliffordElement::bivector(int n, int j, int k, double coefficient) {
  CliffordElement e(n);
  e.add_bivector(j, k, coefficient);
  return e;
}

CliffordElement& CliffordElement::add_scalar(Complex s) {
  scalar_ += s;
  return *this;
}

CliffordElement& CliffordElement::add_vector(const RVector& v) {
  if (v.size() != n_) throw DimensionError("vector length differs from element dimension");
  vector_ += v;
  return *this;
}

CliffordElement& CliffordElement::add_bivector(int j, int k, double coefficient) {
  if (j < 0 || j >= n_ || k < 0 || k >= n_)
    throw InvalidArgument("bivector index out of range");
  if (j == k) {
    // e_j e_j = -1
    scalar_ -= coefficient;
    return *this;
  }
  bivector_.push_back({j, k, coefficient});
  return *this;
}

CMatrix CliffordElement::matrix(const CliffordAlgebraRep& rep) const {
  if (rep.dim() != n_)
    throw DimensionError("Clifford element of dimension " + std::to_string(n_) +
                         " applied in a rep of dimension " + std::to_string(rep.dim()));
  CMatrix out = scalar_ * rep.identity();
  out += rep.vector_action(vector_);
  for (const auto& t : bivector_) out += t.coefficient * (rep.gamma(t.j) * rep.gamma(t.k));
  return out;
}

Spinor clifford_mul(const CliffordAlgebraRep& rep, const CliffordElement& element,
                    const Spinor& psi) {
  if (psi.size() != rep.spinor_dim())
    throw DimensionError("spinor length differs from the rep's spinor dimension");
  return Spinor(element.matrix(rep) * psi.components());
}

Complex spinor_inner(const Spinor& phi, const Spinor& psi) {
  if (phi.size() != psi.size()) throw DimensionError("spinors of different length");
  return phi.components().dot(psi.components());
}

double real_inner(const CVector& phi, const CVector& psi) {
  return phi.dot(psi).real();
}

std::vector<int> complement_indices(int n, int normal_index) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n - 1));
  for (int s = 1; s < n; ++s) out.push_back((normal_index + s) % n);
  return out;
}

CliffordAlgebraRep restrict_rep(const CliffordAlgebraRep& rep, int normal_index) {
  const int n = rep.dim();
  if (n % 2 == 0)
    throw InvalidArgument("restrict_rep needs odd ambient dimension; got " +
                          std::to_string(n));
  if (normal_index < 0 || normal_index >= n)
    throw InvalidArgument("normal index out of range");
  if (n == 1) throw InvalidArgument("restrict_rep needs ambient dimension >= 3");
  std::vector<CMatrix> out;
  for (int j : complement_indices(n, normal_index))
    out.push_back(rep.gamma(normal_index) * rep.gamma(j));
  return CliffordAlgebraRep(std::move(out));
}

}  // namespace spinflow

#pragma once

#include <utility>
#include <vector>

#include "spinflow/types.hpp"

namespace spinflow {

/// A complex spinor: a vector in the representation space of a
/// CliffordAlgebraRep.
class Spinor {
 public:
  Spinor() = default;
  explicit Spinor(CVector components) : components_(std::move(components)) {}

  const CVector& components() const { return components_; }
  Eigen::Index size() const { return components_.size(); }
  double norm_sq() const { return components_.squaredNorm(); }
  double norm() const { return components_.norm(); }
  bool is_zero() const { return components_.squaredNorm() == 0.0; }

 private:
  CVector components_;
};

/// Complex representation of Cl(n) by skew-hermitian gamma matrices with
/// gamma_i gamma_j + gamma_j gamma_i = -2 delta_ij.
///
/// Convention: n = 2 uses gamma_j = -i sigma_j, even dimensions grow by the
/// tensor recursion gamma_j (x) sigma_3, 1 (x) (-i sigma_1), 1 (x) (-i sigma_2),
/// and odd n appends +-i times the even volume element with the sign chosen so
/// that the complex volume element i^floor((n+1)/2) gamma_1...gamma_n is +Id.
/// For n = 3 this gives gamma_j = -i sigma_j, gamma_2 gamma_3 = gamma_1, and
/// -gamma_3 gamma_1 gamma_2 = Id.
class CliffordAlgebraRep {
 public:
  /// Supported range of the ambient dimension.
  static constexpr int kMinDim = 1;
  static constexpr int kMaxDim = 10;

  /// Builds the standard representation (build_rep). Throws InvalidArgument
  /// for n outside [1, 10].
  static CliffordAlgebraRep build(int n);

  /// Wraps explicit matrices without checking them; see invariant_residuals.
  CliffordAlgebraRep(std::vector<CMatrix> gammas);

  int dim() const { return static_cast<int>(gammas_.size()); }
  int spinor_dim() const { return spinor_dim_; }
  const CMatrix& gamma(int i) const { return gammas_.at(static_cast<std::size_t>(i)); }
  const std::vector<CMatrix>& gammas() const { return gammas_; }

  /// i^floor((n+1)/2) gamma_1 ... gamma_n.
  CMatrix complex_volume() const;

  /// Matrix of the vector sum_i v_i gamma_i.
  CMatrix vector_action(const RVector& v) const;

  CMatrix identity() const { return CMatrix::Identity(spinor_dim_, spinor_dim_); }

 private:
  std::vector<CMatrix> gammas_;
  int spinor_dim_ = 0;
};

struct RepResiduals {
  double anticommutation = 0.0;  ///< max ||g_i g_j + g_j g_i + 2 delta_ij||
  double skew_hermitian = 0.0;   ///< max ||g_i^* + g_i||
  double odd_volume = 0.0;       ///< ||omega - Id|| for odd n, 0 otherwise
};

/// Invariant suite shared by build and restrict.
RepResiduals invariant_residuals(const CliffordAlgebraRep& rep);

/// A Clifford element of grade <= 2: scalar + sum v_i e_i + sum a_jk e_j e_k.
class CliffordElement {
 public:
  struct BivectorTerm {
    int j;
    int k;
    double coefficient;
  };

  CliffordElement() = default;

  static CliffordElement scalar(Complex s, int n);
  static CliffordElement vector(const RVector& v);
  static CliffordElement basis_vector(int n, int i, double coefficient = 1.0);
  static CliffordElement bivector(int n, int j, int k, double coefficient = 1.0);

  CliffordElement& add_scalar(Complex s);
  CliffordElement& add_vector(const RVector& v);
  CliffordElement& add_bivector(int j, int k, double coefficient);

  int dim() const { return n_; }
  Complex scalar_part() const { return scalar_; }
  const RVector& vector_part() const { return vector_; }
  const std::vector<BivectorTerm>& bivector_part() const { return bivector_; }

  /// Matrix of this element in rep. Throws DimensionError on mismatch.
  CMatrix matrix(const CliffordAlgebraRep& rep) const;

 private:
  explicit CliffordElement(int n) : n_(n), vector_(RVector::Zero(n)) {}

  int n_ = 0;
  Complex scalar_{0.0, 0.0};
  RVector vector_;
  std::vector<BivectorTerm> bivector_;
};

/// element . psi
Spinor clifford_mul(const CliffordAlgebraRep& rep, const CliffordElement& element,
                    const Spinor& psi);

/// Hermitian product (phi, psi) = sum conj(phi_a) psi_a.
Complex spinor_inner(const Spinor& phi, const Spinor& psi);

/// Real part of the hermitian product of two raw component vectors.
double real_inner(const CVector& phi, const CVector& psi);

/// Identification of Cl(n) spinors with Cl(n-1) spinors across a unit normal:
/// gamma^Q_j = gamma_nu gamma_j for j != nu, kept in the cyclic order
/// nu+1, ..., nu+n-1 (mod n). Spinor components are unchanged. Requires odd n.
CliffordAlgebraRep restrict_rep(const CliffordAlgebraRep& rep, int normal_index);

/// Frame indices orthogonal to `normal_index`, in the cyclic order used by
/// restrict_rep. For odd n this order is positively oriented.
std::vector<int> complement_indices(int n, int normal_index);

}  // namespace spinflow

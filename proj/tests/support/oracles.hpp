#pragma once

// Independent reference computations for the tests. Nothing here calls the
// library's own solvers: Eigen is used only as a container and for a generic
// dense least-squares solve.

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "spinflow/frame_geometry.hpp"
#include "spinflow/types.hpp"

namespace oracle {

using spinflow::CMatrix;
using spinflow::Complex;
using spinflow::CVector;
using spinflow::RMatrix;
using spinflow::RVector;
using spinflow::StructureConstant;
using spinflow::Tensor3;

/// Eigenvalues (ascending) of a hermitian matrix by cyclic complex Jacobi rotations.
std::vector<double> jacobi_eigenvalues(CMatrix a, double tol = 1e-14, int max_sweeps = 100);

/// Number of eigenvalues of sum_i A_i^* A_i below tol, i.e. the common nullity.
int common_nullity(const std::vector<CMatrix>& mats, double tol = 1e-9);

/// Gamma solved from the linear system "metric compatible + torsion c" in n^3
/// unknowns, without the closed form.
Tensor3 koszul_by_linear_solve(const Tensor3& c);

/// Ricci tensor from R(e_i,e_j) = G_j G_i - G_i G_j - sum_m c_ij^m G_m with
/// connection matrices G_i(k, l) = Gamma(i, k, l).
RMatrix ricci_by_composition(const Tensor3& gamma, const Tensor3& c);

/// Seeded generator with helpers for random data.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform(double lo = -1.0, double hi = 1.0) {
    return std::uniform_real_distribution<double>(lo, hi)(gen_);
  }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }
  RVector vector(int n) {
    RVector v(n);
    for (int i = 0; i < n; ++i) v(i) = uniform();
    return v;
  }
  RMatrix matrix(int r, int c) {
    RMatrix m(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) m(i, j) = uniform();
    return m;
  }
  RMatrix skew(int n) {
    const RMatrix m = matrix(n, n);
    return m - m.transpose();
  }
  CVector spinor(int size) {
    CVector v(size);
    for (int i = 0; i < size; ++i) v(i) = Complex(uniform(), uniform());
    return v;
  }
  /// Haar-ish orthogonal matrix from QR of a random matrix.
  RMatrix orthogonal(int n);

 private:
  std::mt19937_64 gen_;
};

/// A random Lie algebra together with a distinguished frame index for flows.
struct RandomAlgebra {
  Tensor3 c;
  int xi = 0;
  const char* family = "";
};

/// Structure constants as the raw list validate_frame expects (i < j entries).
std::vector<StructureConstant> to_raw(const Tensor3& c);

/// Two-step nilpotent: xi central, [q_a, q_b] = w_ab xi. Riemannian, minimal.
RandomAlgebra heisenberg_type(Rng& rng, int n);
/// R xi semidirect R^{n-1} through a derivation D; Riemannian iff D is skew.
RandomAlgebra semidirect(Rng& rng, int n, bool skew_derivation);
/// [e_0, x] = a x + S x with S skew on e_2..; xi = e_1 gives a Riemannian flow
/// with nonzero mean curvature a e_0.
RandomAlgebra affine(Rng& rng, int n);
/// su(2) scaled by lambda: c_ij^k = 2 lambda eps_ijk.
RandomAlgebra scaled_su2(double lambda);
/// Block sum of two algebras; xi taken from the first.
RandomAlgebra direct_sum(const RandomAlgebra& a, const RandomAlgebra& b);
/// Change of orthonormal frame f_i = sum_j R(i, j) e_j.
Tensor3 rotate(const Tensor3& c, const RMatrix& r);
/// Rotation fixing e_xi and mixing the complement.
RMatrix rotation_fixing(Rng& rng, int n, int xi);

/// One algebra from a randomly chosen family, rotated by a random frame
/// change that keeps xi. Every family here defines a Riemannian flow.
RandomAlgebra random_riemannian_flow(Rng& rng);
/// One algebra from any family (flows not necessarily Riemannian), fully rotated.
RandomAlgebra random_algebra(Rng& rng);

}  // namespace oracle

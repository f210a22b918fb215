#pragma once

#include <vector>

#include "spinflow/bilinear.hpp"
#include "spinflow/types.hpp"

namespace spinflow {

/// One raw structure constant: [e_i, e_j] has e_k-component `value`.
/// Indices are 0-based here; the JSON layer converts from 1-based.
struct StructureConstant {
  int i;
  int j;
  int k;
  double value;
};

/// Lie group with a left-invariant metric presented by an orthonormal frame:
/// [e_i, e_j] = sum_k c(i, j, k) e_k with constant c.
class FrameManifold {
 public:
  int dim() const { return c_.dim(); }
  const Tensor3& structure() const { return c_; }
  double c(int i, int j, int k) const { return c_(i, j, k); }

  /// Largest Jacobi residual found by validate_frame.
  double jacobi_residual() const { return jacobi_residual_; }

 private:
  friend FrameManifold validate_frame(int n, const std::vector<StructureConstant>& raw,
                                      double jacobi_tol);
  Tensor3 c_;
  double jacobi_residual_ = 0.0;
};

/// Tolerance for the Jacobi identity in validate_frame.
inline constexpr double kJacobiTolerance = 1e-10;

/// Builds a FrameManifold from raw entries, completing c(j,i,k) = -c(i,j,k).
/// Entries given for both (i,j) and (j,i) must agree. Throws InvalidArgument
/// for bad indices and JacobiViolation (worst triple attached) when the
/// Jacobi sum exceeds jacobi_tol.
FrameManifold validate_frame(int n, const std::vector<StructureConstant>& raw,
                             double jacobi_tol = kJacobiTolerance);

/// max_{i,j,k,m} |sum_cyc sum_l c_ij^l c_lk^m|; also reports the worst triple.
double jacobi_residual(const Tensor3& c, int* wi = nullptr, int* wj = nullptr,
                       int* wk = nullptr);

/// Gamma(i, j, k) = g(nabla_{e_i} e_j, e_k).
struct LeviCivitaConnection {
  Tensor3 gamma;

  int dim() const { return gamma.dim(); }
  /// Matrix (Gamma_i)_{jk} = Gamma(i, j, k).
  RMatrix direction(int i) const;
};

/// Koszul closed form Gamma_ij^k = (c_ij^k - c_jk^i + c_ki^j) / 2.
LeviCivitaConnection levi_civita(const FrameManifold& m);

struct ConnectionResiduals {
  double metric = 0.0;   ///< max |Gamma_ij^k + Gamma_ik^j|
  double torsion = 0.0;  ///< max |Gamma_ij^k - Gamma_ji^k - c_ij^k|
};
ConnectionResiduals connection_residuals(const FrameManifold& m,
                                         const LeviCivitaConnection& conn);

/// R(i,j,k,l) = g(R(e_i,e_j)e_k, e_l) with R(X,Y) = [nabla_X, nabla_Y] - nabla_[X,Y];
/// ricci(i,l) = sum_j R(i,j,j,l), i.e. Ric(e_i) = sum_j R(e_i,e_j)e_j.
struct CurvatureData {
  Tensor4 riemann;
  RMatrix ricci;
  double scal = 0.0;
};

CurvatureData riemann_curvature(const FrameManifold& m, const LeviCivitaConnection& conn);

struct CurvatureResiduals {
  double antisymmetry = 0.0;  ///< R_ijkl + R_jikl and R_ijkl + R_ijlk
  double bianchi = 0.0;       ///< R_ijkl + R_jkil + R_kijl
  double ricci_symmetry = 0.0;
  double scal_trace = 0.0;
};
CurvatureResiduals curvature_residuals(const CurvatureData& curv);

/// (L_x g)(e_i, e_j) = g(nabla_{e_i} x, e_j) + g(nabla_{e_j} x, e_i) for the
/// constant-coefficient vector x = sum_k x_k e_k.
BilinearTensor lie_derivative_metric(const LeviCivitaConnection& conn, const RVector& x);

/// Same, for x = e_index.
BilinearTensor lie_derivative_metric(const LeviCivitaConnection& conn, int index);

/// sum_i c_ij^i for each j; all zero for unimodular algebras.
RVector modular_vector(const FrameManifold& m);

}  // namespace spinflow

#pragma once

#include <optional>

#include "spinflow/bilinear.hpp"
#include "spinflow/spinor_fields.hpp"

namespace spinflow {

struct FlowStructure;

/// E(e_i, e_j) = Re(gamma_j M_i Psi, Psi) / |Psi|^2 and its split into the
/// symmetric part T (energy-momentum tensor) and the skew part Q.
struct EnergyMomentum {
  BilinearTensor E;
  BilinearTensor T;
  BilinearTensor Q;
};

EnergyMomentum emt_tensors(const SpinorField& field);

/// T and Q evaluated straight from their defining formulas
/// T(X,Y) = 1/2 Re(X.nabla_Y Psi + Y.nabla_X Psi, Psi)/|Psi|^2,
/// Q(X,Y) = 1/2 Re(Y.nabla_X Psi - X.nabla_Y Psi, Psi)/|Psi|^2,
/// without going through E.
EnergyMomentum emt_tensors_direct(const SpinorField& field);

/// A lower bound for lambda^2 evaluated at the (homogeneous) point.
struct BoundCheck {
  double rhs = 0.0;
  double slack = 0.0;  ///< lambda^2 - rhs
  bool holds = false;  ///< slack >= -tol
  bool equality = false;
};

struct BoundReport {
  double lambda_sq = 0.0;
  double scal = 0.0;
  double t_norm_sq = 0.0;
  double q_norm_sq = 0.0;
  BoundCheck friedrich;              ///< n Scal / (4(n-1))
  std::optional<BoundCheck> emt;     ///< Scal/4 + |T|^2; only for eigenspinors of D
  BoundCheck main;                   ///< Scal/4 + |T|^2 + |Q|^2
  std::optional<BoundCheck> flow;    ///< Scal/4 + |E_xi|^2 (flow tensor)
  std::optional<BoundCheck> flow_q;  ///< Scal/4 + |E_xi|^2 restricted to Q
  double equality_residual = 0.0;    ///< equality_residual(field, E)
};

/// All infima are pointwise values in the homogeneous model. Throws
/// NotAnEigenspinor when Psi is not a D^2 eigenvector.
BoundReport check_bounds(const SpinorField& field, double scal,
                         const FlowStructure* flow = nullptr,
                         double tol = kDefaultTolerance);

/// max_i ||M_i Psi + (sum_j E(i,j) gamma_j) Psi|| / ||Psi||.
double equality_residual(const SpinorField& field, const BilinearTensor& E);

/// lhs = sum_i ||M_i Psi + E(e_i).Psi||^2, rhs = sum_i ||M_i Psi||^2 - |E|^2 |Psi|^2.
struct IdentitySides {
  double lhs = 0.0;
  double rhs = 0.0;
};
IdentitySides modified_connection_identity(const SpinorField& field);

struct PairingReport {
  double re_twisted = 0.0;   ///< Re(D~ Psi, Psi)
  double paired = 0.0;       ///< (J, Q) |Psi|^2 with J read as g(J e_i, e_j)
  double q_norm_sq = 0.0;
  double jq_sq_over_n = 0.0; ///< (J, Q)^2 / n
  double t_norm_sq = 0.0;
  double tr_t_sq_over_n = 0.0;
};
PairingReport pairing_identity(const SpinorField& field, const RMatrix& J);

/// The bilinear form g(J e_i, e_j) of a complex structure given on column vectors.
BilinearTensor complex_structure_form(const RMatrix& J);

}  // namespace spinflow

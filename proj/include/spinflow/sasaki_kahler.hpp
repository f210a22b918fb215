#pragma once

#include <optional>
#include <vector>

#include "spinflow/clifford.hpp"
#include "spinflow/foliation.hpp"
#include "spinflow/frame_geometry.hpp"
#include "spinflow/spinor_fields.hpp"

namespace spinflow {

/// Tolerance for the Sasakian axioms.
inline constexpr double kSasakiTolerance = 1e-12;

/// Ric = beta g + gamma xi (x) xi, fitted by least squares in Frobenius norm.
struct EtaEinsteinFit {
  double beta = 0.0;
  double gamma = 0.0;
  double residual = 0.0;  ///< ||Ric - beta I - gamma xi xi^T||_F
  int m = 0;
  double sum_residual = 0.0;  ///< |beta + gamma - 2m|
  bool sum_matches = false;
};

/// Throws InvalidArgument for a non-symmetric or mis-sized matrix and
/// NotEtaEinstein when the fit residual exceeds tol.
EtaEinsteinFit eta_einstein_fit(const RMatrix& ric, int xi_index, int m, double tol = 1e-9);

struct SasakiReport {
  bool is_unit_killing = false;
  double killing_residual = 0.0;  ///< max |h + h^T|
  double axiom1_residual = 0.0;   ///< max |h^2 + Id - xi xi^T|
  double axiom2_residual = 0.0;   ///< max |(nabla_X h)Y - g(xi,Y)X + g(X,Y)xi|
  bool sasakian = false;
  std::optional<EtaEinsteinFit> eta_einstein;
};

/// Sasakian axioms for xi = e_xi on an odd-dimensional frame manifold. h is
/// the constant matrix of X -> nabla_X xi, so (nabla_X h)Y = nabla_X(hY) - h(nabla_X Y).
SasakiReport check_sasakian(const FrameManifold& m, const LeviCivitaConnection& conn,
                            int xi_index, double tol = kSasakiTolerance);

/// Ric^nabla = Ric_M + 2 on Q and Ric_M xi = 2m xi.
struct TransversalRicciCheck {
  double q_residual = 0.0;   ///< max |Ric^nabla(a,b) - Ric_M(q_a,q_b) - 2 delta_ab|
  double xi_residual = 0.0;  ///< max_i |Ric_M(xi, e_i) - 2m delta_{xi i}|
};
TransversalRicciCheck transversal_ricci_check(const RMatrix& ric, const FlowStructure& flow,
                                              const TransversalConnection& transversal);

/// Ricci of the limiting case: Ric Z = -2Z on Q and Ric xi = 2m xi.
double limiting_ricci_residual(const RMatrix& ric, const FlowStructure& flow);

/// Omega = 1/2 sum_i e_i . J(e_i) . in a 2m-dimensional representation, with
/// its eigenbundles Sigma_r for the eigenvalues i(2r - m).
struct KahlerDecomposition {
  int m = 0;
  CMatrix omega;
  std::vector<Complex> eigenvalues;   ///< i(2r - m), r = 0..m
  std::vector<int> multiplicities;    ///< observed rank of Sigma_r
  std::vector<CMatrix> projectors;    ///< orthogonal projector onto Sigma_r
  Complex trace{0.0, 0.0};
  double skew_residual = 0.0;         ///< ||Omega^* + Omega||
  double spectrum_residual = 0.0;     ///< max distance of an eigenvalue to i(2r - m)
  double resolution_residual = 0.0;   ///< ||sum_r P_r - Id||
  double orthogonality_residual = 0.0;///< max_{r != s} ||P_r P_s||
  bool multiplicities_binomial = false;
};

/// J acts on Q column vectors (J(e_i) = sum_j J(j,i) e_j). Throws InvalidArgument
/// for an odd representation or an invalid J.
KahlerDecomposition kahler_form_spinor(const CliffordAlgebraRep& rep_q, const RMatrix& J);

/// Action of xi on each Sigma_r in dimension 3, with Cl(2) acting through
/// gamma^Q_a = xi gamma_a. With J(q_1) = b q_2 the decomposition satisfies
/// Omega = b xi, so xi acts on Sigma_r by i mu_r / b; the sign (-1)^{r+1} i is
/// the case b = 1.
struct XiActionReport {
  double b = 0.0;
  std::vector<Complex> observed;      ///< xi restricted to Sigma_r (multiple of Id)
  double omega_b_xi_residual = 0.0;   ///< ||Omega - b xi||
  double b_rule_residual = 0.0;       ///< max_r ||xi P_r - (i mu_r / b) P_r||
  double sign_rule_residual = 0.0;    ///< max_r ||xi P_r - (-1)^{r+1} i P_r||
  bool sign_rule_holds = false;
};
XiActionReport xi_action_rule(const CliffordAlgebraRep& rep3, int xi_index, const RMatrix& J);

/// Spinor identities of a Sasakian flow carrying a transversal parallel spinor:
/// nabla_xi Psi = 1/2 Omega Psi and nabla_Z Psi = 1/2 xi.h(Z).Psi, with J = h on Q.
struct SasakiSpinorReport {
  double xi_residual = 0.0;
  double q_residual = 0.0;
  std::optional<double> omega_b_xi_residual;  ///< n = 3: ||Omega Psi - b xi Psi|| / ||Psi||
};
SasakiSpinorReport sasaki_spinor_check(const SpinorField& field, const FlowStructure& flow);

}  // namespace spinflow

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spinflow/bilinear.hpp"
#include "spinflow/clifford.hpp"
#include "spinflow/frame_geometry.hpp"
#include "spinflow/spinor_fields.hpp"

namespace spinflow {

/// Tolerance for the riemannian / minimal flags.
inline constexpr double kFlowTolerance = 1e-10;

/// Unit field xi = e_xi defining a flow. Flow-mode sign: h(X) = nabla_X xi.
struct FlowStructure {
  int xi = 0;
  std::vector<int> q;       ///< frame indices orthogonal to xi (cyclic order)
  RMatrix h;                ///< h(i, j) = g(nabla_{e_i} xi, e_j); row i is h(e_i)
  RVector kappa;            ///< nabla_xi xi
  bool riemannian = false;  ///< h restricted to Q is skew
  bool minimal = false;     ///< kappa = 0
  double riemannian_residual = 0.0;
  double xi_column_residual = 0.0;  ///< max_i |h(i, xi)|
  std::optional<double> b;          ///< n = 3: h(q_1) = b q_2, h(q_2) = -b q_1

  // Geometric slices used by the flow identities.
  BilinearTensor lie_xi;    ///< L_xi g
  RMatrix bracket_xi;       ///< (i, j) = g([e_i, e_j], xi)
  RMatrix oneill_xi;        ///< (i, j) = g(nabla_{e_i} e_j, xi)

  int q_dim() const { return static_cast<int>(q.size()); }
  /// h restricted to Q x Q in the order of `q`.
  RMatrix h_q() const;
  /// J(Z) = h(Z) on Q, as a matrix acting on Q-column vectors.
  RMatrix complex_structure_q() const { return h_q().transpose(); }
};

FlowStructure flow_structure(const FrameManifold& m, const LeviCivitaConnection& conn,
                             int xi_index, double tol = kFlowTolerance);

/// O'Neill tensor on frame vectors, evaluated from its definition.
struct OneillReport {
  RMatrix a_zw;          ///< (a, b) = g(A_{q_a} q_b, xi)
  RMatrix a_z_xi;        ///< (a, c) = g(A_{q_a} xi, q_c)
  RMatrix half_bracket;  ///< (a, b) = 1/2 g([q_a, q_b], xi)
  double bracket_residual = 0.0;  ///< max |a_zw - half_bracket|
  double h_residual = 0.0;        ///< max |a_zw + g(h(q_a), q_b)| and |a_z_xi - h|
  double skew_residual = 0.0;     ///< max |a_zw + a_zw^T|
};

/// Throws NonRiemannianFlow when flow.riemannian is false.
OneillReport oneill(const FrameManifold& m, const LeviCivitaConnection& conn,
                    const FlowStructure& flow);

/// Codimension-one restriction across nu. Hypersurface-mode sign: h(X) = -nabla_X nu.
struct HypersurfaceReport {
  CliffordAlgebraRep rep_l;
  std::vector<CMatrix> induced;  ///< nabla^L_{e_i} = M_i - 1/2 h(e_i).nu.
  BilinearTensor t_phi;          ///< T^Phi(e_i, e_j) with pi^perp applied
  bool parallel_ambient = false;
  bool riemannian = false;            ///< h(nu) = 0
  bool normal_t_phi_vanishes = false; ///< T^Phi(nu, X) = 0 for X in L
  double weingarten_residual = 0.0;   ///< max_{X,Y in L} |T^Phi(X,Y) + 1/2 g(h(X), Y)|
  double lie_residual = 0.0;          ///< max_{X,Y in L} |T^Phi(X,Y) - 1/4 (L_nu g)(X,Y)|
  double normal_residual = 0.0;       ///< max_X |T^Phi(X, nu) + 1/4 g(X, h(nu))|
};

/// h(i, j) = g(h(e_i), e_j) is prescribed; L_nu g is taken as -(h + h^T).
HypersurfaceReport hypersurface_restrict(const SpinorField& field, int nu_index,
                                         const RMatrix& h, double tol = 1e-10);

/// h and L_nu g both come from the Levi-Civita connection.
HypersurfaceReport hypersurface_restrict(const SpinorField& field, int nu_index,
                                         const LeviCivitaConnection& conn, double tol = 1e-10);

/// Transversal Levi-Civita connection of a Riemannian flow and its spinorial
/// counterpart acting on frame-constant spinors.
struct TransversalConnection {
  int xi = 0;
  std::vector<int> q;
  std::vector<CMatrix> derivative;      ///< Gauss-formula route, one per direction
  std::vector<CMatrix> from_christoffel;///< spin lift of the transversal Christoffels
  std::vector<RMatrix> christoffel;     ///< [i](a, b) = g(nabla_{e_i} q_a, q_b)
  std::vector<std::vector<RMatrix>> curvature;  ///< [i][j](a, b) = g(R(e_i,e_j) q_a, q_b)
  RMatrix ricci;                        ///< transversal Ricci on Q (order of q)
  double scal_direct = 0.0;
  double scal_oneill = 0.0;             ///< Scal_M - 2 div_Q kappa + 2|kappa|^2 + |h|_Q^2
  double xi_curvature_residual = 0.0;   ///< max |R(xi, Y) Z|
  std::optional<double> route_residual; ///< max ||derivative_i - from_christoffel_i||, spin-connection fields only
  int kernel_dim = 0;                   ///< common nullspace of `derivative`
  double field_residual = 0.0;          ///< max_i ||derivative_i Psi|| / ||Psi||
};

/// Throws NonRiemannianFlow for non-Riemannian flows.
TransversalConnection transversal_connection(const FrameManifold& m,
                                             const LeviCivitaConnection& conn,
                                             const SpinorField& field,
                                             const FlowStructure& flow);

/// Dimension of the common nullspace of the given square matrices.
int common_kernel_dim(const std::vector<CMatrix>& mats, double tol = 1e-9);

/// Flow energy-momentum tensors E_xi(X,Y) = Re(xi.Y.nabla_X Psi, Psi)/|Psi|^2 and
/// the identities they satisfy when the normal bundle carries a parallel spinor.
struct FlowEnergyMomentum {
  BilinearTensor E;
  BilinearTensor T;
  BilinearTensor Q;
  double e_q_norm_sq = 0.0;  ///< |E|^2 over Q x Q

  double q_parallel_residual = 0.0;   ///< max_{Z in Q} ||(M_Z - 1/2 xi.h(Z)) Psi|| / ||Psi||
  double xi_parallel_residual = 0.0;  ///< ||(M_xi - 1/2 xi.kappa) Psi|| / ||Psi||
  /// ||(M_xi - 1/4 sum_a q_a.h(q_a) - 1/2 xi.kappa) Psi|| / ||Psi||; Riemannian flows only.
  std::optional<double> xi_transversal_residual;
  bool q_parallel = false;
  bool xi_parallel = false;
  /// Which relation established parallelism along xi: "gauss" (raw projection),
  /// "transversal" (transversal Levi-Civita, n = 3), or empty.
  std::string xi_hypothesis;

  std::optional<double> lie_residual;      ///< max |T(Z,W) + 1/4 (L_xi g)(Z,W)|
  std::optional<double> bracket_residual;  ///< max |Q(Z,W) - 1/4 g([Z,W], xi)|
  std::optional<double> kappa_residual;    ///< max |T(xi,Z) + 1/4 g(kappa, Z)|
  std::optional<double> oneill_residual;   ///< Riemannian: max |Q(Z,W) - 1/2 g(A_Z W, xi)|
  bool minimal_iff_mixed_t_vanishes = true;
};

/// Parallel hypotheses are tested against `parallel_tol` (relative to |Psi|).
FlowEnergyMomentum flow_emt(const SpinorField& field, const FlowStructure& flow,
                            double parallel_tol = 1e-12);

/// Three-dimensional minimal Riemannian flows: transversal parallel spinors
/// versus solutions of D Psi = (b/2) Psi.
struct ThreeDReport {
  double b = 0.0;
  int kernel_dim = 0;
  bool kernel_nonempty = false;
  double dirac_b_residual = 0.0;   ///< ||D Psi - (b/2) Psi|| / ||Psi||
  int solution_dim = 0;            ///< dim ker(D - b/2) on frame-constant spinors
  bool solution_exists = false;
  bool equivalent = false;         ///< kernel_nonempty == solution_exists
  double scal_transversal = 0.0;
  bool scal_nonnegative = false;
  CVector transversal_dirac;       ///< D_tr Phi = sum_a q_a ._Q nabla_{q_a} Phi
  double dirac_split_residual = 0.0;      ///< ||D Psi - sum_i e_i.nabla_i Psi - (b/2) Psi|| / ||Psi||
  double dtr_xi_residual = 0.0;    ///< ||D_tr Phi - nabla_xi Phi|| / ||Psi||
};

/// Requires n = 3 and a minimal Riemannian flow; throws InvalidArgument or
/// NonRiemannianFlow otherwise.
ThreeDReport three_d_equivalence(const SpinorField& field, const FlowStructure& flow,
                                 const TransversalConnection& transversal,
                                 double tol = kDefaultTolerance);

}  // namespace spinflow

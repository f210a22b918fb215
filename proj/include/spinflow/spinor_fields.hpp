#pragma once

#include <optional>
#include <vector>

#include "spinflow/clifford.hpp"
#include "spinflow/frame_geometry.hpp"
#include "spinflow/types.hpp"

namespace spinflow {

/// omega_i = 1/2 sum_{j<k} Gamma_ij^k gamma_j gamma_k, so that a frame-constant
/// spinor satisfies nabla_{e_i} Psi = omega_i Psi.
std::vector<CMatrix> spin_connection(const LeviCivitaConnection& conn,
                                     const CliffordAlgebraRep& rep);

/// A frame-constant spinor together with its derivatives nabla_{e_i} Psi = M_i Psi.
///
/// `frame_connection` holds the spin connection of the frame (zero matrices when
/// the frame is taken normal at the evaluation point). It differentiates
/// Clifford coefficients through nabla_i (C.Psi) = [omega_i, C] Psi + C nabla_i Psi
/// and is only needed for second derivatives.
class SpinorField {
 public:
  enum class Source { FromSpinConnection, Prescribed };

  const CliffordAlgebraRep& rep() const { return rep_; }
  int dim() const { return rep_.dim(); }
  const Spinor& psi() const { return psi_; }
  const std::vector<CMatrix>& derivatives() const { return deriv_; }
  const CMatrix& derivative(int i) const { return deriv_.at(static_cast<std::size_t>(i)); }
  const std::vector<CMatrix>& frame_connection() const { return frame_connection_; }
  Source source() const { return source_; }

  /// Value of nabla_{e_i} Psi.
  CVector derivative_of_psi(int i) const { return derivative(i) * psi_.components(); }

  /// max_i |Re(M_i Psi, Psi)| / |Psi|^2; zero means |Psi| is constant.
  double norm_drift() const { return norm_drift_; }
  bool constant_norm(double tol = 1e-12) const { return norm_drift_ <= tol; }

 private:
  friend SpinorField make_field(const CliffordAlgebraRep&, const Spinor&,
                                const std::vector<CMatrix>&);
  friend SpinorField make_prescribed_field(const CliffordAlgebraRep&, const Spinor&,
                                           const std::vector<CMatrix>&,
                                           std::optional<std::vector<CMatrix>>);
  SpinorField(CliffordAlgebraRep rep, Spinor psi, std::vector<CMatrix> deriv,
              std::vector<CMatrix> frame_connection, Source source);

  CliffordAlgebraRep rep_;
  Spinor psi_;
  std::vector<CMatrix> deriv_;
  std::vector<CMatrix> frame_connection_;
  Source source_;
  double norm_drift_ = 0.0;
};

/// Field whose derivatives come from the spin connection (all frame-constant
/// spinors share the same operators). Throws InvalidArgument on a zero spinor
/// and DimensionError on size mismatch.
SpinorField make_field(const CliffordAlgebraRep& rep, const Spinor& psi0,
                       const std::vector<CMatrix>& spin_conn);

/// Field with explicit derivative matrices M_i (typically Clifford elements).
SpinorField make_prescribed_field(const CliffordAlgebraRep& rep, const Spinor& psi0,
                                  const std::vector<CMatrix>& deriv,
                                  std::optional<std::vector<CMatrix>> frame_connection =
                                      std::nullopt);

/// Convenience overload taking Clifford elements A_i with M_i = A_i.
SpinorField make_prescribed_field(const CliffordAlgebraRep& rep, const Spinor& psi0,
                                  const std::vector<CliffordElement>& prescriptions,
                                  std::optional<std::vector<CMatrix>> frame_connection =
                                      std::nullopt);

struct DiracData {
  CMatrix dirac_matrix;        ///< D = sum_i gamma_i M_i
  CVector value;               ///< D Psi
  CVector square_value;        ///< D^2 Psi (Leibniz rule through the frame connection)
  std::optional<double> lambda_sq;
  double eigen_residual = 0.0; ///< ||D^2 Psi - lambda^2 Psi|| / ||Psi||
};

DiracData dirac(const SpinorField& field, double tol = kDefaultTolerance);

/// Real part of the Rayleigh quotient of D^2 at Psi. Throws NotAnEigenspinor
/// when ||D^2 Psi - lambda^2 Psi|| > tol ||Psi||.
double rayleigh_eigencheck(const SpinorField& field, double tol = kDefaultTolerance);

/// Checks that J is orthogonal with J^2 = -Id (tolerance 1e-10) in even dimension.
/// J acts on column vectors: J(e_i) = sum_j J(j, i) e_j.
void validate_complex_structure(const RMatrix& J, int n);

/// D~ Psi = sum_i J(e_i) . nabla_{e_i} Psi.
Spinor twisted_dirac(const SpinorField& field, const RMatrix& J);

/// Matrix of the twisted operator on frame-constant spinors.
CMatrix twisted_dirac_matrix(const SpinorField& field, const RMatrix& J);

/// Matrix-level comparison of D~ with D on frame-constant spinors. These
/// relations need extra symmetry, so they are reported rather than enforced.
struct TwistedComparison {
  double square_difference = 0.0;  ///< ||D~^2 - D^2||
  double anticommutator = 0.0;     ///< ||D~ D + D D~||
};
TwistedComparison compare_twisted(const SpinorField& field, const RMatrix& J);

}  // namespace spinflow

#pragma once

// Small hand-built manifolds for the unit tests. These are written out here
// rather than taken from the catalog so the two can disagree.

#include <vector>

#include "spinflow/clifford.hpp"
#include "spinflow/frame_geometry.hpp"
#include "spinflow/spinor_fields.hpp"

namespace fixtures {

using namespace spinflow;

inline FrameManifold nil3(double tau) { return validate_frame(3, {{0, 1, 2, 2.0 * tau}}); }
inline FrameManifold sol3() { return validate_frame(3, {{0, 2, 0, 1.0}, {1, 2, 1, -1.0}}); }
inline FrameManifold su2() {
  return validate_frame(3, {{0, 1, 2, 2.0}, {1, 2, 0, 2.0}, {2, 0, 1, 2.0}});
}
inline FrameManifold flat(int n) { return validate_frame(n, {}); }

struct Built {
  FrameManifold m;
  LeviCivitaConnection conn;
  CliffordAlgebraRep rep;
  SpinorField field;
};

inline Built build(const FrameManifold& m, CVector psi = {}) {
  auto conn = levi_civita(m);
  auto rep = CliffordAlgebraRep::build(m.dim());
  if (psi.size() == 0) {
    psi = CVector::Zero(rep.spinor_dim());
    psi(0) = 1.0;
  }
  auto field = make_field(rep, Spinor(psi), spin_connection(conn, rep));
  return {m, conn, rep, field};
}

/// Frame order (xi, e_1, e_2): nabla_xi = 0, nabla_1 = 1/2 e_2., nabla_2 = -1/2 e_1.
inline SpinorField s1xs2_field(const CliffordAlgebraRep& rep, CVector psi = {}) {
  if (psi.size() == 0) {
    psi = CVector::Zero(2);
    psi(0) = 1.0;
  }
  return make_prescribed_field(rep, Spinor(psi),
                               std::vector<CliffordElement>{
                                   CliffordElement::scalar(0.0, 3),
                                   CliffordElement::basis_vector(3, 2, 0.5),
                                   CliffordElement::basis_vector(3, 1, -0.5),
                               });
}

inline double max_abs(const CMatrix& m) { return m.cwiseAbs().maxCoeff(); }
inline double max_abs(const RMatrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace fixtures

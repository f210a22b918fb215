#include "spinflow/frame_geometry.hpp"

#include <cmath>
#include <algorithm>
#include <string>
#include <tuple>

#include "spinflow/errors.hpp"

namespace spinflow {

double jacobi_residual(const Tensor3& c, int* wi, int* wj, int* wk) {
  const int n = c.dim();
  double worst = 0.0;
  int bi = 0, bj = 0, bk = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        for (int m = 0; m < n; ++m) {
          double s = 0.0;
          for (int l = 0; l < n; ++l)
            s += c(i, j, l) * c(l, k, m) + c(j, k, l) * c(l, i, m) +
                 c(k, i, l) * c(l, j, m);
          if (std::abs(s) > worst) {
            worst = std::abs(s);
            bi = i;
            bj = j;
            bk = k;
          }
        }
  if (wi) *wi = bi;
  if (wj) *wj = bj;
  if (wk) *wk = bk;
  return worst;
}

FrameManifold validate_frame(int n, const std::vector<StructureConstant>& raw,
                             double jacobi_tol) {
  if (n < 1) throw InvalidArgument("frame dimension must be >= 1");
  Tensor3 c(n);
  Tensor3 seen(n);
  for (const auto& e : raw) {
    if (e.i < 0 || e.i >= n || e.j < 0 || e.j >= n || e.k < 0 || e.k >= n)
      throw InvalidArgument("structure constant index (" + std::to_string(e.i + 1) + ", " +
                            std::to_string(e.j + 1) + ", " + std::to_string(e.k + 1) +
                            ") out of range for dimension " + std::to_string(n));
    if (e.i == e.j) {
      if (e.value != 0.0)
        throw InvalidArgument("[e_i, e_i] must vanish (index " + std::to_string(e.i + 1) +
                              ")");
      continue;
    }
    for (const auto& [a, b, sign] : {std::tuple{e.i, e.j, 1.0}, std::tuple{e.j, e.i, -1.0}}) {
      const double v = sign * e.value;
      if (seen(a, b, e.k) != 0.0 && c(a, b, e.k) != v)
        throw InvalidArgument("conflicting entries for [e_" + std::to_string(e.i + 1) +
                              ", e_" + std::to_string(e.j + 1) + "]");
      c(a, b, e.k) = v;
      seen(a, b, e.k) = 1.0;
    }
  }
  int wi = 0, wj = 0, wk = 0;
  const double res = jacobi_residual(c, &wi, &wj, &wk);
  if (res > jacobi_tol)
    throw JacobiViolation("Jacobi identity violated by " + std::to_string(res) +
                              " at triple (" + std::to_string(wi + 1) + ", " +
                              std::to_string(wj + 1) + ", " + std::to_string(wk + 1) + ")",
                          wi, wj, wk, res);
  FrameManifold m;
  m.c_ = c;
  m.jacobi_residual_ = res;
  return m;
}

RMatrix LeviCivitaConnection::direction(int i) const {
  const int n = dim();
  RMatrix out(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) out(j, k) = gamma(i, j, k);
  return out;
}

LeviCivitaConnection levi_civita(const FrameManifold& m) {
  const int n = m.dim();
  LeviCivitaConnection conn{Tensor3(n)};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        conn.gamma(i, j, k) = 0.5 * (m.c(i, j, k) - m.c(j, k, i) + m.c(k, i, j));
  return conn;
}

ConnectionResiduals connection_residuals(const FrameManifold& m,
                                         const LeviCivitaConnection& conn) {
  ConnectionResiduals r;
  const int n = m.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        r.metric = std::max(r.metric, std::abs(conn.gamma(i, j, k) + conn.gamma(i, k, j)));
        r.torsion = std::max(r.torsion, std::abs(conn.gamma(i, j, k) - conn.gamma(j, i, k) -
                                                 m.c(i, j, k)));
      }
  return r;
}

CurvatureData riemann_curvature(const FrameManifold& m, const LeviCivitaConnection& conn) {
  const int n = m.dim();
  if (conn.dim() != n) throw DimensionError("connection and frame differ in dimension");
  const auto& G = conn.gamma;
  CurvatureData out{Tensor4(n), RMatrix::Zero(n, n), 0.0};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int q = 0; q < n; ++q) {
          double s = 0.0;
          for (int l = 0; l < n; ++l)
            s += G(j, k, l) * G(i, l, q) - G(i, k, l) * G(j, l, q) - m.c(i, j, l) * G(l, k, q);
          out.riemann(i, j, k, q) = s;
        }
  for (int i = 0; i < n; ++i)
    for (int l = 0; l < n; ++l) {
      double s = 0.0;
      for (int j = 0; j < n; ++j) s += out.riemann(i, j, j, l);
      out.ricci(i, l) = s;
    }
  out.scal = out.ricci.trace();
  return out;
}

CurvatureResiduals curvature_residuals(const CurvatureData& curv) {
  CurvatureResiduals r;
  const auto& R = curv.riemann;
  const int n = R.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          r.antisymmetry = std::max({r.antisymmetry, std::abs(R(i, j, k, l) + R(j, i, k, l)),
                                     std::abs(R(i, j, k, l) + R(i, j, l, k))});
          r.bianchi =
              std::max(r.bianchi, std::abs(R(i, j, k, l) + R(j, k, i, l) + R(k, i, j, l)));
        }
  r.ricci_symmetry = (curv.ricci - curv.ricci.transpose()).cwiseAbs().maxCoeff();
  r.scal_trace = std::abs(curv.scal - curv.ricci.trace());
  return r;
}

BilinearTensor lie_derivative_metric(const LeviCivitaConnection& conn, const RVector& x) {
  const int n = conn.dim();
  if (x.size() != n) throw DimensionError("Lie derivative direction has wrong length");
  RMatrix out = RMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double s = 0.0;
      for (int k = 0; k < n; ++k) s += x(k) * (conn.gamma(i, k, j) + conn.gamma(j, k, i));
      out(i, j) = s;
    }
  return BilinearTensor(out);
}

BilinearTensor lie_derivative_metric(const LeviCivitaConnection& conn, int index) {
  if (index < 0 || index >= conn.dim()) throw InvalidArgument("frame index out of range");
  return lie_derivative_metric(conn, RVector::Unit(conn.dim(), index));
}

RVector modular_vector(const FrameManifold& m) {
  const int n = m.dim();
  RVector out = RVector::Zero(n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) out(j) += m.c(i, j, i);
  return out;
}

}  // namespace spinflow

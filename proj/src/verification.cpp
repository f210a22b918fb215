#include "spinflow/verification.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <sstream>
#include <tuple>

#include "spinflow/clifford.hpp"
#include "spinflow/emt_bounds.hpp"
#include "spinflow/errors.hpp"
#include "spinflow/foliation.hpp"
#include "spinflow/frame_geometry.hpp"
#include "spinflow/sasaki_kahler.hpp"
#include "spinflow/spinor_fields.hpp"

namespace spinflow {
namespace {

using nlohmann::json;

std::string entry_id(const std::string& prefix, std::initializer_list<int> idx) {
  std::ostringstream os;
  os << prefix << '[';
  bool first = true;
  for (int i : idx) {
    if (!first) os << ',';
    os << i + 1;
    first = false;
  }
  os << ']';
  return os.str();
}

class Recorder {
 public:
  Recorder(const ManifoldSpec& spec, double tol, VerificationReport& out)
      : spec_(spec), tol_(tol), out_(out) {}

  double tol() const { return tol_; }

  void equality(const std::string& id, const std::string& desc, double computed,
                double expected, const std::string& origin) {
    CheckRecord r;
    r.id = id;
    r.description = desc;
    r.kind = CheckKind::Equality;
    r.origin = origin;
    r.expected = expected;
    if (std::isfinite(computed)) {
      r.computed = computed;
      r.abs_err = std::abs(computed - expected);
      r.pass = *r.abs_err <= tol_;
    } else {
      r.pass = false;
    }
    out_.checks.push_back(r);
  }

  void identity(const std::string& id, const std::string& desc, double residual) {
    equality(id, desc, residual, 0.0, "identity");
  }

  /// Flag that must be true, recorded as 1 against 1.
  void holds(const std::string& id, const std::string& desc, bool value) {
    equality(id, desc, value ? 1.0 : 0.0, 1.0, "identity");
  }

  void inequality(const std::string& id, const std::string& desc, double slack) {
    CheckRecord r;
    r.id = id;
    r.description = desc;
    r.kind = CheckKind::Inequality;
    r.origin = "identity";
    r.expected = 0.0;
    if (std::isfinite(slack)) {
      r.computed = slack;
      r.abs_err = std::max(0.0, -slack);
      r.pass = slack >= -tol_;
    } else {
      r.pass = false;
    }
    out_.checks.push_back(r);
  }

  void info(const std::string& id, const std::string& desc, std::optional<double> value = {}) {
    CheckRecord r;
    r.id = id;
    r.description = desc;
    r.kind = CheckKind::Info;
    r.origin = "note";
    r.computed = value;
    out_.checks.push_back(r);
  }

  void error(const std::string& id, const std::string& message) {
    CheckRecord r;
    r.id = id;
    r.description = message;
    r.kind = CheckKind::Equality;
    r.origin = "error";
    r.pass = false;
    out_.checks.push_back(r);
  }

  bool has(const std::string& key) const { return spec_.expected.contains(key); }
  const json& value(const std::string& key) {
    consumed_.insert(key);
    return spec_.expected.at(key);
  }
  void consume(const std::string& key) { consumed_.insert(key); }
  bool consumed(const std::string& key) const { return consumed_.count(key) > 0; }

  static double as_number(const json& v) {
    if (v.is_boolean()) return v.get<bool>() ? 1.0 : 0.0;
    if (v.is_number()) return v.get<double>();
    throw SpecError(SpecError::Kind::Schema, "expected value must be a number or flag");
  }

  void golden(const std::string& key, const std::string& id, const std::string& desc,
              double computed) {
    if (!has(key)) return;
    equality(id, desc, computed, as_number(value(key)), "expected");
  }

  void golden_flag(const std::string& key, const std::string& id, const std::string& desc,
                   bool computed) {
    if (has(key))
      golden(key, id, desc, computed ? 1.0 : 0.0);
    else
      info(id, desc, computed ? 1.0 : 0.0);
  }

  void golden_matrix(const std::string& key, const std::string& prefix, const std::string& desc,
                     const RMatrix& computed) {
    if (!has(key)) return;
    const json& m = value(key);
    const int n = static_cast<int>(computed.rows());
    if (!m.is_array() || static_cast<int>(m.size()) != n) {
      error(prefix, "expected." + key + " must be a " + std::to_string(n) + "x" +
                        std::to_string(n) + " matrix");
      return;
    }
    for (int i = 0; i < n; ++i) {
      if (!m[i].is_array() || static_cast<int>(m[i].size()) != n) {
        error(prefix, "expected." + key + " row " + std::to_string(i + 1) + " has wrong length");
        return;
      }
      for (int j = 0; j < n; ++j)
        equality(entry_id(prefix, {i, j}), desc, computed(i, j), as_number(m[i][j]), "expected");
    }
  }

 private:
  const ManifoldSpec& spec_;
  double tol_;
  VerificationReport& out_;
  std::set<std::string> consumed_;
};

struct Context {
  std::optional<CliffordAlgebraRep> rep;
  std::optional<LeviCivitaConnection> conn;
  std::optional<CurvatureData> curv;
  std::optional<SpinorField> field;
  std::optional<DiracData> dirac;
  std::optional<double> scal;
  std::optional<FlowStructure> flow;
  std::optional<TransversalConnection> transversal;
};

void geometry_group(const ManifoldSpec& spec, Context& c, Recorder& r) {
  const int n = spec.dim;
  if (spec.frame) {
    const auto& m = *spec.frame;
    r.identity("geometry.jacobi", "Jacobi identity of the structure constants", m.jacobi_residual());
    const auto cr = connection_residuals(m, *c.conn);
    r.identity("geometry.metric_compatibility", "Gamma_ij^k + Gamma_ik^j = 0", cr.metric);
    r.identity("geometry.torsion_free", "Gamma_ij^k - Gamma_ji^k = c_ij^k", cr.torsion);
    const auto rr = curvature_residuals(*c.curv);
    r.identity("geometry.curvature_antisymmetry", "R_ijkl = -R_jikl = -R_ijlk", rr.antisymmetry);
    r.identity("geometry.bianchi", "first Bianchi identity", rr.bianchi);
    r.identity("geometry.ricci_symmetry", "Ricci tensor is symmetric", rr.ricci_symmetry);
    r.identity("geometry.scal_trace", "Scal equals the trace of Ricci", rr.scal_trace);

    r.golden("scal", "geometry.scal", "scalar curvature", c.curv->scal);
    r.golden_matrix("ricci", "geometry.ricci", "Ricci tensor", c.curv->ricci);

    std::set<std::tuple<int, int, int>> listed;
    if (r.has("christoffel")) {
      const json& list = r.value("christoffel");
      for (const json& e : list) {
        if (!e.is_array() || e.size() != 4) {
          r.error("geometry.christoffel", "expected.christoffel entries are [i, j, k, value]");
          continue;
        }
        const int i = e[0].get<int>() - 1, j = e[1].get<int>() - 1, k = e[2].get<int>() - 1;
        if (std::min({i, j, k}) < 0 || std::max({i, j, k}) >= n) {
          r.error("geometry.christoffel", "expected.christoffel index outside the frame");
          continue;
        }
        listed.insert({i, j, k});
        r.equality(entry_id("geometry.christoffel", {i, j, k}), "Gamma_ij^k = g(nabla_i e_j, e_k)",
                   c.conn->gamma(i, j, k), Recorder::as_number(e[3]), "expected");
      }
    }
    if (r.has("christoffel_other_zero")) {
      double worst = 0.0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int k = 0; k < n; ++k)
            if (!listed.count({i, j, k})) worst = std::max(worst, std::abs(c.conn->gamma(i, j, k)));
      if (r.value("christoffel_other_zero").get<bool>())
        r.equality("geometry.christoffel_other_zero", "Christoffel symbols not listed vanish", worst,
                   0.0, "expected");
      else  // claimed false: some unlisted symbol must be nonzero
        r.equality("geometry.christoffel_other_zero", "some Christoffel symbol not listed is nonzero",
                   worst > r.tol() ? 1.0 : 0.0, 1.0, "expected");
    }
  }
  if (spec.overrides.scal) r.info("geometry.scal_override", "scalar curvature supplied by the spec",
                                  *spec.overrides.scal);
  if (spec.overrides.ric) {
    const RMatrix& ric = *spec.overrides.ric;
    r.identity("geometry.ric_override_symmetry", "supplied Ricci tensor is symmetric",
               (ric - ric.transpose()).cwiseAbs().maxCoeff());
    if (spec.overrides.scal)
      r.identity("geometry.ric_override_trace", "supplied Scal equals the trace of supplied Ricci",
                 std::abs(ric.trace() - *spec.overrides.scal));
  }
}

void spinor_group(const ManifoldSpec& spec, Context& c, Recorder& r) {
  const auto& field = *c.field;
  const auto& d = *c.dirac;
  const CVector& psi = field.psi().components();
  const double n2 = psi.squaredNorm();
  r.identity("spinor.norm_constant", "Re(nabla_i Psi, Psi) = 0", field.norm_drift());
  if (field.source() == SpinorField::Source::FromSpinConnection) {
    double skew = 0.0;
    for (const auto& w : field.derivatives()) skew = std::max(skew, (w + w.adjoint()).norm());
    r.identity("spinor.connection_skew", "spin connection matrices are skew-hermitian", skew);
  }
  const Complex mu = psi.dot(d.value) / n2;
  r.info("spinor.dirac_rayleigh", "Re(D Psi, Psi)/|Psi|^2", mu.real());
  if (r.has("dirac_eigenvalue")) {
    r.golden("dirac_eigenvalue", "spinor.dirac_eigenvalue", "eigenvalue of D at Psi", mu.real());
    r.identity("spinor.dirac_eigen_residual", "||D Psi - mu Psi|| / ||Psi||",
               (d.value - mu * psi).norm() / psi.norm());
  }
  if (r.has("dirac_vector")) {
    const json& v = r.value("dirac_vector");
    if (!v.is_array() || static_cast<int>(v.size()) != spec.dim) {
      r.error("spinor.dirac_vector", "expected.dirac_vector needs one entry per frame direction");
    } else {
      RVector x(spec.dim);
      for (int i = 0; i < spec.dim; ++i) x(i) = Recorder::as_number(v[i]);
      r.equality("spinor.dirac_vector", "||D Psi - v.Psi|| / ||Psi|| for the expected vector v",
                 (d.value - c.rep->vector_action(x) * psi).norm() / psi.norm(), 0.0, "expected");
    }
  }
  if (d.lambda_sq) {
    r.identity("spinor.dirac_square_eigen", "||D^2 Psi - lambda^2 Psi|| / ||Psi||", d.eigen_residual);
    r.golden("lambda_sq", "spinor.lambda_sq", "eigenvalue of D^2 at Psi", *d.lambda_sq);
  } else if (r.has("lambda_sq")) {
    r.consume("lambda_sq");
    r.error("spinor.lambda_sq", "Psi is not an eigenvector of D^2");
  } else {
    r.info("spinor.dirac_square_eigen", "Psi is not an eigenvector of D^2", d.eigen_residual);
  }
}

void emt_group(const ManifoldSpec& spec, Context& c, Recorder& r) {
  const auto& field = *c.field;
  const int n = spec.dim;
  const auto emt = emt_tensors(field);
  const auto direct = emt_tensors_direct(field);
  r.golden_matrix("T", "emt.T", "energy-momentum tensor T", emt.T.entries());
  r.golden_matrix("Q", "emt.Q", "skew tensor Q", emt.Q.entries());
  r.golden("T_norm_sq", "emt.T_norm_sq", "|T|^2", emt.T.frob_sq());
  r.golden("Q_norm_sq", "emt.Q_norm_sq", "|Q|^2", emt.Q.frob_sq());
  r.identity("emt.split_norm", "|E|^2 = |T|^2 + |Q|^2",
             std::abs(emt.E.frob_sq() - emt.T.frob_sq() - emt.Q.frob_sq()));
  r.identity("emt.direct_formula", "T and Q from E agree with their defining formulas",
             std::max((emt.T.entries() - direct.T.entries()).cwiseAbs().maxCoeff(),
                      (emt.Q.entries() - direct.Q.entries()).cwiseAbs().maxCoeff()));
  const auto sides = modified_connection_identity(field);
  r.identity("emt.modified_connection",
             "sum |nabla Psi + E.Psi|^2 = sum |nabla Psi|^2 - |E|^2 |Psi|^2",
             std::abs(sides.lhs - sides.rhs));
  const CVector& psi = field.psi().components();
  r.identity("emt.trace_dirac", "tr T = Re(D Psi, Psi)/|Psi|^2",
             std::abs(emt.T.trace() - real_inner(c.dirac->value, psi) / psi.squaredNorm()));
  r.inequality("emt.trace_cauchy_schwarz", "|T|^2 >= tr(T)^2 / n",
               emt.T.frob_sq() - emt.T.trace() * emt.T.trace() / n);
  if (spec.complex_structure) {
    const RMatrix& J = *spec.complex_structure;
    const auto p = pairing_identity(field, J);
    r.identity("emt.pairing", "Re(D~ Psi, Psi) = (J, Q)|Psi|^2", std::abs(p.re_twisted - p.paired));
    r.inequality("emt.pairing_cauchy_schwarz", "|Q|^2 >= (J, Q)^2 / n", p.q_norm_sq - p.jq_sq_over_n);
    const auto t = compare_twisted(field, J);
    r.info("emt.twisted_square", "||D~^2 - D^2|| on frame-constant spinors", t.square_difference);
    r.info("emt.twisted_anticommutator", "||D~ D + D D~|| on frame-constant spinors",
           t.anticommutator);
  }
}

void bounds_group(Context& c, Recorder& r) {
  const auto br = check_bounds(*c.field, *c.scal, c.flow ? &*c.flow : nullptr, r.tol());
  r.inequality("bounds.friedrich", "lambda^2 >= n Scal / (4(n-1))", br.friedrich.slack);
  r.golden("friedrich_rhs", "bounds.friedrich_rhs", "n Scal / (4(n-1))", br.friedrich.rhs);
  r.golden_flag("friedrich_equality", "bounds.friedrich_equality", "Friedrich bound is attained",
                br.friedrich.equality);
  r.inequality("bounds.main", "lambda^2 >= Scal/4 + |T|^2 + |Q|^2", br.main.slack);
  r.golden("main_rhs", "bounds.main_rhs", "Scal/4 + |T|^2 + |Q|^2", br.main.rhs);
  r.golden_flag("main_equality", "bounds.main_equality", "main bound is attained",
                br.main.equality);
  if (br.emt)
    r.inequality("bounds.energy_momentum", "lambda^2 >= Scal/4 + |T|^2", br.emt->slack);
  else
    r.info("bounds.energy_momentum", "Scal/4 + |T|^2 bound needs an eigenspinor of D");
  if (br.main.equality)
    r.identity("bounds.limiting_connection", "nabla_X Psi = -E(X).Psi in the equality case",
               br.equality_residual);
  else
    r.info("bounds.limiting_connection", "max ||nabla_X Psi + E(X).Psi|| / ||Psi||",
           br.equality_residual);
  if (br.flow) {
    r.inequality("bounds.flow", "lambda^2 >= Scal/4 + |E_xi|^2", br.flow->slack);
    r.inequality("bounds.flow_q", "lambda^2 >= Scal/4 + |E_xi|_Q^2", br.flow_q->slack);
  }
}

void flow_group(const ManifoldSpec& spec, Context& c, Recorder& r) {
  const auto& m = *spec.frame;
  const auto& flow = *c.flow;
  const auto& field = *c.field;
  const int n = spec.dim;
  r.golden_matrix("h", "flow.h", "h(e_i, e_j) = g(nabla_i xi, e_j)", flow.h);
  r.identity("flow.xi_unit", "h(X) is orthogonal to xi", flow.xi_column_residual);
  r.golden_flag("riemannian", "flow.riemannian", "h is skew on Q", flow.riemannian);
  r.golden_flag("minimal", "flow.minimal", "kappa = nabla_xi xi vanishes", flow.minimal);
  r.info("flow.kappa_norm", "|kappa|", flow.kappa.norm());

  if (flow.riemannian) {
    if (flow.b) r.golden("b", "flow.b", "b = g(h(q_1), q_2)", *flow.b);
    const auto o = oneill(m, *c.conn, flow);
    r.identity("flow.oneill_bracket", "A_Z W = 1/2 pi^perp [Z, W]", o.bracket_residual);
    r.identity("flow.oneill_h", "g(A_Z W, xi) = -g(h(Z), W)", o.h_residual);
    r.identity("flow.oneill_skew", "A_Z W is skew in Z, W", o.skew_residual);
    const auto& tc = *c.transversal;
    r.golden("kernel_dim", "flow.kernel_dim", "dimension of transversal parallel spinors",
             tc.kernel_dim);
    r.golden("scal_transversal", "flow.scal_transversal", "transversal scalar curvature (direct)",
             tc.scal_direct);
    r.golden("scal_transversal", "flow.scal_transversal_oneill",
             "Scal_M - 2 div kappa + 2|kappa|^2 + |h|_Q^2", tc.scal_oneill);
    r.identity("flow.scal_routes", "both transversal scalar curvature routes agree",
               std::abs(tc.scal_direct - tc.scal_oneill));
    r.identity("flow.xi_curvature", "R^nabla(xi, Z) = 0", tc.xi_curvature_residual);
    if (tc.route_residual)
      r.identity("flow.spin_lift", "spinorial Gauss formula matches the lifted Christoffels",
                 *tc.route_residual);
  } else {
    r.info("flow.transversal", "flow is not Riemannian; transversal connection not defined");
  }

  const auto fe = flow_emt(field, flow, r.tol());
  r.golden_matrix("flow_T", "flow.T", "symmetric part of E_xi", fe.T.entries());
  r.golden_matrix("flow_Q", "flow.Q", "skew part of E_xi", fe.Q.entries());
  r.info("flow.q_parallel_residual", "transversal parallel residual along Q", fe.q_parallel_residual);
  r.info("flow.xi_parallel_residual", "parallel residual along xi", fe.xi_parallel_residual);
  if (fe.lie_residual) {
    r.identity("flow.lie_identity", "T_xi(Z,W) = -1/4 (L_xi g)(Z,W)", *fe.lie_residual);
    r.identity("flow.bracket_identity", "Q_xi(Z,W) = 1/4 g([Z,W], xi)", *fe.bracket_residual);
  }
  if (fe.oneill_residual)
    r.identity("flow.oneill_identity", "Q_xi(Z,W) = 1/2 g(A_Z W, xi)", *fe.oneill_residual);
  if (fe.kappa_residual) {
    r.identity("flow.kappa_identity", "T_xi(xi, Z) = -1/4 g(kappa, Z)", *fe.kappa_residual);
    r.holds("flow.minimal_criterion", "minimal iff T_xi(xi, Z) = 0",
            fe.minimal_iff_mixed_t_vanishes);
  }

  if (n == 3 && flow.riemannian && flow.minimal) {
    const auto& tc = *c.transversal;
    const auto td = three_d_equivalence(field, flow, tc, r.tol());
    r.golden_flag("dirac_b_solution", "flow.dirac_b_solution", "D Psi = (b/2) Psi has a solution",
                  td.solution_exists);
    r.holds("flow.three_d_equivalence",
            "transversal parallel spinors exist iff D Psi = (b/2) Psi is solvable", td.equivalent);
    r.info("flow.dirac_b_residual", "||D Psi - (b/2) Psi|| / ||Psi||", td.dirac_b_residual);
    r.identity("flow.dirac_split", "D Psi = sum e_i.nabla^Q_i Psi + (b/2) Psi",
               td.dirac_split_residual);
    if (td.dirac_b_residual <= r.tol())
      r.identity("flow.transversal_dirac", "D_tr Phi = nabla_xi Phi", td.dtr_xi_residual);
    else
      r.info("flow.transversal_dirac", "||D_tr Phi - nabla_xi Phi|| / ||Psi||", td.dtr_xi_residual);
    if (td.kernel_nonempty)
      r.inequality("flow.scal_transversal_nonnegative", "Scal^nabla >= 0", td.scal_transversal);
  }
}

void sasaki_group(const ManifoldSpec& spec, Context& c, Recorder& r) {
  const auto& m = *spec.frame;
  const auto& flow = *c.flow;
  const auto sr = check_sasakian(m, *c.conn, flow.xi);
  r.golden_flag("sasakian", "sasaki.sasakian", "xi defines a Sasakian structure", sr.sasakian);
  r.info("sasaki.killing_residual", "max |h + h^T|", sr.killing_residual);
  r.info("sasaki.axiom1_residual", "h^2 + Id - xi (x) xi", sr.axiom1_residual);
  r.info("sasaki.axiom2_residual", "(nabla_X h)Y - g(xi,Y)X + g(X,Y)xi", sr.axiom2_residual);
  if (sr.eta_einstein) {
    r.golden("beta", "sasaki.beta", "eta-Einstein coefficient beta", sr.eta_einstein->beta);
    r.golden("gamma", "sasaki.gamma", "eta-Einstein coefficient gamma", sr.eta_einstein->gamma);
  } else {
    r.info("sasaki.eta_einstein", "Ricci tensor is not eta-Einstein");
  }
  if (!sr.sasakian) return;

  if (sr.eta_einstein)
    r.identity("sasaki.beta_plus_gamma", "beta + gamma = 2m", sr.eta_einstein->sum_residual);
  const auto& tc = *c.transversal;
  const auto tr = transversal_ricci_check(c.curv->ricci, flow, tc);
  r.identity("sasaki.transversal_ricci", "Ric^nabla Z = Ric_M Z + 2Z on Q", tr.q_residual);
  r.identity("sasaki.ricci_xi", "Ric_M xi = 2m xi", tr.xi_residual);

  const auto kd = kahler_form_spinor(restrict_rep(*c.rep, flow.xi), flow.complex_structure_q());
  r.identity("sasaki.omega_spectrum", "Omega has eigenvalues i(2r - m)", kd.spectrum_residual);
  r.holds("sasaki.omega_multiplicities", "rank of Sigma_r is binom(m, r)",
          kd.multiplicities_binomial);
  r.identity("sasaki.omega_projectors", "projectors onto Sigma_r resolve the identity",
             kd.resolution_residual);
  r.identity("sasaki.omega_trace", "tr Omega = 0", std::abs(kd.trace));
  if (spec.dim == 3) {
    const auto xa = xi_action_rule(*c.rep, flow.xi, flow.complex_structure_q());
    r.identity("sasaki.omega_b_xi", "Omega = b xi", xa.omega_b_xi_residual);
    r.identity("sasaki.xi_action", "xi acts on Sigma_r by i mu_r / b", xa.b_rule_residual);
    r.info("sasaki.xi_sign_rule", "||xi P_r - (-1)^{r+1} i P_r||, zero exactly when b = 1",
           xa.sign_rule_residual);
  }
  if (tc.kernel_dim > 0 && tc.field_residual <= r.tol()) {
    const auto ss = sasaki_spinor_check(*c.field, flow);
    r.identity("sasaki.spinor_xi", "nabla_xi Psi = 1/2 Omega.Psi", ss.xi_residual);
    r.identity("sasaki.spinor_q", "nabla_Z Psi = 1/2 xi.h(Z).Psi", ss.q_residual);
    if (ss.omega_b_xi_residual)
      r.identity("sasaki.spinor_omega", "Omega.Psi = b xi.Psi", *ss.omega_b_xi_residual);
    r.info("sasaki.limiting_ricci", "max |Ric - (-2 on Q, 2m on xi)|",
           limiting_ricci_residual(c.curv->ricci, flow));
  } else {
    r.info("sasaki.spinor", "Psi is not transversally parallel; spinor identities not evaluated");
  }
}

}  // namespace

int VerificationReport::passed() const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(),
                                        [](const CheckRecord& c) { return c.pass; }));
}

int VerificationReport::failed() const { return static_cast<int>(checks.size()) - passed(); }

const char* kind_name(CheckKind kind) {
  switch (kind) {
    case CheckKind::Equality: return "equality";
    case CheckKind::Inequality: return "inequality";
    case CheckKind::Info: return "info";
  }
  return "equality";
}

CheckKind kind_from_name(const std::string& name) {
  if (name == "equality") return CheckKind::Equality;
  if (name == "inequality") return CheckKind::Inequality;
  if (name == "info") return CheckKind::Info;
  throw InvalidArgument("unknown check kind '" + name + "'");
}

VerificationReport run_verification(const ManifoldSpec& spec, double tol) {
  VerificationReport report;
  report.name = spec.name;
  report.tolerance = tol;
  Recorder r(spec, tol, report);
  Context c;

  try {
    c.rep = CliffordAlgebraRep::build(spec.dim);
    const Spinor psi(spec.spinor.components);
    std::optional<std::vector<CMatrix>> omega;
    if (spec.frame) {
      c.conn = levi_civita(*spec.frame);
      c.curv = riemann_curvature(*spec.frame, *c.conn);
      omega = spin_connection(*c.conn, *c.rep);
    }
    if (spec.spinor.spin_connection)
      c.field = make_field(*c.rep, psi, *omega);
    else
      c.field = make_prescribed_field(*c.rep, psi, spec.spinor.prescriptions, omega);
    c.dirac = dirac(*c.field, tol);
    if (spec.overrides.scal)
      c.scal = spec.overrides.scal;
    else if (c.curv)
      c.scal = c.curv->scal;
    if (spec.frame && spec.flow_index && spec.dim >= 2) {
      c.flow = flow_structure(*spec.frame, *c.conn, *spec.flow_index);
      if (c.flow->riemannian)
        c.transversal = transversal_connection(*spec.frame, *c.conn, *c.field, *c.flow);
    }
  } catch (const Error& e) {
    r.error("setup", e.what());
    return report;
  }

  struct Group {
    std::string name;
    std::string inapplicable;
    std::function<void()> body;
  };
  const bool has_flow = c.flow.has_value();
  const std::vector<Group> groups = {
      {"geometry",
       spec.frame || spec.overrides.scal || spec.overrides.ric ? "" : "no geometry supplied",
       [&] { geometry_group(spec, c, r); }},
      {"spinor", "", [&] { spinor_group(spec, c, r); }},
      {"emt", "", [&] { emt_group(spec, c, r); }},
      {"bounds",
       !c.dirac->lambda_sq ? "Psi is not an eigenvector of D^2"
       : !c.scal           ? "no scalar curvature available"
                           : "",
       [&] { bounds_group(c, r); }},
      {"flow", has_flow ? "" : "needs structure constants and a flow_index",
       [&] { flow_group(spec, c, r); }},
      {"sasaki",
       !has_flow            ? "needs structure constants and a flow_index"
       : spec.dim % 2 == 0  ? "needs odd dimension"
                            : "",
       [&] { sasaki_group(spec, c, r); }},
  };

  for (const auto& g : groups) {
    std::vector<std::string> keys;
    for (auto it = spec.expected.begin(); it != spec.expected.end(); ++it)
      if (expectation_group(it.key()) == g.name) keys.push_back(it.key());

    if (!spec.selects(g.name)) {
      for (const auto& k : keys) r.info(g.name + "." + k, "not evaluated: group not selected");
      continue;
    }
    if (!g.inapplicable.empty()) {
      r.info(g.name + ".applicable", "group skipped: " + g.inapplicable);
      for (const auto& k : keys) r.error(g.name + "." + k, "expectation given but " + g.inapplicable);
      continue;
    }
    try {
      g.body();
    } catch (const Error& e) {
      r.error(g.name + ".error", e.what());
    } catch (const json::exception& e) {
      r.error(g.name + ".error", e.what());
    }
    for (const auto& k : keys)
      if (!r.consumed(k)) r.error(g.name + "." + k, "expectation was not evaluated for this input");
  }
  return report;
}

}  // namespace spinflow

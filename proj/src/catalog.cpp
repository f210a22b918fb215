#include "spinflow/catalog.hpp"

#include <cmath>

#include "spinflow/errors.hpp"

namespace spinflow {
namespace {

using nlohmann::json;

json constant(int i, int j, int k, double v) { return {{"i", i}, {"j", j}, {"k", k}, {"value", v}}; }

json diag(double a, double b, double c) {
  return json::array({json::array({a, 0.0, 0.0}), json::array({0.0, b, 0.0}),
                      json::array({0.0, 0.0, c})});
}

// 3x3 matrix whose only nonzero entries are (i,j) = v and (j,i) = w, 1-based.
json pair_matrix(int i, int j, double v, double w) {
  json m = diag(0.0, 0.0, 0.0);
  m[i - 1][j - 1] = v;
  m[j - 1][i - 1] = w;
  return m;
}

json base_spinor() { return {{"components", json::array({json::array({1.0, 0.0}), json::array({0.0, 0.0})})}}; }

json nil3(double t) {
  const double t2 = t * t;
  json d = {{"name", "nil3"},
            {"description", "Heisenberg group, [e1,e2] = 2 tau e3"},
            {"dim", 3},
            {"structure_constants", json::array({constant(1, 2, 3, 2.0 * t)})},
            {"flow_index", 3},
            {"spinor", base_spinor()}};
  d["expected"] = {
      {"scal", -2.0 * t2},
      {"ricci", diag(-2.0 * t2, -2.0 * t2, 2.0 * t2)},
      {"christoffel", json::array({json::array({1, 2, 3, t}), json::array({2, 3, 1, t}),
                                   json::array({3, 2, 1, t}), json::array({1, 3, 2, -t}),
                                   json::array({2, 1, 3, -t}), json::array({3, 1, 2, -t})})},
      {"christoffel_other_zero", true},
      {"dirac_eigenvalue", -t / 2.0},
      {"lambda_sq", t2 / 4.0},
      {"T", diag(-t / 2.0, -t / 2.0, t / 2.0)},
      {"Q", diag(0.0, 0.0, 0.0)},
      {"T_norm_sq", 3.0 * t2 / 4.0},
      {"Q_norm_sq", 0.0},
      {"main_rhs", t2 / 4.0},
      {"main_equality", true},
      {"friedrich_rhs", -3.0 * t2 / 4.0},
      {"h", pair_matrix(1, 2, -t, t)},
      {"b", -t},
      {"riemannian", true},
      {"minimal", true},
      {"kernel_dim", 2},
      {"scal_transversal", 0.0},
      {"flow_T", diag(0.0, 0.0, 0.0)},
      {"flow_Q", pair_matrix(1, 2, t / 2.0, -t / 2.0)},
      {"dirac_b_solution", true},
      {"sasakian", std::abs(t2 - 1.0) <= 1e-12},
      {"beta", -2.0 * t2},
      {"gamma", 4.0 * t2}};
  return d;
}

json sol3() {
  json d = {{"name", "sol3"},
            {"description", "Sol geometry, [e1,e3] = e1, [e2,e3] = -e2"},
            {"dim", 3},
            {"structure_constants", json::array({constant(1, 3, 1, 1.0), constant(2, 3, 2, -1.0)})},
            {"flow_index", 3},
            {"spinor", base_spinor()}};
  d["expected"] = {
      {"scal", -2.0},
      {"ricci", diag(0.0, 0.0, -2.0)},
      {"christoffel", json::array({json::array({1, 1, 3, -1.0}), json::array({1, 3, 1, 1.0}),
                                   json::array({2, 2, 3, 1.0}), json::array({2, 3, 2, -1.0})})},
      {"christoffel_other_zero", true},
      {"dirac_eigenvalue", 0.0},
      {"lambda_sq", 0.0},
      {"T", pair_matrix(1, 2, -0.5, -0.5)},
      {"Q", diag(0.0, 0.0, 0.0)},
      {"T_norm_sq", 0.5},
      {"Q_norm_sq", 0.0},
      {"main_rhs", 0.0},
      {"main_equality", true},
      {"friedrich_rhs", -0.75},
      {"h", diag(1.0, -1.0, 0.0)},
      {"riemannian", false},
      {"minimal", true},
      {"flow_T", diag(-0.5, 0.5, 0.0)},
      {"flow_Q", diag(0.0, 0.0, 0.0)},
      {"sasakian", false}};
  return d;
}

json su2() {
  json d = {{"name", "su2"},
            {"description", "round 3-sphere, [e_i,e_j] = 2 e_k cyclically"},
            {"dim", 3},
            {"structure_constants",
             json::array({constant(1, 2, 3, 2.0), constant(1, 3, 2, -2.0), constant(2, 3, 1, 2.0)})},
            {"flow_index", 3},
            {"spinor", base_spinor()}};
  d["expected"] = {
      {"scal", 6.0},
      {"ricci", diag(2.0, 2.0, 2.0)},
      {"christoffel", json::array({json::array({1, 2, 3, 1.0}), json::array({2, 3, 1, 1.0}),
                                   json::array({3, 1, 2, 1.0}), json::array({1, 3, 2, -1.0}),
                                   json::array({2, 1, 3, -1.0}), json::array({3, 2, 1, -1.0})})},
      {"christoffel_other_zero", true},
      {"dirac_eigenvalue", -1.5},
      {"lambda_sq", 2.25},
      {"T", diag(-0.5, -0.5, -0.5)},
      {"Q", diag(0.0, 0.0, 0.0)},
      {"T_norm_sq", 0.75},
      {"Q_norm_sq", 0.0},
      {"main_rhs", 2.25},
      {"main_equality", true},
      {"friedrich_rhs", 2.25},
      {"h", pair_matrix(1, 2, -1.0, 1.0)},
      {"b", -1.0},
      {"riemannian", true},
      {"minimal", true},
      {"kernel_dim", 0},
      {"scal_transversal", 8.0},
      {"flow_T", diag(0.0, 0.0, 0.0)},
      {"flow_Q", pair_matrix(1, 2, 0.5, -0.5)},
      {"dirac_b_solution", false},
      {"sasakian", true},
      {"beta", 2.0},
      {"gamma", 0.0}};
  return d;
}

json t3() {
  json d = {{"name", "t3"},
            {"description", "flat 3-torus"},
            {"dim", 3},
            {"structure_constants", json::array()},
            {"flow_index", 3},
            {"spinor", base_spinor()}};
  const json zero = diag(0.0, 0.0, 0.0);
  d["expected"] = {{"scal", 0.0},
                   {"ricci", zero},
                   {"christoffel", json::array()},
                   {"christoffel_other_zero", true},
                   {"dirac_eigenvalue", 0.0},
                   {"lambda_sq", 0.0},
                   {"T", zero},
                   {"Q", zero},
                   {"T_norm_sq", 0.0},
                   {"Q_norm_sq", 0.0},
                   {"main_rhs", 0.0},
                   {"main_equality", true},
                   {"friedrich_rhs", 0.0},
                   {"h", zero},
                   {"b", 0.0},
                   {"riemannian", true},
                   {"minimal", true},
                   {"kernel_dim", 2},
                   {"scal_transversal", 0.0},
                   {"flow_T", zero},
                   {"flow_Q", zero},
                   {"dirac_b_solution", true},
                   {"sasakian", false}};
  return d;
}

json s1xs2() {
  // Frame order (xi, e1, e2): nabla_xi Psi = 0, nabla_e1 Psi = 1/2 e2.Psi,
  // nabla_e2 Psi = -1/2 e1.Psi.
  json d = {{"name", "s1xs2"},
            {"description", "S^1 x S^2 with prescribed spinor derivatives"},
            {"dim", 3},
            {"flow_index", 1},
            {"overrides", {{"scal", 2.0}, {"ric", diag(0.0, 1.0, 1.0)}}}};
  json spinor = base_spinor();
  spinor["derivatives"] = json::array({json::object(), {{"vector", json::array({0.0, 0.0, 0.5})}},
                                       {{"vector", json::array({0.0, -0.5, 0.0})}}});
  d["spinor"] = spinor;
  d["expected"] = {{"dirac_vector", json::array({1.0, 0.0, 0.0})},
                   {"lambda_sq", 1.0},
                   {"T", diag(0.0, 0.0, 0.0)},
                   {"Q", pair_matrix(2, 3, -0.5, 0.5)},
                   {"T_norm_sq", 0.0},
                   {"Q_norm_sq", 0.5},
                   {"main_rhs", 1.0},
                   {"main_equality", true},
                   {"friedrich_rhs", 0.75},
                   {"friedrich_equality", false}};
  return d;
}

}  // namespace

std::vector<std::string> catalog_names() { return {"nil3", "sol3", "s1xs2", "su2", "t3"}; }

std::string catalog_description(const std::string& name) {
  return catalog_template(name)["description"].get<std::string>();
}

json catalog_template(const std::string& name, double tau) {
  if (name == "nil3") {
    if (tau == 0.0) throw InvalidArgument("nil3 needs a nonzero tau");
    return nil3(tau);
  }
  if (name == "sol3") return sol3();
  if (name == "s1xs2") return s1xs2();
  if (name == "su2") return su2();
  if (name == "t3") return t3();
  throw InvalidArgument("unknown catalog manifold '" + name + "'");
}

ManifoldSpec catalog_spec(const std::string& name, double tau) {
  return spec_from_json(catalog_template(name, tau));
}

}  // namespace spinflow

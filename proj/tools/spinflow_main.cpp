// spinflow command line: catalog listing, verification runs, and gamma matrices.

#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "spinflow/catalog.hpp"
#include "spinflow/clifford.hpp"
#include "spinflow/errors.hpp"
#include "spinflow/manifold_spec.hpp"
#include "spinflow/report.hpp"
#include "spinflow/verification.hpp"

namespace {

constexpr int kExitInputError = 2;

const char* kind_label(spinflow::SpecError::Kind k) {
  switch (k) {
    case spinflow::SpecError::Kind::Parse: return "parse error";
    case spinflow::SpecError::Kind::Schema: return "schema error";
    case spinflow::SpecError::Kind::Semantic: return "semantic error";
  }
  return "error";
}

int cmd_catalog(const std::string& show, double tau) {
  if (!show.empty()) {
    std::cout << spinflow::catalog_template(show, tau).dump(2) << '\n';
    return 0;
  }
  for (const auto& name : spinflow::catalog_names())
    std::cout << name << "  " << spinflow::catalog_description(name) << '\n';
  return 0;
}

int cmd_verify(const std::string& manifold, const std::string& file, double tau, double tol,
               const std::string& format) {
  const auto spec =
      file.empty() ? spinflow::catalog_spec(manifold, tau) : spinflow::load_spec_file(file);
  const auto report = spinflow::run_verification(spec, tol);
  std::cout << spinflow::render_report(report, format);
  return report.exit_code();
}

int cmd_rep(int dim) {
  const auto rep = spinflow::CliffordAlgebraRep::build(dim);
  nlohmann::json gammas = nlohmann::json::array();
  for (const auto& g : rep.gammas()) {
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index i = 0; i < g.rows(); ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (Eigen::Index j = 0; j < g.cols(); ++j) row.push_back({g(i, j).real(), g(i, j).imag()});
      rows.push_back(row);
    }
    gammas.push_back(rows);
  }
  nlohmann::json doc = {{"dim", dim}, {"spinor_dim", rep.spinor_dim()}, {"gammas", gammas}};
  std::cout << doc.dump(2) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spinflow: spin geometry checks on frame-presented Lie groups"};
  app.require_subcommand(1);

  auto* catalog = app.add_subcommand("catalog", "list built-in manifolds or print one as JSON");
  std::string show;
  double catalog_tau = 1.0;
  catalog->add_option("--show", show, "print the spec document of this manifold");
  catalog->add_option("--tau", catalog_tau, "tau for nil3")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "run the verification suite");
  std::string manifold, file, format = "text";
  double tau = 1.0, tol = spinflow::kDefaultTolerance;
  auto* opt_manifold = verify->add_option("--manifold", manifold, "catalog manifold name");
  auto* opt_file = verify->add_option("--file", file, "path to a JSON manifold spec");
  opt_manifold->excludes(opt_file);
  verify->add_option("--tau", tau, "tau for nil3")->capture_default_str();
  verify->add_option("--tol", tol, "absolute tolerance")->capture_default_str();
  verify->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  auto* rep = app.add_subcommand("rep", "print gamma matrices as [re, im] grids");
  int dim = 0;
  rep->add_option("--dim", dim, "dimension n")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInputError;
  }

  try {
    if (*catalog) return cmd_catalog(show, catalog_tau);
    if (*verify) {
      if (manifold.empty() && file.empty()) {
        std::cerr << "spinflow: verify needs --manifold or --file\n";
        return kExitInputError;
      }
      return cmd_verify(manifold, file, tau, tol, format);
    }
    if (*rep) return cmd_rep(dim);
  } catch (const spinflow::SpecError& e) {
    std::cerr << "spinflow: " << kind_label(e.kind()) << ": " << e.what() << '\n';
    return kExitInputError;
  } catch (const spinflow::Error& e) {
    std::cerr << "spinflow: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "spinflow/manifold_spec.hpp"

namespace spinflow {

/// Names of the built-in manifolds: nil3, sol3, s1xs2, su2, t3.
std::vector<std::string> catalog_names();

/// One-line description of a catalog entry.
std::string catalog_description(const std::string& name);

/// Spec document for a catalog entry, including its golden expectations.
/// tau only affects nil3 and must be nonzero. Throws InvalidArgument for an
/// unknown name.
nlohmann::json catalog_template(const std::string& name, double tau = 1.0);

/// catalog_template passed through spec_from_json.
ManifoldSpec catalog_spec(const std::string& name, double tau = 1.0);

}  // namespace spinflow

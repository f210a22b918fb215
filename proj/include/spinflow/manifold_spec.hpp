#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "spinflow/clifford.hpp"
#include "spinflow/frame_geometry.hpp"

namespace spinflow {

/// Check groups a spec may select. An empty selection means all of them.
inline const std::vector<std::string> kCheckGroups = {"geometry", "spinor", "emt",
                                                      "bounds",   "flow",   "sasaki"};

/// Check group that consumes an entry of the "expected" block, or an empty
/// string for an unknown key.
std::string expectation_group(const std::string& key);

struct SpinorSpec {
  CVector components;
  bool spin_connection = true;                 ///< derivatives from the frame spin connection
  std::vector<CliffordElement> prescriptions;  ///< one per frame direction otherwise
};

struct SpecOverrides {
  std::optional<double> scal;
  std::optional<RMatrix> ric;
};

/// Validated manifold description. Indices are 0-based after loading.
struct ManifoldSpec {
  std::string name;
  std::string description;
  int dim = 0;
  std::vector<StructureConstant> structure_constants;
  std::optional<FrameManifold> frame;  ///< absent for pure prescription geometry
  std::optional<int> flow_index;
  SpinorSpec spinor;
  SpecOverrides overrides;
  std::optional<RMatrix> complex_structure;  ///< J on column vectors, even n
  std::vector<std::string> checks;
  nlohmann::json expected = nlohmann::json::object();

  bool selects(const std::string& group) const;
};

/// Parses and validates the JSON text. Throws SpecError with kind Parse
/// (position in the message), Schema (offending field named), or Semantic.
ManifoldSpec load_spec(const std::string& text);

/// Same, starting from an already parsed document.
ManifoldSpec spec_from_json(const nlohmann::json& doc);

/// Reads a file and calls load_spec. I/O failures are reported as Parse errors.
ManifoldSpec load_spec_file(const std::string& path);

}  // namespace spinflow

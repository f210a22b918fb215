#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spinflow/manifold_spec.hpp"
#include "spinflow/types.hpp"

namespace spinflow {

/// equality: |computed - expected| <= tol. inequality: computed is a slack that
/// must be >= -tol. info: recorded for inspection, always passes.
enum class CheckKind { Equality, Inequality, Info };

struct CheckRecord {
  std::string id;
  std::string description;
  std::optional<double> computed;
  std::optional<double> expected;
  std::optional<double> abs_err;
  bool pass = true;
  CheckKind kind = CheckKind::Equality;
  /// "expected" (value from the manifold spec's "expected" block), "identity" (must hold for every
  /// input), "error" (a module raised), or "note".
  std::string origin;
};

struct VerificationReport {
  std::string name;
  double tolerance = kDefaultTolerance;
  std::vector<CheckRecord> checks;

  int passed() const;
  int failed() const;
  /// 0 when every check passes, 1 otherwise.
  int exit_code() const { return failed() == 0 ? 0 : 1; }
};

/// Runs every selected and applicable check group. Module errors become failed
/// records; the output depends only on the spec and tol.
VerificationReport run_verification(const ManifoldSpec& spec, double tol = kDefaultTolerance);

const char* kind_name(CheckKind kind);
CheckKind kind_from_name(const std::string& name);

}  // namespace spinflow

#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "spinflow/verification.hpp"

namespace spinflow {

/// Stable JSON form: {"name", "tolerance", "checks": [{"id", "description",
/// "computed", "expected", "abs_err", "pass", "kind", "origin"}],
/// "summary": {"passed", "failed"}}. Missing values are null.
nlohmann::ordered_json report_to_json(const VerificationReport& report);

/// Inverse of report_to_json. Throws InvalidArgument on malformed input.
VerificationReport report_from_json(const nlohmann::json& doc);

/// format is "text" (aligned table plus summary line) or "json".
/// Throws InvalidArgument for any other format.
std::string render_report(const VerificationReport& report, const std::string& format);

}  // namespace spinflow

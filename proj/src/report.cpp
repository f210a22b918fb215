#include "spinflow/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "spinflow/errors.hpp"

namespace spinflow {
namespace {

nlohmann::ordered_json optional_number(const std::optional<double>& v) {
  if (!v) return nullptr;
  return *v;
}

std::optional<double> read_optional(const nlohmann::json& v) {
  if (v.is_null()) return std::nullopt;
  if (!v.is_number()) throw InvalidArgument("report value must be a number or null");
  return v.get<double>();
}

std::string format_number(const std::optional<double>& v) {
  if (!v) return "-";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", *v);
  return buf;
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

std::string render_text(const VerificationReport& report) {
  struct Row {
    std::string status, id, computed, expected, err, description;
  };
  std::vector<Row> rows;
  for (const auto& c : report.checks)
    rows.push_back({c.pass ? (c.kind == CheckKind::Info ? "INFO" : "PASS") : "FAIL", c.id,
                    format_number(c.computed), format_number(c.expected),
                    format_number(c.abs_err), c.description});
  std::size_t w_id = 2, w_c = 8, w_e = 8, w_a = 7;
  for (const auto& r : rows) {
    w_id = std::max(w_id, r.id.size());
    w_c = std::max(w_c, r.computed.size());
    w_e = std::max(w_e, r.expected.size());
    w_a = std::max(w_a, r.err.size());
  }
  std::ostringstream os;
  os << "manifold: " << report.name << "  (tolerance " << format_number(report.tolerance) << ")\n";
  os << pad("STATUS", 7) << pad("ID", w_id + 2) << pad("COMPUTED", w_c + 2)
     << pad("EXPECTED", w_e + 2) << pad("ABS_ERR", w_a + 2) << "DESCRIPTION\n";
  for (const auto& r : rows)
    os << pad(r.status, 7) << pad(r.id, w_id + 2) << pad(r.computed, w_c + 2)
       << pad(r.expected, w_e + 2) << pad(r.err, w_a + 2) << r.description << '\n';
  os << "summary: " << report.passed() << " passed, " << report.failed() << " failed\n";
  return os.str();
}

}  // namespace

nlohmann::ordered_json report_to_json(const VerificationReport& report) {
  nlohmann::ordered_json doc;
  doc["name"] = report.name;
  doc["tolerance"] = report.tolerance;
  auto checks = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    nlohmann::ordered_json j;
    j["id"] = c.id;
    j["description"] = c.description;
    j["computed"] = optional_number(c.computed);
    j["expected"] = optional_number(c.expected);
    j["abs_err"] = optional_number(c.abs_err);
    j["pass"] = c.pass;
    j["kind"] = kind_name(c.kind);
    j["origin"] = c.origin;
    checks.push_back(j);
  }
  doc["checks"] = checks;
  doc["summary"] = {{"passed", report.passed()}, {"failed", report.failed()}};
  return doc;
}

VerificationReport report_from_json(const nlohmann::json& doc) {
  try {
    VerificationReport r;
    r.name = doc.at("name").get<std::string>();
    r.tolerance = doc.value("tolerance", kDefaultTolerance);
    for (const auto& j : doc.at("checks")) {
      CheckRecord c;
      c.id = j.at("id").get<std::string>();
      c.description = j.at("description").get<std::string>();
      c.computed = read_optional(j.at("computed"));
      c.expected = read_optional(j.at("expected"));
      c.abs_err = read_optional(j.at("abs_err"));
      c.pass = j.at("pass").get<bool>();
      c.kind = kind_from_name(j.value("kind", std::string("equality")));
      c.origin = j.value("origin", std::string());
      r.checks.push_back(c);
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed report: ") + e.what());
  }
}

std::string render_report(const VerificationReport& report, const std::string& format) {
  if (format == "text") return render_text(report);
  if (format == "json") return report_to_json(report).dump(2) + "\n";
  throw InvalidArgument("unknown report format '" + format + "'");
}

}  // namespace spinflow

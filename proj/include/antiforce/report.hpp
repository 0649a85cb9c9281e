#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace antiforce {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kReportSchema = "antiforce/1";

struct Check {
  std::string name;
  std::string inputs;
  std::string expected;
  std::string actual;
  bool pass = false;
  std::int64_t millis = 0;
};

struct Report {
  std::vector<Check> checks;
  std::string version = kVersion;
  std::uint64_t seed = 0;

  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

enum class ReportFormat { json, tsv };

/// Keys are emitted in lexicographic order, checks in insertion order.
inline std::string emit_report(const Report& r, ReportFormat format) {
  if (format == ReportFormat::json) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.checks) {
      checks.push_back({{"name", c.name},
                        {"inputs", c.inputs},
                        {"expected", c.expected},
                        {"actual", c.actual},
                        {"pass", c.pass},
                        {"millis", c.millis}});
    }
    nlohmann::json j{{"checks", std::move(checks)},
                     {"pass", r.pass()},
                     {"schema", kReportSchema},
                     {"seed", r.seed},
                     {"version", r.version}};
    return j.dump(2) + "\n";
  }
  auto clean = [](std::string s) {
    for (char& ch : s)
      if (ch == '\t' || ch == '\n' || ch == '\r') ch = ' ';
    return s;
  };
  std::string out = "name\texpected\tactual\tpass\tmillis\n";
  for (const auto& c : r.checks) {
    out += clean(c.name) + "\t" + clean(c.expected) + "\t" + clean(c.actual) + "\t" +
           (c.pass ? "true" : "false") + "\t" + std::to_string(c.millis) + "\n";
  }
  return out;
}

}  // namespace antiforce

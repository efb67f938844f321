#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace lelkit {

using FieldValue = std::variant<std::int64_t, double, std::string, bool>;

struct Field {
  std::string key;
  FieldValue value;
};

using Finding = std::vector<Field>;

/// Outcome of one verification campaign. Serialized as
///   {check, params, cases_checked, violations, observations, status}.
struct Report {
  std::string check;
  std::vector<Field> params;
  std::uint64_t cases_checked = 0;
  std::vector<Finding> violations;
  std::vector<Finding> observations;
  bool passed = true;

  std::string status() const { return passed ? "pass" : "fail"; }
};

enum class ReportFormat { Json, Csv };

void write_report(std::ostream& out, const Report& report, ReportFormat format);
std::string to_json(const Report& report);

/// "%.17g"
std::string format_double(double v);

}  // namespace lelkit

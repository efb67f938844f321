#include "lelkit/report.hpp"

#include <cstdio>
#include <ostream>
#include <set>

#include <json.hpp>

namespace lelkit {

namespace {

nlohmann::ordered_json to_json_value(const FieldValue& v) {
  return std::visit([](const auto& x) { return nlohmann::ordered_json(x); }, v);
}

nlohmann::ordered_json to_json_object(const std::vector<Field>& fields) {
  nlohmann::ordered_json obj = nlohmann::ordered_json::object();
  for (const auto& f : fields) obj[f.key] = to_json_value(f.value);
  return obj;
}

std::string to_csv_cell(const FieldValue& v) {
  std::string s = std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, std::string>) {
          return x;
        } else if constexpr (std::is_same_v<T, bool>) {
          return x ? "true" : "false";
        } else if constexpr (std::is_same_v<T, double>) {
          return format_double(x);
        } else {
          return std::to_string(x);
        }
      },
      v);
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

void write_table(std::ostream& out, const std::string& label, const std::vector<Finding>& rows) {
  std::vector<std::string> keys;
  std::set<std::string> seen;
  for (const auto& row : rows) {
    for (const auto& f : row) {
      if (seen.insert(f.key).second) keys.push_back(f.key);
    }
  }
  out << "\n" << label;
  for (const auto& k : keys) out << ',' << k;
  out << '\n';
  for (const auto& row : rows) {
    out << label;
    for (const auto& k : keys) {
      out << ',';
      for (const auto& f : row) {
        if (f.key == k) {
          out << to_csv_cell(f.value);
          break;
        }
      }
    }
    out << '\n';
  }
}

}  // namespace

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string to_json(const Report& report) {
  nlohmann::ordered_json j;
  j["check"] = report.check;
  j["params"] = to_json_object(report.params);
  j["cases_checked"] = report.cases_checked;
  j["violations"] = nlohmann::ordered_json::array();
  for (const auto& v : report.violations) j["violations"].push_back(to_json_object(v));
  j["observations"] = nlohmann::ordered_json::array();
  for (const auto& o : report.observations) j["observations"].push_back(to_json_object(o));
  j["status"] = report.status();
  return j.dump(2);
}

void write_report(std::ostream& out, const Report& report, ReportFormat format) {
  if (format == ReportFormat::Json) {
    out << to_json(report) << '\n';
    return;
  }
  out << "check,status,cases_checked,violation_count";
  for (const auto& p : report.params) out << ',' << p.key;
  out << '\n';
  out << to_csv_cell(report.check) << ',' << report.status() << ',' << report.cases_checked << ','
      << report.violations.size();
  for (const auto& p : report.params) out << ',' << to_csv_cell(p.value);
  out << '\n';
  if (!report.violations.empty()) write_table(out, "violation", report.violations);
  if (!report.observations.empty()) write_table(out, "observation", report.observations);
}

}  // namespace lelkit

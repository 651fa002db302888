#include "binring/report/report.hpp"

#include "binring/error.hpp"
#include "binring/version.hpp"

#include <algorithm>
#include <sstream>

namespace binring {

ReportFormat parse_report_format(const std::string& s) {
  if (s == "json") return ReportFormat::json;
  if (s == "csv") return ReportFormat::csv;
  if (s == "pretty") return ReportFormat::pretty;
  throw Error("unknown format '" + s + "' (json, csv, pretty)");
}

void Report::expect(bool ok, const std::string& what) {
  if (!ok) failures.push_back(what);
}

nlohmann::json to_json(const Report& r) {
  nlohmann::json tables = nlohmann::json::array();
  for (const auto& t : r.tables) tables.push_back({{"name", t.name}, {"columns", t.columns}, {"rows", t.rows}});
  nlohmann::json out{{"schema", kReportSchema},
                     {"version", std::string(version())},
                     {"command", r.command},
                     {"config", r.config},
                     {"status", r.passed() ? "pass" : "fail"},
                     {"failures", r.failures},
                     {"tables", tables},
                     {"result", r.result}};
  if (r.wall_time_ms) out["wall_time_ms"] = *r.wall_time_ms;
  return out;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void csv_line(std::ostringstream& os, const std::vector<std::string>& fields) {
  for (std::size_t k = 0; k < fields.size(); ++k) os << (k ? "," : "") << csv_field(fields[k]);
  os << "\n";
}

}  // namespace

std::string to_csv(const Report& r) {
  std::ostringstream os;
  csv_line(os, {"command", "status"});
  csv_line(os, {r.command, r.passed() ? "pass" : "fail"});
  for (const auto& f : r.failures) csv_line(os, {"failure", f});
  for (const auto& t : r.tables) {
    os << "# " << t.name << "\n";
    csv_line(os, t.columns);
    for (const auto& row : t.rows) csv_line(os, row);
  }
  return os.str();
}

std::string to_pretty(const Report& r) {
  std::ostringstream os;
  os << r.command << ": " << (r.passed() ? "PASS" : "FAIL") << "\n";
  for (const auto& f : r.failures) os << "  failure: " << f << "\n";
  for (const auto& t : r.tables) {
    os << "\n" << t.name << "\n";
    std::vector<std::size_t> width(t.columns.size());
    for (std::size_t c = 0; c < t.columns.size(); ++c) width[c] = t.columns[c].size();
    for (const auto& row : t.rows)
      for (std::size_t c = 0; c < row.size() && c < width.size(); ++c) width[c] = std::max(width[c], row[c].size());
    auto line = [&](const std::vector<std::string>& fields) {
      os << " ";
      for (std::size_t c = 0; c < fields.size(); ++c) {
        os << " " << fields[c];
        if (c + 1 < fields.size()) os << std::string(width[c] - fields[c].size(), ' ');
      }
      os << "\n";
    };
    line(t.columns);
    if (t.rows.empty()) os << "  (no rows)\n";
    for (const auto& row : t.rows) line(row);
  }
  if (r.wall_time_ms) os << "\nwall time " << *r.wall_time_ms << " ms\n";
  return os.str();
}

std::string render(const Report& r, ReportFormat format) {
  switch (format) {
    case ReportFormat::json:
      return to_json(r).dump(2) + "\n";
    case ReportFormat::csv:
      return to_csv(r);
    case ReportFormat::pretty:
      return to_pretty(r);
  }
  return {};
}

Table cohomology_table(const std::string& name, const std::map<int, CohomologyGroup>& h) {
  Table t{name, {"degree", "group"}, {}};
  for (const auto& [n, g] : h) t.rows.push_back({std::to_string(n), g.to_string()});
  return t;
}

Table bidegree_table(const std::string& name, const BidegreeTable& table) {
  Table t{name, {"n", "d", "group"}, {}};
  for (const auto& [bd, g] : table)
    if (!g.is_zero()) t.rows.push_back({std::to_string(bd.first), std::to_string(bd.second), g.to_string()});
  return t;
}

}  // namespace binring

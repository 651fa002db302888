#pragma once

#include "binring/barcobar/bigraded.hpp"
#include "binring/linalg/cohomology.hpp"
#include "binring/linalg/complex_io.hpp"

#include <nlohmann/json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace binring {

inline constexpr const char* kReportSchema = "binring-report/1";

enum class ReportFormat { json, csv, pretty };

ReportFormat parse_report_format(const std::string& s);

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

/// One command run. JSON layout:
///   {"schema", "version", "command", "config", "status": "pass" | "fail",
///    "failures": [...], "tables": [{"name", "columns", "rows"}], "result",
///    "wall_time_ms"}
/// wall_time_ms is absent when timing is disabled, which makes the output a
/// pure function of the configuration.
struct Report {
  std::string command;
  nlohmann::json config = nlohmann::json::object();
  std::vector<std::string> failures;
  std::vector<Table> tables;
  nlohmann::json result = nlohmann::json::object();
  std::optional<double> wall_time_ms;

  bool passed() const { return failures.empty(); }
  /// Records a failure when `ok` is false.
  void expect(bool ok, const std::string& what);
};

nlohmann::json to_json(const Report& r);
/// CSV: one block per table, introduced by a "# name" line; the status and
/// failures come first.
std::string to_csv(const Report& r);
std::string to_pretty(const Report& r);
std::string render(const Report& r, ReportFormat format);

Table cohomology_table(const std::string& name, const std::map<int, CohomologyGroup>& h);
/// Nonzero bidegrees only; a zero table has no rows.
Table bidegree_table(const std::string& name, const BidegreeTable& t);

}  // namespace binring

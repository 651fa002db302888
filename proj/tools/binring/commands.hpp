#pragma once

#include "binring/report/report.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace binring::cli {

struct RunConfig {
  std::string command;
  std::vector<std::string> args;
  std::optional<int> window_n;
  std::optional<unsigned> window_d;
  std::optional<int> truncation;
  std::optional<std::size_t> samples;
  std::uint64_t seed = 1;
  std::string out;
  ReportFormat format = ReportFormat::pretty;
  bool timing = true;

  nlohmann::json echo() const;
};

/// Usage problems (bad arguments, unreadable or malformed files) throw
/// binring::Error; everything else ends up in the report.
Report run(const RunConfig& config);

std::vector<std::string> command_names();

}  // namespace binring::cli

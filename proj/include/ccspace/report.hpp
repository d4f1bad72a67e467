#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "ccspace/scenario.hpp"

namespace ccspace {

inline constexpr std::string_view kReportSchema = "ccspace.report/1";
inline constexpr std::string_view kToolVersion = "ccspace 0.1.0";

enum class ReportFormat { text, structured };

/// Report tree in presentation order. Every section carries a "verdicts"
/// map (id -> verdict) and a "details" map (id -> note and witness).
struct Report {
  nlohmann::ordered_json tree;

  /// Counts of fail and discrepancy verdicts over all sections.
  std::size_t findings() const;
};

struct RunOptions {
  ReportFormat format = ReportFormat::text;
  bool strict = false;
  std::optional<std::uint64_t> seed;
  std::optional<double> epsilon;
  std::optional<std::size_t> cap;
};

const std::vector<std::string>& commands();

/// Builds the report for one command. `digest` is the hex SHA-256 of the
/// scenario bytes. Throws std::invalid_argument for unknown commands and
/// ScenarioError for integrity failures.
Report build_report(std::string_view command, const Scenario& scenario, std::string_view digest,
                    const RunOptions& options = {});

/// Text is indented and human-ordered; structured is JSON with sorted keys
/// and floats rendered with 9 significant digits.
std::string emit_report(const Report& report, ReportFormat format);

/// Lower-case hex SHA-256.
std::string sha256_hex(std::string_view bytes);

struct RunResult {
  int exit_code = 0;
  std::string output;
  std::string error;
};

/// Reads, checks and reports. Exit codes: 0 success, 1 parse or integrity
/// failure, 2 a fail or discrepancy under `strict`, 3 I/O failure.
RunResult run(std::string_view command, const std::string& scenario_path, const RunOptions& options);

}  // namespace ccspace

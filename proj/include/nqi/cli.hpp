#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "nqi/protocol.hpp"

namespace nqi {

enum class OutputFormat : std::uint8_t { Text = 0, Json = 1, Csv = 2 };

/// Parsed command line.
struct RunRequest {
  ExperimentConfig config;
  OutputFormat format = OutputFormat::Text;
  std::string out_path;  // empty = stdout
  bool list_schemes = false;
};

/// Renders the configured run in the requested format.
std::string render_report(const RunRequest& request);

std::string scheme_catalog();

/// Parses flags, runs the experiment, writes the report.
/// Exit codes: 0 success, 1 I/O failure, 2 parse/validation failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace nqi

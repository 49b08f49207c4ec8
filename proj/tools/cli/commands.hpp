#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace scg::cli {

enum class Command { Info, Shapley, Symmetry, PSystem, Decompose, Verify, Efficiency };
enum class OutputFormat { Table, Json };

struct RunConfig {
  Command command = Command::Info;
  std::string complex_path;
  std::optional<std::string> game_path;
  std::optional<int> player;
  OutputFormat output_format = OutputFormat::Table;
  std::uint64_t seed = 0;
};

enum ExitCode : int {
  kSuccess = 0,
  kConfigError = 2,
  kPreconditionViolated = 3,
  kVerificationFailed = 4,
};

/// Runs one command; everything goes to `out`, errors to `err` as a single
/// "error[<Code>]: message" line.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Executes an already parsed configuration.
int execute(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace scg::cli

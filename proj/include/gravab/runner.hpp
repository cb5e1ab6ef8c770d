#pragma once

#include <string>

#include <json.hpp>

#include "gravab/config.hpp"

namespace gravab::cli {

nlohmann::json run_phase(const RunConfig& config, const PhysicalConstants& k = codata2018);
nlohmann::json run_entropy(const RunConfig& config, const PhysicalConstants& k = codata2018);
nlohmann::json run_scenario(const RunConfig& config, const PhysicalConstants& k = codata2018);
nlohmann::json run_oracle(const RunConfig& config);

// Cartesian product over at most two sweep axes. Points are evaluated on
// `threads` workers; rows come back in grid order.
nlohmann::json run_sweep(const RunConfig& config, const PhysicalConstants& k = codata2018,
                         unsigned threads = 0);

// Pretty JSON with sorted keys, or CSV. A document holding a "rows" array
// becomes a table; anything else is flattened into a single row whose
// column names are dotted paths.
std::string render(const nlohmann::json& document, OutputFormat format);

// Shortest decimal that round-trips to the same double.
std::string format_number(double value);

// Exit-code contract of the tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitNumericalError = 3;

struct CommandOutcome {
  int exit_code = kExitOk;
  std::string stdout_text;
  std::string stderr_text;
};

// Runs one subcommand end to end (argument vector excludes the program
// name). Used by the executable and by the tests.
CommandOutcome run_command(int argc, const char* const* argv);

}  // namespace gravab::cli

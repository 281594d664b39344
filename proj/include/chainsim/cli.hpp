#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "chainsim/config.hpp"

namespace chainsim::cli {

/// Bad command line or config file. Maps to exit status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// `--help` was given; `what()` holds the help text.
class HelpRequested : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunRequest {
  SimConfig config;
  std::vector<Protocol> protocols;
  std::vector<std::uint64_t> seeds;
  std::filesystem::path output_path;
};

struct PlannedRun {
  Protocol protocol;
  std::uint64_t seed;
  std::filesystem::path csv_path;
};

/// Applies `key = value` lines onto `config`. Blank lines and `#` comments
/// are ignored. Returns the protocol list and seed the file names, if any,
/// through the optional out-parameters. Throws UsageError on unknown keys or
/// malformed values.
void apply_config_text(std::istream& in, SimConfig& config,
                       std::vector<Protocol>* protocols = nullptr,
                       std::vector<std::uint64_t>* seeds = nullptr);

/// Parses "7", "1..20" or "1,4,9" into seeds.
std::vector<std::uint64_t> parse_seed_list(const std::string& text);

/// Command-line flags override the optional `--config` file, which overrides
/// built-in defaults.
RunRequest parse_args(int argc, const char* const* argv);

/// Every (protocol, seed) pair sorted by protocol name then seed, with the
/// CSV path each run writes. A single run writes exactly `output_path`.
std::vector<PlannedRun> plan_runs(const RunRequest& request);

/// Path of the combined summary table.
std::filesystem::path summary_path(const RunRequest& request);

/// Runs every planned simulation, writes the per-run CSVs and the summary.
/// Returns 0 on success, 1 on I/O or simulation failure.
int execute(const RunRequest& request, std::ostream& log);

/// Full entry point: parse, execute, map errors to exit codes.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace chainsim::cli

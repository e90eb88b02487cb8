#pragma once

// Command drivers behind the `krein` executable. Each driver returns the exit
// code and the JSON report; it writes the report file itself when asked to.
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 input or schema error,
// 3 a hypothesis of the spectral theorem does not hold.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

namespace krein::cli {

enum class Command { Verify, Spectrum, Gen, Counterexample };

enum ExitCode : int { kPass = 0, kCheckFailed = 1, kInputError = 2, kHypothesisFailed = 3 };

struct RunConfig {
  Command command = Command::Verify;
  std::optional<std::filesystem::path> input_path;
  double tol = 1e-9;
  std::uint64_t seed = 42;
  int samples = 100;
  std::optional<std::filesystem::path> output_path;
  int points = 1;          // gen
  bool conjugate = false;  // gen
  int grid = 64;           // counterexample
};

struct RunResult {
  int exit_code = kPass;
  nlohmann::json report;
  /// One-line diagnostic for input and hypothesis failures.
  std::string message;
};

/// Rejects configurations that miss a required path or carry a bad value.
/// Returns the diagnostic, or an empty string when the configuration is usable.
std::string validate(const RunConfig& cfg);

RunResult run_verify(const RunConfig& cfg);
RunResult run_spectrum(const RunConfig& cfg);
RunResult run_gen(const RunConfig& cfg);
RunResult run_counterexample(const RunConfig& cfg);

/// Dispatches on cfg.command and prints a short table to `out` and
/// diagnostics to `err`. Returns the exit code.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace krein::cli

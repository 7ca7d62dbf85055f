#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "tandem_cli/config.hpp"

namespace tandem::cli {

enum class Command { kSimulate, kVerify, kBounds, kConverge, kFormula };

std::optional<Command> command_from_name(std::string_view name) noexcept;
std::string_view command_name(Command command) noexcept;

/// Process exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitVerifyFailed = 3;

inline constexpr double kVerifyTolerance = 1e-9;

struct CommandResult {
  int exit_code = kExitOk;
  /// Primary artifact: one JSON object or a CSV table.
  std::string output;
  /// simulate only: (n, gamma_hat[, rule]) trace of replication 0.
  std::optional<std::string> trace_csv;
};

struct CommandOptions {
  bool want_trace = false;
};

/// Runs a command on a validated config. Errors from the library surface as
/// a machine-readable error object with a nonzero exit code, never as an
/// exception.
CommandResult run_command(Command command, const ExperimentConfig& config,
                          const CommandOptions& options = {});

/// {"schema_version": 1, "error": {"code": ..., "message": ...}}
std::string error_object(std::string_view code, std::string_view message);

/// Shortest round-trip decimal form; empty for NaN.
std::string format_number(double value);

}  // namespace tandem::cli

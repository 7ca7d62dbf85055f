#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "tandem/analysis.hpp"
#include "tandem/error.hpp"

namespace tandem::cli {

inline constexpr int kSchemaVersion = 1;

enum class OutputFormat { kJson, kCsv };

/// A validated experiment: the system plus every command parameter, with
/// defaults already filled in.
struct ExperimentConfig {
  SystemSpec system;
  std::size_t n = kDefaultCustomers;
  std::size_t replications = kDefaultReplications;
  std::uint64_t seed = 1;
  std::vector<std::size_t> grid{100, 1000, 10'000, 100'000};
  std::size_t verify_n = 8;
  std::size_t realizations = 100;
  OutputFormat format = OutputFormat::kJson;
};

class ConfigError : public Error {
 public:
  ConfigError(ErrorCode code, const std::string& message)
      : Error(code, message) {}
};

/// Parses the JSON configuration document. Syntax errors carry line and
/// column; semantic errors name the offending key path and the rule.
/// Throws ConfigError.
ExperimentConfig parse_config(std::string_view text);

/// Command-line values that take precedence over the file.
struct Overrides {
  std::optional<std::size_t> n;
  std::optional<std::size_t> replications;
  std::optional<std::uint64_t> seed;
  std::optional<std::vector<std::size_t>> grid;
  std::optional<OutputFormat> format;
};

void apply_overrides(ExperimentConfig& config, const Overrides& overrides);

/// Re-checks every invariant; parse_config and apply_overrides call this.
void validate(const ExperimentConfig& config);

/// The fully-resolved config, in the same schema parse_config accepts.
nlohmann::ordered_json to_json(const ExperimentConfig& config);
nlohmann::ordered_json to_json(const DistributionSpec& spec);

std::string_view format_name(OutputFormat format) noexcept;

}  // namespace tandem::cli

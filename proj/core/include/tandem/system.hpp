#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "tandem/distributions.hpp"

namespace tandem {

enum class Discipline {
  kInfinite,
  kManufacturing,
  kCommunication,
};

std::string_view discipline_name(Discipline discipline) noexcept;
std::optional<Discipline> discipline_from_name(std::string_view name) noexcept;

/// A tandem of M single-server stations. stations[0] is the interarrival
/// distribution, stations[1..M] the service distributions.
struct SystemSpec {
  std::vector<DistributionSpec> stations;
  DependenceMode mode = DependenceMode::kIndependent;
  Discipline discipline = Discipline::kInfinite;

  std::size_t service_stations() const noexcept {
    return stations.empty() ? 0 : stations.size() - 1;
  }

  /// Throws ParameterError / OutOfScopeError naming the violated rule.
  void validate() const;
};

}  // namespace tandem

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tandem/system.hpp"

namespace tandem {

/// Interarrival (station 0) and service (stations 1..M) times for customers
/// 1..N, stored station-major. Customer indices in the accessors are
/// 1-based to match the departure-epoch indexing D_i(n).
class Realization {
 public:
  Realization() = default;
  Realization(std::size_t service_stations, std::size_t customers);

  /// rows[i][n-1] is the time of customer n at station i. All rows must have
  /// the same length; entries must be finite and nonnegative.
  static Realization from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t service_stations() const noexcept { return stations_ - 1; }
  std::size_t customers() const noexcept { return customers_; }

  double tau(std::size_t station, std::size_t customer) const;
  void set_tau(std::size_t station, std::size_t customer, double value);

  /// Row i, 0-based by customer.
  std::span<const double> row(std::size_t station) const;

  /// Customers first+1..last as a fresh realization.
  Realization slice(std::size_t first, std::size_t last) const;

  /// The (M+1)-vector of times for one customer.
  void column(std::size_t customer, std::span<double> out) const;

  friend bool operator==(const Realization&, const Realization&) = default;

 private:
  std::size_t stations_ = 1;
  std::size_t customers_ = 0;
  std::vector<double> data_;
};

/// Fills `out` (size M+1) with the times of customer `customer` (1-based).
/// The value at (seed, station, customer) does not depend on the number of
/// stations or on which other customers were sampled.
void sample_customer(const SystemSpec& spec, std::uint64_t seed,
                     std::uint64_t customer, std::span<double> out);

Realization sample_realization(const SystemSpec& spec, std::size_t customers,
                               std::uint64_t seed);

}  // namespace tandem

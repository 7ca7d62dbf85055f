#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tandem/realization.hpp"

namespace tandem {

/// Departure epochs D_i(n) for stations i = 0..M and customers n = 0..N,
/// with D_i(0) = 0. D_0(n) is the n-th arrival epoch.
class DepartureSchedule {
 public:
  DepartureSchedule() = default;
  DepartureSchedule(std::size_t service_stations, std::size_t customers);

  std::size_t service_stations() const noexcept { return stations_ - 1; }
  std::size_t customers() const noexcept { return customers_; }

  double at(std::size_t station, std::size_t n) const;
  void set(std::size_t station, std::size_t n, double value) {
    data_[station * (customers_ + 1) + n] = value;
  }

  /// D_station(0..N).
  std::span<const double> station(std::size_t station) const;
  /// D_M(0..N).
  std::span<const double> last_station() const {
    return station(stations_ - 1);
  }

 private:
  std::size_t stations_ = 1;
  std::size_t customers_ = 0;
  std::vector<double> data_;
};

/// Rolling form of the infinite-buffer recursion
///   D_0(n) = D_0(n-1) + tau_0n
///   D_m(n) = max(D_{m-1}(n), D_m(n-1)) + tau_mn
/// holding only the M+1 most recent epochs.
class TandemRecursion {
 public:
  explicit TandemRecursion(std::size_t service_stations);

  /// Feeds the (M+1)-vector of times of the next customer; returns D_M(n).
  double advance(std::span<const double> column);

  std::span<const double> epochs() const noexcept { return epochs_; }
  std::size_t customers() const noexcept { return customers_; }

 private:
  std::vector<double> epochs_;
  std::size_t customers_ = 0;
};

DepartureSchedule run_recursion(const Realization& r);

inline constexpr std::uint64_t kDefaultTupleBudget = 10'000'000;

/// Number of index tuples 1 <= k_1 <= ... <= k_m <= n, i.e. C(n+m-1, m),
/// saturating at UINT64_MAX.
std::uint64_t tuple_count(std::size_t m, std::size_t n) noexcept;

/// D_m(n) as the maximum over all nondecreasing tuples (k_1..k_m) of
///   sum_{j<=k_1} tau_0j + sum_{k_1<=j<=k_2} tau_1j + ... +
///   sum_{k_m<=j<=n} tau_mj,
/// by brute-force enumeration. Adjacent sums share their boundary customer.
/// Throws BudgetError when tuple_count(m, n) exceeds `budget`.
double explicit_solution(const Realization& r, std::size_t m, std::size_t n,
                         std::uint64_t budget = kDefaultTupleBudget);

/// D_M of the sub-realization of customers l+1..n; zeta(r, 0, n) = D_M(n).
double zeta(const Realization& r, std::size_t l, std::size_t n);

struct TracePoint {
  std::size_t n;
  double gamma_hat;
};

/// (n, D_M(n)/n) for n = 1..N.
std::vector<TracePoint> cycle_time_trace(const Realization& r);
std::vector<TracePoint> cycle_time_trace(const DepartureSchedule& schedule);

}  // namespace tandem

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "tandem/distributions.hpp"
#include "tandem/recursion.hpp"

namespace tandem {

/// Two-station tandem with an infinite first buffer and a zero-capacity
/// buffer in front of station 2.
///
/// Manufacturing: a finished customer holds server 1 until server 2 frees.
///   D_1(n) = max(max(D_0(n), D_1(n-1)) + tau_1n, D_2(n-1))
/// Communication: server 1 does not start while server 2 is occupied.
///   D_1(n) = max(D_0(n), D_1(n-1), D_2(n-1)) + tau_1n
/// Both share D_2(n) = max(D_1(n), D_2(n-1)) + tau_2n.
enum class BlockingRule {
  kManufacturing,
  kCommunication,
};

std::string_view blocking_rule_name(BlockingRule rule) noexcept;

/// The blocking rule a discipline implies, if any.
std::optional<BlockingRule> blocking_rule_of(Discipline discipline) noexcept;

class BlockingRecursion {
 public:
  explicit BlockingRecursion(BlockingRule rule) : rule_(rule) {}

  /// Feeds (tau_0n, tau_1n, tau_2n); returns D_2(n).
  double advance(std::span<const double> column);

  std::span<const double> epochs() const noexcept { return epochs_; }

 private:
  BlockingRule rule_;
  std::array<double, 3> epochs_{};
};

DepartureSchedule run_blocking_recursion(const Realization& r,
                                         BlockingRule rule);

/// Manufacturing D_1(n) as
///   max_{1<=k<=n} { sum_{j<=k} tau_0j + tau_1k
///                   + sum_{j=k}^{n-1} max(tau_1,j+1, tau_2j) }.
double manufacturing_explicit_d1(const Realization& r, std::size_t n);

/// max_{1<=k<=n} { sum_{j<=k} tau_0j + sum_{j=k}^{n} max(tau_1,j+1, tau_2j) }.
/// Needs customer n+1.
double manufacturing_lower_envelope(const Realization& r, std::size_t n);

/// max_{1<=k<=n} { sum_{j<=k} tau_0j + sum_{j=k}^{n} max(tau_1j, tau_2,j-1) },
/// with tau_20 = 0.
double manufacturing_upper_envelope(const Realization& r, std::size_t n);

struct Sandwich {
  double lower;
  double upper;
};

/// lower = L(n) - max(tau_1,n+1, tau_2n) and upper = U(n); both bracket the
/// manufacturing D_1(n). Needs customer n+1.
Sandwich sandwich_d1(const Realization& r, std::size_t n);

/// Communication D_2(n) = max_{1<=k<=n} { sum_{j<=k} tau_0j
///                                        + sum_{j=k}^{n} (tau_1j + tau_2j) }.
double communication_explicit_d2(const Realization& r, std::size_t n);

struct CycleTime {
  double gamma = 0.0;
  double standard_error = 0.0;
  bool exact = true;
};

/// Closed-form cycle time of a blocking system:
///   manufacturing  max(E tau_0, E max(tau_1, tau_2))
///   communication  max(E tau_0, E tau_1 + E tau_2)
/// When E max has no closed form it is estimated by Monte Carlo with
/// `mc_seed`, and the standard error is reported.
CycleTime blocking_cycle_time(const SystemSpec& spec,
                              std::uint64_t mc_seed = 0,
                              std::size_t mc_samples = kPairwiseMaxSamples);

}  // namespace tandem

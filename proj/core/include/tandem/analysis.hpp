#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "tandem/blocking.hpp"
#include "tandem/bounds.hpp"
#include "tandem/recursion.hpp"

namespace tandem {

inline constexpr std::size_t kDefaultCustomers = 100'000;
inline constexpr std::size_t kDefaultReplications = 20;

/// Limit of D_M(n)/n from the station moments alone:
///   infinite       max_i E tau_i
///   manufacturing  max(E tau_0, E max(tau_1, tau_2))
///   communication  max(E tau_0, E tau_1 + E tau_2)
/// `mc_seed` is only used when E max needs sampling.
CycleTime closed_form_gamma(const SystemSpec& spec, std::uint64_t mc_seed = 0);

/// 1 / closed_form_gamma. Throws UndefinedThroughputError when every station
/// mean is zero.
double throughput(const SystemSpec& spec, std::uint64_t mc_seed = 0);

/// One sampled trajectory, advanced a customer at a time in O(M) memory.
/// Variates come from the counter-addressed streams, so the trajectory is
/// identical to running the matching recursion on sample_realization(spec,
/// n, seed).
class Trajectory {
 public:
  Trajectory(const SystemSpec& spec, std::uint64_t seed);

  /// Advances by one customer; returns D_M(n).
  double step();

  std::size_t customers() const noexcept { return customers_; }
  double last_departure() const noexcept { return last_; }

 private:
  SystemSpec spec_;
  std::uint64_t seed_;
  std::size_t customers_ = 0;
  double last_ = 0.0;
  std::vector<double> column_;
  std::variant<TandemRecursion, BlockingRecursion> engine_;
};

struct CycleTimeEstimate {
  double point = 0.0;
  double half_width = 0.0;
  double sample_sd = 0.0;
  std::size_t n = 0;
  std::size_t replications = 0;
  std::uint64_t seed = 0;
};

/// Mean of D_M(n)/n over independent replications, replication r seeded
/// with derive_seed(seed, r); half_width = 1.96 sd / sqrt(replications).
/// Replications may run on several threads; the result does not depend on
/// the thread count.
CycleTimeEstimate estimate_gamma(const SystemSpec& spec, std::size_t n,
                                 std::size_t replications, std::uint64_t seed);

/// D_M(g)/g at each grid point g of one trajectory. `grid` must be strictly
/// increasing and start at >= 1.
std::vector<double> trajectory_ratios(const SystemSpec& spec,
                                      std::span<const std::size_t> grid,
                                      std::uint64_t seed);

std::vector<MomentSummary> moment_summaries(const SystemSpec& spec);

/// The finite-n sandwich on E[D_M(n)]/n; only defined for infinite buffers.
std::optional<BoundReport> sandwich_for(const SystemSpec& spec, std::size_t n);

struct ConvergenceRow {
  std::size_t n = 0;
  double mean_gamma_hat = 0.0;
  double mean_abs_error = 0.0;
  /// upper - lower of the finite-n sandwich; NaN for blocking disciplines.
  double sandwich_width = 0.0;
};

/// For each grid point, the mean over replications of |D_M(n)/n - gamma|
/// next to the analytic sandwich width. Each replication is one trajectory
/// read off at every grid point.
std::vector<ConvergenceRow> convergence_study(const SystemSpec& spec,
                                              std::span<const std::size_t> grid,
                                              std::size_t replications,
                                              std::uint64_t seed);

}  // namespace tandem

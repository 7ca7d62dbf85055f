#pragma once

#include <cstddef>
#include <span>

namespace tandem {

struct MomentSummary {
  double mean = 0.0;
  double variance = 0.0;
};

/// (n-1)/sqrt(2n-1): the extreme-value coefficient for the expected maximum
/// of n i.i.d. variables.
double max_coefficient(std::size_t n);

/// 4 sqrt(2(2n-1)) + (n-1)/sqrt(2n-1): the coefficient of the standard
/// deviation in the window-maximum bound.
double window_coefficient(std::size_t n);

/// Upper bound on E[max_k (xi_1 + ... + xi_k)] for independent zero-mean
/// xi_1..xi_n with the given second moments:
///   2 sqrt(2(2n-1)/n) * sqrt(sum E[xi_k^2]).
/// `second_moments` must hold exactly n values.
double lemma4_bound(std::size_t n, std::span<const double> second_moments);

/// i.i.d. form of lemma4_bound: 2 sqrt(2(2n-1) E[xi^2]).
double lemma4_bound_iid(std::size_t n, double second_moment);

/// Upper bound on E[max(xi_1..xi_n)] for i.i.d. xi:
///   mean + (n-1)/sqrt(2n-1) * sqrt(variance).
double lemma5_bound(std::size_t n, double mean, double variance);

/// Upper bound on E[max_{l<=k} (xi_l + ... + xi_k)] for i.i.d. xi with
/// mean <= 0; throws PreconditionError for a positive mean.
double lemma6_bound(std::size_t n, double mean, double variance);

/// Per-term breakdown of the bound on E[mu] = E[D_M(n)] - n E[tau_m1]:
///   other_means + window_coeff * difference_sd_sum
///               + service_stations * max_coeff * bottleneck_sd
struct BoundComponents {
  double other_means = 0.0;
  double window_coeff = 0.0;
  double difference_sd_sum = 0.0;
  double max_coeff = 0.0;
  double bottleneck_sd = 0.0;
  std::size_t service_stations = 0;
  double mu_bound = 0.0;
};

struct BoundReport {
  std::size_t n = 0;
  double lower = 0.0;
  double upper = 0.0;
  std::size_t bottleneck = 0;
  BoundComponents components;

  double width() const noexcept { return upper - lower; }
};

/// E[tau_m1] <= E[D_M(n)]/n <= E[tau_m1] + mu_bound/n, where m is the
/// station with the largest mean (smallest index on ties). `stations` holds
/// M+1 summaries, arrivals first.
///
/// With `independent` the deviation sd(tau_i - tau_m) is sqrt(var_i + var_m);
/// otherwise the dependence-free sd_i + sd_m is used.
BoundReport theorem7_sandwich(std::size_t n,
                              std::span<const MomentSummary> stations,
                              bool independent = true);

}  // namespace tandem

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

namespace tandem {

enum class Family {
  kDeterministic,
  kExponential,
  kUniform,
  kGamma,
  kBernoulliScaled,
};

std::string_view family_name(Family family) noexcept;
std::optional<Family> family_from_name(std::string_view name) noexcept;

/// A nonnegative time distribution with exactly known first two moments.
///
/// Parameters by family:
///   deterministic     value
///   exponential       rate            (mean 1/rate)
///   uniform           low, high       (0 <= low <= high)
///   gamma             shape, scale
///   bernoulli-scaled  p, scale        (scale w.p. p, else 0)
///
/// Construction goes through the named factories, which throw
/// ParameterError on invalid parameters.
class DistributionSpec {
 public:
  static DistributionSpec deterministic(double value);
  static DistributionSpec exponential(double rate);
  static DistributionSpec uniform(double low, double high);
  static DistributionSpec gamma(double shape, double scale);
  static DistributionSpec bernoulli_scaled(double p, double scale);

  Family family() const noexcept { return family_; }
  std::span<const double> params() const noexcept {
    return {params_.data(), arity()};
  }
  std::size_t arity() const noexcept;

  double mean() const noexcept;
  double variance() const noexcept;

  /// Inverse CDF. `u` must lie in [0, 1); the result is always >= 0.
  double quantile(double u) const;

  /// E[max(c, X)] for a constant c >= 0.
  double expected_max_with(double c) const;

  friend bool operator==(const DistributionSpec&,
                         const DistributionSpec&) = default;

 private:
  DistributionSpec(Family family, double p0, double p1) noexcept
      : family_(family), params_{p0, p1} {}

  Family family_;
  std::array<double, 2> params_;
};

double exact_mean(const DistributionSpec& spec) noexcept;
double exact_variance(const DistributionSpec& spec) noexcept;

/// Closed-form E[max(X, Y)] for independent X ~ a, Y ~ b. Available for
/// exponential/exponential, deterministic/any and uniform/uniform on a common
/// support; std::nullopt otherwise.
std::optional<double> exact_mean_pairwise_max(const DistributionSpec& a,
                                              const DistributionSpec& b);

enum class DependenceMode {
  kIndependent,
  kSharedDraw,
  kIdenticalService,
};

std::string_view dependence_mode_name(DependenceMode mode) noexcept;
std::optional<DependenceMode> dependence_mode_from_name(
    std::string_view name) noexcept;

/// E[max(X, Y)] under a dependence mode, with its standard error. `exact` is
/// true when no sampling was needed, in which case standard_error is 0.
struct PairwiseMax {
  double value = 0.0;
  double standard_error = 0.0;
  bool exact = true;
};

inline constexpr std::size_t kPairwiseMaxSamples = 1'000'000;

PairwiseMax expected_pairwise_max(const DistributionSpec& a,
                                  const DistributionSpec& b,
                                  DependenceMode mode, std::uint64_t seed,
                                  std::size_t samples = kPairwiseMaxSamples);

}  // namespace tandem

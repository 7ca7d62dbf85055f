#include "tandem/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <boost/math/special_functions/gamma.hpp>

#include "tandem/error.hpp"
#include "tandem/random.hpp"

namespace tandem {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw ParameterError(what);
}

bool finite_nonneg(double x) { return std::isfinite(x) && x >= 0.0; }

}  // namespace

std::string_view family_name(Family family) noexcept {
  switch (family) {
    case Family::kDeterministic:
      return "deterministic";
    case Family::kExponential:
      return "exponential";
    case Family::kUniform:
      return "uniform";
    case Family::kGamma:
      return "gamma";
    case Family::kBernoulliScaled:
      return "bernoulli-scaled";
  }
  return "unknown";
}

std::optional<Family> family_from_name(std::string_view name) noexcept {
  for (Family f : {Family::kDeterministic, Family::kExponential,
                   Family::kUniform, Family::kGamma,
                   Family::kBernoulliScaled}) {
    if (family_name(f) == name) return f;
  }
  return std::nullopt;
}

DistributionSpec DistributionSpec::deterministic(double value) {
  require(finite_nonneg(value),
          "deterministic: value must be finite and nonnegative");
  return {Family::kDeterministic, value, 0.0};
}

DistributionSpec DistributionSpec::exponential(double rate) {
  require(std::isfinite(rate) && rate > 0.0,
          "exponential: rate must be finite and positive");
  return {Family::kExponential, rate, 0.0};
}

DistributionSpec DistributionSpec::uniform(double low, double high) {
  require(finite_nonneg(low) && std::isfinite(high),
          "uniform: low must be finite and nonnegative");
  require(high >= low, "uniform: high must be >= low");
  return {Family::kUniform, low, high};
}

DistributionSpec DistributionSpec::gamma(double shape, double scale) {
  require(std::isfinite(shape) && shape > 0.0,
          "gamma: shape must be finite and positive");
  require(std::isfinite(scale) && scale > 0.0,
          "gamma: scale must be finite and positive");
  return {Family::kGamma, shape, scale};
}

DistributionSpec DistributionSpec::bernoulli_scaled(double p, double scale) {
  require(std::isfinite(p) && p >= 0.0 && p <= 1.0,
          "bernoulli-scaled: p must lie in [0, 1]");
  require(finite_nonneg(scale),
          "bernoulli-scaled: scale must be finite and nonnegative");
  return {Family::kBernoulliScaled, p, scale};
}

std::size_t DistributionSpec::arity() const noexcept {
  switch (family_) {
    case Family::kDeterministic:
    case Family::kExponential:
      return 1;
    default:
      return 2;
  }
}

double DistributionSpec::mean() const noexcept {
  const auto [a, b] = params_;
  switch (family_) {
    case Family::kDeterministic:
      return a;
    case Family::kExponential:
      return 1.0 / a;
    case Family::kUniform:
      return 0.5 * (a + b);
    case Family::kGamma:
      return a * b;
    case Family::kBernoulliScaled:
      return a * b;
  }
  return 0.0;
}

double DistributionSpec::variance() const noexcept {
  const auto [a, b] = params_;
  switch (family_) {
    case Family::kDeterministic:
      return 0.0;
    case Family::kExponential:
      return 1.0 / (a * a);
    case Family::kUniform:
      return (b - a) * (b - a) / 12.0;
    case Family::kGamma:
      return a * b * b;
    case Family::kBernoulliScaled:
      return a * (1.0 - a) * b * b;
  }
  return 0.0;
}

double DistributionSpec::quantile(double u) const {
  if (!(u >= 0.0 && u < 1.0)) {
    throw ParameterError("quantile: u must lie in [0, 1)");
  }
  const auto [a, b] = params_;
  switch (family_) {
    case Family::kDeterministic:
      return a;
    case Family::kExponential:
      return -std::log1p(-u) / a;
    case Family::kUniform:
      return a + u * (b - a);
    case Family::kGamma:
      return u == 0.0 ? 0.0 : boost::math::gamma_p_inv(a, u) * b;
    case Family::kBernoulliScaled:
      return u < 1.0 - a ? 0.0 : b;
  }
  return 0.0;
}

double DistributionSpec::expected_max_with(double c) const {
  if (!finite_nonneg(c)) {
    throw ParameterError("expected_max_with: c must be finite and nonnegative");
  }
  const auto [a, b] = params_;
  switch (family_) {
    case Family::kDeterministic:
      return std::max(a, c);
    case Family::kExponential:
      // E[max(c, X)] = c + E[(X - c)^+] = c + exp(-rate c) / rate
      return c + std::exp(-a * c) / a;
    case Family::kUniform:
      if (c <= a) return mean();
      if (c >= b) return c;
      return c + (b - c) * (b - c) / (2.0 * (b - a));
    case Family::kGamma: {
      if (c == 0.0) return mean();
      const double x = c / b;
      const double excess = a * b * boost::math::gamma_q(a + 1.0, x) -
                            c * boost::math::gamma_q(a, x);
      return c + std::max(excess, 0.0);
    }
    case Family::kBernoulliScaled:
      return a * std::max(b, c) + (1.0 - a) * c;
  }
  return c;
}

double exact_mean(const DistributionSpec& spec) noexcept {
  return spec.mean();
}

double exact_variance(const DistributionSpec& spec) noexcept {
  return spec.variance();
}

std::optional<double> exact_mean_pairwise_max(const DistributionSpec& a,
                                              const DistributionSpec& b) {
  if (a.family() == Family::kDeterministic) {
    return b.expected_max_with(a.params()[0]);
  }
  if (b.family() == Family::kDeterministic) {
    return a.expected_max_with(b.params()[0]);
  }
  if (a.family() == Family::kExponential &&
      b.family() == Family::kExponential) {
    const double la = a.params()[0];
    const double lb = b.params()[0];
    return 1.0 / la + 1.0 / lb - 1.0 / (la + lb);
  }
  if (a.family() == Family::kUniform && a == b) {
    const double lo = a.params()[0];
    const double hi = a.params()[1];
    return lo + 2.0 * (hi - lo) / 3.0;
  }
  return std::nullopt;
}

std::string_view dependence_mode_name(DependenceMode mode) noexcept {
  switch (mode) {
    case DependenceMode::kIndependent:
      return "independent";
    case DependenceMode::kSharedDraw:
      return "shared-draw";
    case DependenceMode::kIdenticalService:
      return "identical-service";
  }
  return "unknown";
}

std::optional<DependenceMode> dependence_mode_from_name(
    std::string_view name) noexcept {
  for (DependenceMode m :
       {DependenceMode::kIndependent, DependenceMode::kSharedDraw,
        DependenceMode::kIdenticalService}) {
    if (dependence_mode_name(m) == name) return m;
  }
  return std::nullopt;
}

PairwiseMax expected_pairwise_max(const DistributionSpec& a,
                                  const DistributionSpec& b,
                                  DependenceMode mode, std::uint64_t seed,
                                  std::size_t samples) {
  switch (mode) {
    case DependenceMode::kIdenticalService:
      if (!(a == b)) {
        throw ParameterError(
            "identical-service mode requires identical service distributions");
      }
      return {a.mean(), 0.0, true};
    case DependenceMode::kSharedDraw:
      // Comonotone pair: max(F^-1(U), F^-1(U)) = F^-1(U); a constant
      // contributes no dependence at all.
      if (a == b) return {a.mean(), 0.0, true};
      if (a.family() == Family::kDeterministic ||
          b.family() == Family::kDeterministic) {
        return {*exact_mean_pairwise_max(a, b), 0.0, true};
      }
      break;
    case DependenceMode::kIndependent:
      if (auto exact = exact_mean_pairwise_max(a, b)) {
        return {*exact, 0.0, true};
      }
      break;
  }

  if (samples < 2) throw ParameterError("pairwise max: need >= 2 samples");
  const bool shared = mode == DependenceMode::kSharedDraw;
  double sum = 0.0;
  double sum_sq = 0.0;
  for (std::size_t j = 0; j < samples; ++j) {
    const double ux = shared ? uniform_at(seed, kSharedStream, j)
                             : uniform_at(seed, 0, j);
    const double uy = shared ? ux : uniform_at(seed, 1, j);
    const double m = std::max(a.quantile(ux), b.quantile(uy));
    sum += m;
    sum_sq += m * m;
  }
  const double n = static_cast<double>(samples);
  const double mean = sum / n;
  const double var = std::max(0.0, (sum_sq - n * mean * mean) / (n - 1.0));
  return {mean, std::sqrt(var / n), false};
}

}  // namespace tandem

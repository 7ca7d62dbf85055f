#include "tandem/bounds.hpp"

#include <cmath>
#include <string>

#include "tandem/error.hpp"

namespace tandem {
namespace {

void require_n(std::size_t n, const char* who) {
  if (n < 1) throw ParameterError(std::string(who) + ": n must be >= 1");
}

void require_variance(double variance, const char* who) {
  if (!std::isfinite(variance) || variance < 0.0) {
    throw ParameterError(std::string(who) +
                         ": variance must be finite and nonnegative");
  }
}

void require_finite(double x, const char* who) {
  if (!std::isfinite(x)) {
    throw ParameterError(std::string(who) + ": mean must be finite");
  }
}

}  // namespace

double max_coefficient(std::size_t n) {
  require_n(n, "max_coefficient");
  const double nn = static_cast<double>(n);
  return (nn - 1.0) / std::sqrt(2.0 * nn - 1.0);
}

double window_coefficient(std::size_t n) {
  require_n(n, "window_coefficient");
  const double nn = static_cast<double>(n);
  return 4.0 * std::sqrt(2.0 * (2.0 * nn - 1.0)) + max_coefficient(n);
}

double lemma4_bound(std::size_t n, std::span<const double> second_moments) {
  require_n(n, "lemma4_bound");
  if (second_moments.size() != n) {
    throw ParameterError("lemma4_bound: expected " + std::to_string(n) +
                         " second moments, got " +
                         std::to_string(second_moments.size()));
  }
  double total = 0.0;
  for (double m2 : second_moments) {
    if (!std::isfinite(m2) || m2 < 0.0) {
      throw ParameterError(
          "lemma4_bound: second moments must be finite and nonnegative");
    }
    total += m2;
  }
  const double nn = static_cast<double>(n);
  return 2.0 * std::sqrt(2.0 * (2.0 * nn - 1.0) / nn) * std::sqrt(total);
}

double lemma4_bound_iid(std::size_t n, double second_moment) {
  require_n(n, "lemma4_bound_iid");
  if (!std::isfinite(second_moment) || second_moment < 0.0) {
    throw ParameterError(
        "lemma4_bound_iid: second moment must be finite and nonnegative");
  }
  const double nn = static_cast<double>(n);
  return 2.0 * std::sqrt(2.0 * (2.0 * nn - 1.0) * second_moment);
}

double lemma5_bound(std::size_t n, double mean, double variance) {
  require_n(n, "lemma5_bound");
  require_finite(mean, "lemma5_bound");
  require_variance(variance, "lemma5_bound");
  return mean + max_coefficient(n) * std::sqrt(variance);
}

double lemma6_bound(std::size_t n, double mean, double variance) {
  require_n(n, "lemma6_bound");
  require_finite(mean, "lemma6_bound");
  require_variance(variance, "lemma6_bound");
  if (mean > 0.0) {
    throw PreconditionError("lemma6_bound: mean must be <= 0, got " +
                            std::to_string(mean));
  }
  return mean + window_coefficient(n) * std::sqrt(variance);
}

BoundReport theorem7_sandwich(std::size_t n,
                              std::span<const MomentSummary> stations,
                              bool independent) {
  require_n(n, "theorem7_sandwich");
  if (stations.size() < 2) {
    throw ParameterError(
        "theorem7_sandwich: need arrivals and at least one service station");
  }
  std::size_t m = 0;
  for (std::size_t i = 0; i < stations.size(); ++i) {
    const auto& s = stations[i];
    if (!std::isfinite(s.mean) || s.mean < 0.0) {
      throw ParameterError(
          "theorem7_sandwich: means must be finite and nonnegative");
    }
    require_variance(s.variance, "theorem7_sandwich");
    if (s.mean > stations[m].mean) m = i;
  }

  BoundComponents c;
  c.window_coeff = window_coefficient(n);
  c.max_coeff = max_coefficient(n);
  c.bottleneck_sd = std::sqrt(stations[m].variance);
  c.service_stations = stations.size() - 1;
  for (std::size_t i = 0; i < stations.size(); ++i) {
    if (i == m) continue;
    c.other_means += stations[i].mean;
    c.difference_sd_sum +=
        independent ? std::sqrt(stations[i].variance + stations[m].variance)
                    : std::sqrt(stations[i].variance) + c.bottleneck_sd;
  }
  c.mu_bound = c.other_means + c.window_coeff * c.difference_sd_sum +
               static_cast<double>(c.service_stations) * c.max_coeff *
                   c.bottleneck_sd;

  BoundReport report;
  report.n = n;
  report.bottleneck = m;
  report.lower = stations[m].mean;
  report.upper = report.lower + c.mu_bound / static_cast<double>(n);
  report.components = c;
  return report;
}

}  // namespace tandem

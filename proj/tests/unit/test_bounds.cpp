#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "tandem/bounds.hpp"
#include "tandem/distributions.hpp"
#include "tandem/error.hpp"

using namespace tandem;

TEST_CASE("lemma4 values") {
  const std::vector<double> one{1.0};
  CHECK(lemma4_bound(1, one) == doctest::Approx(2.0 * std::sqrt(2.0)));
  for (std::size_t n : {1u, 2u, 7u, 100u}) {
    const std::vector<double> m2(n, 0.3);
    CHECK(lemma4_bound(n, m2) == doctest::Approx(lemma4_bound_iid(n, 0.3)));
    CHECK(lemma4_bound_iid(n, 0.3) ==
          doctest::Approx(2.0 * std::sqrt(2.0 * (2.0 * n - 1.0) * 0.3)));
  }
  CHECK_THROWS_AS(lemma4_bound(2, std::vector<double>{1.0, -1.0}),
                  ParameterError);
  CHECK_THROWS_AS(lemma4_bound(3, std::vector<double>{1.0, 1.0}),
                  ParameterError);
  CHECK_THROWS_AS(lemma4_bound(0, std::vector<double>{}), ParameterError);
}

TEST_CASE("lemma4 dominates E[max partial sum], zero-mean uniform, n = 100") {
  std::mt19937_64 rng(100);
  std::uniform_real_distribution<double> xi(-0.5, 0.5);
  std::vector<double> maxima(100'000);
  for (auto& m : maxima) {
    double s = 0.0, best = -1e300;
    for (int k = 0; k < 100; ++k) {
      s += xi(rng);
      best = std::max(best, s);
    }
    m = best;
  }
  const auto est = oracle::summarize(maxima);
  CHECK(est.mean <= lemma4_bound_iid(100, 1.0 / 12.0));
}

TEST_CASE("lemma5 values") {
  CHECK(lemma5_bound(1, 0.7, 4.0) == 0.7);
  const auto u = DistributionSpec::uniform(0.0, 1.0);
  CHECK(lemma5_bound(2, u.mean(), u.variance()) ==
        doctest::Approx(2.0 / 3.0).epsilon(1e-14));
  CHECK(lemma5_bound(2, u.mean(), u.variance()) ==
        doctest::Approx(*exact_mean_pairwise_max(u, u)).epsilon(1e-14));

  double harmonic = 0.0;
  for (int k = 1; k <= 10; ++k) harmonic += 1.0 / k;
  const double b = lemma5_bound(10, 1.0, 1.0);
  CHECK(b == doctest::Approx(1.0 + 9.0 / std::sqrt(19.0)));
  CHECK(b == doctest::Approx(3.0647).epsilon(1e-4));
  CHECK(b >= harmonic);

  // Monte Carlo cross-check of E max of 10 exp(1) = H_10.
  std::mt19937_64 rng(10);
  std::exponential_distribution<double> e(1.0);
  std::vector<double> maxima(200'000);
  for (auto& m : maxima) {
    m = 0.0;
    for (int k = 0; k < 10; ++k) m = std::max(m, e(rng));
  }
  const auto est = oracle::summarize(maxima);
  CHECK(std::abs(est.mean - harmonic) < 4.0 * est.se);
  CHECK_THROWS_AS(lemma5_bound(3, 0.0, -1.0), ParameterError);
}

TEST_CASE("lemma6 values and precondition") {
  CHECK(lemma6_bound(25, -0.4, 0.0) == -0.4);
  CHECK(lemma6_bound(1, -0.4, 2.0) ==
        doctest::Approx(-0.4 + 4.0 * std::sqrt(2.0) * std::sqrt(2.0)));
  CHECK(lemma6_bound(1, -0.4, 2.0) >= -0.4);
  CHECK_THROWS_AS(lemma6_bound(5, 0.1, 1.0), PreconditionError);
  CHECK_NOTHROW(lemma6_bound(5, 0.0, 1.0));
}

TEST_CASE("lemma6 dominates E[max window sum], exp(1) - 1.2, n = 50") {
  std::mt19937_64 rng(50);
  std::exponential_distribution<double> e(1.0);
  std::vector<double> maxima(100'000);
  std::vector<double> xi(50);
  for (auto& m : maxima) {
    for (auto& x : xi) x = e(rng) - 1.2;
    double best = -1e300;
    for (std::size_t l = 0; l < 50; ++l) {
      double s = 0.0;
      for (std::size_t k = l; k < 50; ++k) {
        s += xi[k];
        best = std::max(best, s);
      }
    }
    m = best;
  }
  const auto est = oracle::summarize(maxima);
  CHECK(est.mean <= lemma6_bound(50, -0.2, 1.0));
}

TEST_CASE("window bound dominates element bound at mean 0") {
  for (std::size_t n = 1; n <= 1000; n *= 3) {
    for (double v : {0.0, 0.5, 2.0}) {
      CHECK(lemma6_bound(n, 0.0, v) >= lemma5_bound(n, 0.0, v));
    }
  }
}

TEST_CASE("bounds are nondecreasing in variance") {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> var(0.0, 5.0);
  std::uniform_int_distribution<std::size_t> nn(1, 5000);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = nn(rng);
    double a = var(rng), b = var(rng);
    if (a > b) std::swap(a, b);
    CHECK(lemma4_bound_iid(n, a) <= lemma4_bound_iid(n, b));
    CHECK(lemma5_bound(n, 1.0, a) <= lemma5_bound(n, 1.0, b));
    CHECK(lemma6_bound(n, -1.0, a) <= lemma6_bound(n, -1.0, b));
    std::vector<MomentSummary> lo{{1.0, a}, {0.5, 1.0}, {0.7, a}};
    std::vector<MomentSummary> hi{{1.0, b}, {0.5, 1.0}, {0.7, b}};
    CHECK(theorem7_sandwich(n, lo).upper <= theorem7_sandwich(n, hi).upper);
  }
}

TEST_CASE("theorem7 sandwich") {
  SUBCASE("zero variance collapses to the mean terms") {
    const std::vector<MomentSummary> s{{1.0, 0.0}, {0.5, 0.0}};
    for (std::size_t n : {1u, 10u, 1000u}) {
      const auto r = theorem7_sandwich(n, s);
      CHECK(r.lower == 1.0);
      CHECK(r.bottleneck == 0);
      CHECK(r.upper == doctest::Approx(1.0 + 0.5 / n));
    }
  }
  SUBCASE("lower is the largest mean, ties to the smallest index") {
    const std::vector<MomentSummary> s{
        {1.0, 1.0}, {0.8, 0.64}, {1.25, 1.5625}, {0.5, 0.25}};
    const auto r = theorem7_sandwich(100, s);
    CHECK(r.lower == 1.25);
    CHECK(r.bottleneck == 2);
    const std::vector<MomentSummary> tie{{1.0, 1.0}, {1.0, 2.0}, {1.0, 3.0}};
    CHECK(theorem7_sandwich(10, tie).bottleneck == 0);
  }
  SUBCASE("component breakdown reproduces the upper value") {
    const std::vector<MomentSummary> s{{1.0, 1.0}, {0.8, 0.64}, {1.25, 1.5625}};
    const std::size_t n = 400;
    const auto r = theorem7_sandwich(n, s);
    const auto& c = r.components;
    const double nn = n;
    const double c6 = 4.0 * std::sqrt(2.0 * (2.0 * nn - 1.0)) +
                      (nn - 1.0) / std::sqrt(2.0 * nn - 1.0);
    const double sd_sum =
        std::sqrt(1.0 + 1.5625) + std::sqrt(0.64 + 1.5625);
    const double mu = 1.8 + c6 * sd_sum +
                      2.0 * (nn - 1.0) / std::sqrt(2.0 * nn - 1.0) * 1.25;
    CHECK(c.other_means == doctest::Approx(1.8));
    CHECK(c.window_coeff == doctest::Approx(c6));
    CHECK(c.difference_sd_sum == doctest::Approx(sd_sum));
    CHECK(c.service_stations == 2);
    CHECK(c.mu_bound == doctest::Approx(mu));
    CHECK(r.upper == doctest::Approx(1.25 + mu / nn));
  }
  SUBCASE("width * sqrt(n) tends to its analytic limit") {
    const std::vector<MomentSummary> s{{1.0, 1.0}, {1.0, 1.0}, {1.0, 1.0}};
    // B(n)/sqrt(n) -> (8 + 1/sqrt 2) * 2 sqrt 2 + 2 / sqrt 2
    const double limit =
        (8.0 + 1.0 / std::sqrt(2.0)) * 2.0 * std::sqrt(2.0) + 2.0 / std::sqrt(2.0);
    double prev_gap = 1e300;
    for (std::size_t n = 100; n <= 1'000'000; n *= 10) {
      const double scaled = theorem7_sandwich(n, s).width() * std::sqrt(n);
      const double gap = std::abs(scaled - limit);
      CHECK(gap < prev_gap);
      CHECK(std::abs(scaled / limit - 1.0) < 0.2);
      prev_gap = gap;
    }
  }
  SUBCASE("dependence-free variant is wider") {
    const std::vector<MomentSummary> s{{1.0, 1.0}, {0.9, 2.0}, {0.5, 0.3}};
    CHECK(theorem7_sandwich(50, s, false).upper >=
          theorem7_sandwich(50, s, true).upper);
  }
  SUBCASE("validation") {
    const std::vector<MomentSummary> one{{1.0, 1.0}};
    CHECK_THROWS_AS(theorem7_sandwich(10, one), ParameterError);
    const std::vector<MomentSummary> neg{{-1.0, 1.0}, {1.0, 1.0}};
    CHECK_THROWS_AS(theorem7_sandwich(10, neg), ParameterError);
    const std::vector<MomentSummary> bad_var{{1.0, -1.0}, {1.0, 1.0}};
    CHECK_THROWS_AS(theorem7_sandwich(10, bad_var), ParameterError);
    const std::vector<MomentSummary> ok{{1.0, 1.0}, {1.0, 1.0}};
    CHECK_THROWS_AS(theorem7_sandwich(0, ok), ParameterError);
  }
}

#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "tandem/error.hpp"
#include "tandem/recursion.hpp"

using namespace tandem;

namespace {

constexpr double kTol = 1e-9;

Realization constant(std::size_t m, std::size_t n, double value) {
  return Realization::from_rows(
      std::vector<std::vector<double>>(m + 1, std::vector<double>(n, value)));
}

}  // namespace

TEST_CASE("single deterministic server: D_1(n) = n + 1") {
  const auto d = run_recursion(constant(1, 20, 1.0));
  for (std::size_t n = 0; n <= 20; ++n) {
    CHECK(d.at(0, n) == static_cast<double>(n));
    if (n > 0) CHECK(d.at(1, n) == static_cast<double>(n + 1));
  }
  CHECK(d.at(1, 0) == 0.0);
}

TEST_CASE("one customer traverses every station") {
  const auto r = Realization::from_rows({{0.3}, {1.1}, {2.5}});
  const auto d = run_recursion(r);
  CHECK(d.at(2, 1) == doctest::Approx(0.3 + 1.1 + 2.5));
  CHECK(explicit_solution(r, 2, 1) == doctest::Approx(0.3 + 1.1 + 2.5));
}

TEST_CASE("explicit solution small cases") {
  const auto r = Realization::from_rows({{0.7, 0.2}, {1.3, 0.4}});
  CHECK(explicit_solution(r, 1, 1) == doctest::Approx(0.7 + 1.3));
  const double by_hand = std::max(0.7 + 1.3 + 0.4, 0.7 + 0.2 + 0.4);
  CHECK(explicit_solution(r, 1, 2) == doctest::Approx(by_hand));
  CHECK(run_recursion(r).at(1, 2) == doctest::Approx(by_hand));
}

TEST_CASE("tuple_count is C(n+m-1, m)") {
  CHECK(tuple_count(1, 1) == 1);
  CHECK(tuple_count(1, 5) == 5);
  CHECK(tuple_count(2, 3) == 6);
  CHECK(tuple_count(3, 8) == 120);
  CHECK(tuple_count(5, 10) == 2002);
  CHECK(tuple_count(60, 1000) == std::numeric_limits<std::uint64_t>::max());
}

TEST_CASE("explicit solution budget and index guards") {
  std::mt19937_64 rng(1);
  const auto r = Realization::from_rows(oracle::random_times(rng, 3, 8));
  CHECK_THROWS_AS(explicit_solution(r, 3, 8, 100), BudgetError);
  CHECK_NOTHROW(explicit_solution(r, 3, 8, 120));
  CHECK_THROWS_AS(explicit_solution(r, 0, 3), IndexError);
  CHECK_THROWS_AS(explicit_solution(r, 4, 3), IndexError);
  CHECK_THROWS_AS(explicit_solution(r, 1, 9), IndexError);
  CHECK_THROWS_AS(explicit_solution(r, 1, 0), IndexError);
}

TEST_CASE("recursion agrees with tuple enumeration and event simulation") {
  std::mt19937_64 rng(20240601);
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    for (std::size_t m = 1; m <= 3; ++m) {
      const auto times = oracle::random_times(rng, m, 8);
      const auto r = Realization::from_rows(times);
      const auto d = run_recursion(r);
      const auto sim = oracle::simulate(times, oracle::Blocking::kNone);
      for (std::size_t n = 1; n <= 8; ++n) {
        for (std::size_t i = 1; i <= m; ++i) {
          const double brute = oracle::max_path(times, i, n);
          worst = std::max(worst, std::abs(d.at(i, n) - brute));
          worst = std::max(worst,
                           std::abs(explicit_solution(r, i, n) - brute));
          worst = std::max(worst, std::abs(d.at(i, n) - sim[i][n - 1]));
        }
      }
    }
  }
  CHECK(worst <= kTol);
}

TEST_CASE("schedule invariants") {
  std::mt19937_64 rng(5);
  const auto times = oracle::random_times(rng, 4, 300);
  const auto r = Realization::from_rows(times);
  const auto d = run_recursion(r);
  double arrivals = 0.0;
  for (std::size_t n = 1; n <= 300; ++n) {
    arrivals += r.tau(0, n);
    CHECK(d.at(0, n) == arrivals);
    for (std::size_t i = 0; i <= 4; ++i) CHECK(d.at(i, n) >= d.at(i, n - 1));
    for (std::size_t m = 1; m <= 4; ++m) {
      CHECK(d.at(m, n) >= d.at(m - 1, n) + r.tau(m, n));
    }
  }
}

TEST_CASE("zeta") {
  std::mt19937_64 rng(99);
  const auto r = Realization::from_rows(oracle::random_times(rng, 3, 20));
  const auto d = run_recursion(r);

  SUBCASE("zeta(0, n) = D_M(n)") {
    for (std::size_t n = 1; n <= 20; ++n) CHECK(zeta(r, 0, n) == d.at(3, n));
  }
  SUBCASE("subadditive on every triple") {
    for (std::size_t n = 2; n <= 20; ++n)
      for (std::size_t l = 0; l < n; ++l)
        for (std::size_t k = l + 1; k < n; ++k)
          CHECK(zeta(r, l, n) <= zeta(r, l, k) + zeta(r, k, n) + kTol);
  }
  SUBCASE("slice matches the shifted tuple maximum") {
    // zeta(l, n) is the path maximum over customers l+1..n.
    oracle::Times shifted(4);
    for (std::size_t i = 0; i <= 3; ++i) {
      const auto row = r.row(i);
      shifted[i].assign(row.begin() + 5, row.begin() + 12);
    }
    CHECK(zeta(r, 5, 12) == doctest::Approx(oracle::max_path(shifted, 3, 7)));
  }
  SUBCASE("index errors") {
    CHECK_THROWS_AS(zeta(r, 3, 3), IndexError);
    CHECK_THROWS_AS(zeta(r, 5, 2), IndexError);
    CHECK_THROWS_AS(zeta(r, 0, 21), IndexError);
  }
}

TEST_CASE("zeta on a deterministic single server is (n - l) + 1") {
  const auto r = constant(1, 12, 1.0);
  for (std::size_t n = 1; n <= 12; ++n)
    for (std::size_t l = 0; l < n; ++l)
      CHECK(zeta(r, l, n) == static_cast<double>(n - l + 1));
}

TEST_CASE("raising one time never lowers a later epoch") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> pick_station(0, 2);
  std::uniform_int_distribution<std::size_t> pick_customer(1, 40);
  for (int trial = 0; trial < 200; ++trial) {
    const auto times = oracle::random_times(rng, 2, 40);
    auto r = Realization::from_rows(times);
    const auto before = run_recursion(r);
    const std::size_t i = pick_station(rng);
    const std::size_t n = pick_customer(rng);
    r.set_tau(i, n, r.tau(i, n) + 0.5);
    const auto after = run_recursion(r);
    for (std::size_t j = 0; j <= 2; ++j)
      for (std::size_t k = n; k <= 40; ++k)
        CHECK(after.at(j, k) >= before.at(j, k));
  }
}

TEST_CASE("a leading all-zero customer leaves later increments unchanged") {
  std::mt19937_64 rng(8);
  auto times = oracle::random_times(rng, 3, 50);
  const auto base = run_recursion(Realization::from_rows(times));
  for (auto& row : times) row.insert(row.begin(), 0.0);
  const auto padded = run_recursion(Realization::from_rows(times));
  for (std::size_t i = 0; i <= 3; ++i) {
    CHECK(padded.at(i, 1) == 0.0);
    for (std::size_t n = 1; n <= 50; ++n) {
      CHECK(padded.at(i, n + 1) - padded.at(i, n) ==
            doctest::Approx(base.at(i, n) - base.at(i, n - 1)));
    }
  }
}

TEST_CASE("cycle-time trace") {
  SUBCASE("deterministic: (n + 1) / n") {
    const auto trace = cycle_time_trace(constant(1, 50, 1.0));
    REQUIRE(trace.size() == 50);
    for (const auto& p : trace) {
      CHECK(p.gamma_hat ==
            doctest::Approx((p.n + 1.0) / static_cast<double>(p.n)));
    }
  }
  SUBCASE("first point is the single-customer sojourn") {
    const auto r = Realization::from_rows({{0.5, 1.0}, {0.25, 1.0}, {2.0, 1.0}});
    CHECK(cycle_time_trace(r).front().gamma_hat == doctest::Approx(2.75));
  }
  SUBCASE("exp(1) everywhere, M = 2, N = 1e5 ends near gamma = 1") {
    std::mt19937_64 rng(13);
    const auto r = Realization::from_rows(oracle::random_times(rng, 2, 100'000));
    CHECK(std::abs(cycle_time_trace(r).back().gamma_hat - 1.0) < 0.05);
  }
}

TEST_CASE("rolling engine matches the full schedule") {
  std::mt19937_64 rng(17);
  const auto r = Realization::from_rows(oracle::random_times(rng, 3, 100));
  const auto d = run_recursion(r);
  TandemRecursion engine(3);
  std::vector<double> col(4);
  for (std::size_t n = 1; n <= 100; ++n) {
    r.column(n, col);
    CHECK(engine.advance(col) == d.at(3, n));
  }
  CHECK(engine.customers() == 100);
  CHECK_THROWS_AS(TandemRecursion(0), ParameterError);
  CHECK_THROWS_AS(engine.advance(std::vector<double>(3)), IndexError);
}

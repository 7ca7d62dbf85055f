#include "tandem/blocking.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "tandem/error.hpp"

namespace tandem {
namespace {

void require_two_stations(const Realization& r) {
  if (r.service_stations() != 2) {
    throw OutOfScopeError(
        "blocking requires exactly two service stations; got " +
        std::to_string(r.service_stations()));
  }
}

void require_customer(const Realization& r, std::size_t n, std::size_t need,
                      const char* what) {
  if (n < 1 || need > r.customers()) {
    throw IndexError(std::string(what) + ": n=" + std::to_string(n) +
                     " needs customers 1.." + std::to_string(need) +
                     ", realization has " + std::to_string(r.customers()));
  }
}

double tau_or_zero(const Realization& r, std::size_t station,
                   std::size_t customer) {
  return customer == 0 ? 0.0 : r.tau(station, customer);
}

// max_k { A(k) + S(k) } where A(k) = sum_{j<=k} tau_0j and
// S(k) = sum_{j=k}^{last} term(j), computed by direct summation per k.
// With add_service_at_k, tau_1k is added as well.
template <class Term>
double max_over_k(const Realization& r, std::size_t n, std::size_t last,
                  Term term, bool add_service_at_k = false) {
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 1; k <= n; ++k) {
    double s = 0.0;
    for (std::size_t j = 1; j <= k; ++j) s += r.tau(0, j);
    if (add_service_at_k) s += r.tau(1, k);
    for (std::size_t j = k; j <= last; ++j) s += term(j);
    best = std::max(best, s);
  }
  return best;
}

}  // namespace

std::string_view blocking_rule_name(BlockingRule rule) noexcept {
  return rule == BlockingRule::kManufacturing ? "manufacturing"
                                              : "communication";
}

std::optional<BlockingRule> blocking_rule_of(Discipline discipline) noexcept {
  switch (discipline) {
    case Discipline::kManufacturing:
      return BlockingRule::kManufacturing;
    case Discipline::kCommunication:
      return BlockingRule::kCommunication;
    case Discipline::kInfinite:
      break;
  }
  return std::nullopt;
}

double BlockingRecursion::advance(std::span<const double> column) {
  if (column.size() != 3) {
    throw OutOfScopeError("blocking requires exactly two service stations");
  }
  auto& [d0, d1, d2] = epochs_;
  d0 += column[0];
  if (rule_ == BlockingRule::kManufacturing) {
    d1 = std::max(std::max(d0, d1) + column[1], d2);
  } else {
    d1 = std::max({d0, d1, d2}) + column[1];
  }
  d2 = std::max(d1, d2) + column[2];
  return d2;
}

DepartureSchedule run_blocking_recursion(const Realization& r,
                                         BlockingRule rule) {
  require_two_stations(r);
  DepartureSchedule d(2, r.customers());
  BlockingRecursion engine(rule);
  std::array<double, 3> col{};
  for (std::size_t n = 1; n <= r.customers(); ++n) {
    r.column(n, col);
    engine.advance(col);
    for (std::size_t i = 0; i < 3; ++i) d.set(i, n, engine.epochs()[i]);
  }
  return d;
}

double manufacturing_explicit_d1(const Realization& r, std::size_t n) {
  require_two_stations(r);
  require_customer(r, n, n, "manufacturing_explicit_d1");
  return max_over_k(
      r, n, n - 1,
      [&](std::size_t j) { return std::max(r.tau(1, j + 1), r.tau(2, j)); },
      true);
}

double manufacturing_lower_envelope(const Realization& r, std::size_t n) {
  require_two_stations(r);
  require_customer(r, n, n + 1, "manufacturing_lower_envelope");
  return max_over_k(r, n, n, [&](std::size_t j) {
    return std::max(r.tau(1, j + 1), r.tau(2, j));
  });
}

double manufacturing_upper_envelope(const Realization& r, std::size_t n) {
  require_two_stations(r);
  require_customer(r, n, n, "manufacturing_upper_envelope");
  return max_over_k(r, n, n, [&](std::size_t j) {
    return std::max(r.tau(1, j), tau_or_zero(r, 2, j - 1));
  });
}

Sandwich sandwich_d1(const Realization& r, std::size_t n) {
  require_two_stations(r);
  require_customer(r, n, n + 1, "sandwich_d1");
  const double slack = std::max(r.tau(1, n + 1), r.tau(2, n));
  return {manufacturing_lower_envelope(r, n) - slack,
          manufacturing_upper_envelope(r, n)};
}

double communication_explicit_d2(const Realization& r, std::size_t n) {
  require_two_stations(r);
  require_customer(r, n, n, "communication_explicit_d2");
  return max_over_k(r, n, n, [&](std::size_t j) {
    return r.tau(1, j) + r.tau(2, j);
  });
}

CycleTime blocking_cycle_time(const SystemSpec& spec, std::uint64_t mc_seed,
                              std::size_t mc_samples) {
  spec.validate();
  const auto rule = blocking_rule_of(spec.discipline);
  if (!rule) {
    throw OutOfScopeError("blocking_cycle_time needs a blocking discipline");
  }
  const auto& st = spec.stations;
  if (*rule == BlockingRule::kCommunication) {
    return {std::max(st[0].mean(), st[1].mean() + st[2].mean()), 0.0, true};
  }
  const PairwiseMax emax =
      expected_pairwise_max(st[1], st[2], spec.mode, mc_seed, mc_samples);
  if (st[0].mean() >= emax.value) return {st[0].mean(), 0.0, true};
  return {emax.value, emax.standard_error, emax.exact};
}

}  // namespace tandem

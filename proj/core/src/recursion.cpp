#include "tandem/recursion.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "tandem/error.hpp"

namespace tandem {

DepartureSchedule::DepartureSchedule(std::size_t service_stations,
                                     std::size_t customers)
    : stations_(service_stations + 1),
      customers_(customers),
      data_(stations_ * (customers + 1), 0.0) {}

double DepartureSchedule::at(std::size_t station, std::size_t n) const {
  if (station >= stations_ || n > customers_) {
    throw IndexError("D(" + std::to_string(station) + ", " +
                     std::to_string(n) + ") out of range");
  }
  return data_[station * (customers_ + 1) + n];
}

std::span<const double> DepartureSchedule::station(std::size_t station) const {
  if (station >= stations_) throw IndexError("station out of range");
  return {data_.data() + station * (customers_ + 1), customers_ + 1};
}

TandemRecursion::TandemRecursion(std::size_t service_stations)
    : epochs_(service_stations + 1, 0.0) {
  if (service_stations < 1) {
    throw ParameterError("need at least one service station");
  }
}

double TandemRecursion::advance(std::span<const double> column) {
  if (column.size() != epochs_.size()) {
    throw IndexError("column size does not match station count");
  }
  epochs_[0] += column[0];
  for (std::size_t m = 1; m < epochs_.size(); ++m) {
    epochs_[m] = std::max(epochs_[m - 1], epochs_[m]) + column[m];
  }
  ++customers_;
  return epochs_.back();
}

DepartureSchedule run_recursion(const Realization& r) {
  const std::size_t stations = r.service_stations() + 1;
  DepartureSchedule d(r.service_stations(), r.customers());
  TandemRecursion engine(r.service_stations());
  std::vector<double> col(stations);
  for (std::size_t n = 1; n <= r.customers(); ++n) {
    r.column(n, col);
    engine.advance(col);
    for (std::size_t i = 0; i < stations; ++i) d.set(i, n, engine.epochs()[i]);
  }
  return d;
}

std::uint64_t tuple_count(std::size_t m, std::size_t n) noexcept {
  if (n == 0) return 0;
  // C(n+m-1, m) computed incrementally; each partial product is itself a
  // binomial coefficient so the division is exact.
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  __extension__ using Wide = unsigned __int128;
  Wide c = 1;
  for (std::size_t j = 1; j <= m; ++j) {
    c = c * (n - 1 + j) / j;
    if (c > kMax) return kMax;
  }
  return static_cast<std::uint64_t>(c);
}

namespace {

// Recursive descent over k_stage..k_m. `prefix` holds the path sum of
// stages 0..stage-1, with the stage-(stage-1) sum closed at `from`.
struct TupleSearch {
  const Realization& r;
  std::size_t m;
  std::size_t n;

  double sum(std::size_t station, std::size_t lo, std::size_t hi) const {
    double s = 0.0;
    for (std::size_t j = lo; j <= hi; ++j) s += r.tau(station, j);
    return s;
  }

  // Stage i (1..m) picks k_i >= from; stage m+1 closes at n.
  double descend(std::size_t stage, std::size_t from, double prefix) const {
    if (stage > m) return prefix + sum(m, from, n);
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t k = from; k <= n; ++k) {
      const double contribution =
          stage == 1 ? sum(0, 1, k) : sum(stage - 1, from, k);
      best = std::max(best, descend(stage + 1, k, prefix + contribution));
    }
    return best;
  }
};

}  // namespace

double explicit_solution(const Realization& r, std::size_t m, std::size_t n,
                         std::uint64_t budget) {
  if (m < 1 || m > r.service_stations()) {
    throw IndexError("explicit_solution: station " + std::to_string(m) +
                     " out of range 1.." +
                     std::to_string(r.service_stations()));
  }
  if (n < 1 || n > r.customers()) {
    throw IndexError("explicit_solution: customer " + std::to_string(n) +
                     " out of range 1.." + std::to_string(r.customers()));
  }
  const std::uint64_t tuples = tuple_count(m, n);
  if (tuples > budget) {
    throw BudgetError("explicit_solution: " + std::to_string(tuples) +
                      " index tuples exceed budget " + std::to_string(budget));
  }
  return TupleSearch{r, m, n}.descend(1, 1, 0.0);
}

double zeta(const Realization& r, std::size_t l, std::size_t n) {
  if (l >= n || n > r.customers()) {
    throw IndexError("zeta(" + std::to_string(l) + ", " + std::to_string(n) +
                     ") requires 0 <= l < n <= " +
                     std::to_string(r.customers()));
  }
  const Realization sub = r.slice(l, n);
  TandemRecursion engine(sub.service_stations());
  std::vector<double> col(sub.service_stations() + 1);
  double last = 0.0;
  for (std::size_t j = 1; j <= sub.customers(); ++j) {
    sub.column(j, col);
    last = engine.advance(col);
  }
  return last;
}

std::vector<TracePoint> cycle_time_trace(const DepartureSchedule& schedule) {
  const auto last = schedule.last_station();
  std::vector<TracePoint> trace;
  trace.reserve(schedule.customers());
  for (std::size_t n = 1; n <= schedule.customers(); ++n) {
    trace.push_back({n, last[n] / static_cast<double>(n)});
  }
  return trace;
}

std::vector<TracePoint> cycle_time_trace(const Realization& r) {
  return cycle_time_trace(run_recursion(r));
}

}  // namespace tandem

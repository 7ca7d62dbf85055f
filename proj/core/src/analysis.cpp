#include "tandem/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <thread>

#include "tandem/error.hpp"
#include "tandem/random.hpp"

namespace tandem {
namespace {

// Runs fn(r) for r in [0, count) across the available hardware threads.
template <class Fn>
void parallel_for(std::size_t count, Fn fn) {
  const std::size_t workers = std::min<std::size_t>(
      count, std::max(1u, std::thread::hardware_concurrency()));
  if (workers <= 1) {
    for (std::size_t r = 0; r < count; ++r) fn(r);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t r = w; r < count; r += workers) fn(r);
    });
  }
}

void validate_grid(std::span<const std::size_t> grid) {
  if (grid.empty()) throw ParameterError("grid must not be empty");
  if (grid.front() < 1) throw ParameterError("grid points must be >= 1");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (grid[i] <= grid[i - 1]) {
      throw ParameterError("grid must be strictly increasing");
    }
  }
}

std::variant<TandemRecursion, BlockingRecursion> make_engine(
    const SystemSpec& spec) {
  if (auto rule = blocking_rule_of(spec.discipline)) {
    return BlockingRecursion(*rule);
  }
  return TandemRecursion(spec.service_stations());
}

}  // namespace

CycleTime closed_form_gamma(const SystemSpec& spec, std::uint64_t mc_seed) {
  spec.validate();
  if (blocking_rule_of(spec.discipline)) {
    return blocking_cycle_time(spec, mc_seed);
  }
  double gamma = 0.0;
  for (const auto& s : spec.stations) gamma = std::max(gamma, s.mean());
  return {gamma, 0.0, true};
}

double throughput(const SystemSpec& spec, std::uint64_t mc_seed) {
  spec.validate();
  const bool any_positive =
      std::any_of(spec.stations.begin(), spec.stations.end(),
                  [](const DistributionSpec& s) { return s.mean() > 0.0; });
  if (!any_positive) {
    throw UndefinedThroughputError(
        "throughput is undefined when every station mean is zero");
  }
  return 1.0 / closed_form_gamma(spec, mc_seed).gamma;
}

Trajectory::Trajectory(const SystemSpec& spec, std::uint64_t seed)
    : spec_((spec.validate(), spec)),
      seed_(seed),
      column_(spec.stations.size()),
      engine_(make_engine(spec)) {}

double Trajectory::step() {
  ++customers_;
  sample_customer(spec_, seed_, customers_, column_);
  last_ = std::visit([&](auto& e) { return e.advance(column_); }, engine_);
  return last_;
}

CycleTimeEstimate estimate_gamma(const SystemSpec& spec, std::size_t n,
                                 std::size_t replications,
                                 std::uint64_t seed) {
  spec.validate();
  if (n < 1) throw ParameterError("estimate_gamma: n must be >= 1");
  if (replications < 2) {
    throw ParameterError("estimate_gamma: replications must be >= 2");
  }
  std::vector<double> ratios(replications);
  parallel_for(replications, [&](std::size_t r) {
    Trajectory t(spec, derive_seed(seed, r));
    for (std::size_t j = 0; j < n; ++j) t.step();
    ratios[r] = t.last_departure() / static_cast<double>(n);
  });

  // Summed in replication order so the result is independent of threading.
  const double reps = static_cast<double>(replications);
  double sum = 0.0;
  for (double x : ratios) sum += x;
  const double mean = sum / reps;
  double ss = 0.0;
  for (double x : ratios) ss += (x - mean) * (x - mean);
  const double sd = std::sqrt(ss / (reps - 1.0));

  CycleTimeEstimate est;
  est.point = mean;
  est.sample_sd = sd;
  est.half_width = 1.96 * sd / std::sqrt(reps);
  est.n = n;
  est.replications = replications;
  est.seed = seed;
  return est;
}

std::vector<double> trajectory_ratios(const SystemSpec& spec,
                                      std::span<const std::size_t> grid,
                                      std::uint64_t seed) {
  validate_grid(grid);
  Trajectory t(spec, seed);
  std::vector<double> out;
  out.reserve(grid.size());
  for (std::size_t g : grid) {
    while (t.customers() < g) t.step();
    out.push_back(t.last_departure() / static_cast<double>(g));
  }
  return out;
}

std::vector<MomentSummary> moment_summaries(const SystemSpec& spec) {
  std::vector<MomentSummary> out;
  out.reserve(spec.stations.size());
  for (const auto& s : spec.stations) out.push_back({s.mean(), s.variance()});
  return out;
}

std::optional<BoundReport> sandwich_for(const SystemSpec& spec, std::size_t n) {
  spec.validate();
  if (spec.discipline != Discipline::kInfinite) return std::nullopt;
  const auto moments = moment_summaries(spec);
  return theorem7_sandwich(n, moments,
                           spec.mode == DependenceMode::kIndependent);
}

std::vector<ConvergenceRow> convergence_study(const SystemSpec& spec,
                                              std::span<const std::size_t> grid,
                                              std::size_t replications,
                                              std::uint64_t seed) {
  spec.validate();
  validate_grid(grid);
  if (replications < 1) {
    throw ParameterError("convergence_study: replications must be >= 1");
  }
  const double gamma = closed_form_gamma(spec, seed).gamma;

  std::vector<std::vector<double>> per_rep(replications);
  parallel_for(replications, [&](std::size_t r) {
    per_rep[r] = trajectory_ratios(spec, grid, derive_seed(seed, r));
  });

  std::vector<ConvergenceRow> rows;
  rows.reserve(grid.size());
  const double reps = static_cast<double>(replications);
  for (std::size_t g = 0; g < grid.size(); ++g) {
    ConvergenceRow row;
    row.n = grid[g];
    for (std::size_t r = 0; r < replications; ++r) {
      row.mean_gamma_hat += per_rep[r][g];
      row.mean_abs_error += std::abs(per_rep[r][g] - gamma);
    }
    row.mean_gamma_hat /= reps;
    row.mean_abs_error /= reps;
    const auto sandwich = sandwich_for(spec, grid[g]);
    row.sandwich_width = sandwich ? sandwich->width()
                                  : std::numeric_limits<double>::quiet_NaN();
    rows.push_back(row);
  }
  return rows;
}

}  // namespace tandem

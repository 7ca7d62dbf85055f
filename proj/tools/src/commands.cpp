#include "tandem_cli/commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "tandem/random.hpp"

namespace tandem::cli {
namespace {

using ojson = nlohmann::ordered_json;

ojson envelope(Command command, const ExperimentConfig& config) {
  ojson j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command_name(command);
  j["config"] = to_json(config);
  return j;
}

std::string dump(const ojson& j) { return j.dump(2) + "\n"; }

// Minimal RFC 4180 writer; every field we emit is numeric or a bare word.
class CsvTable {
 public:
  explicit CsvTable(std::initializer_list<std::string_view> header) {
    row_begin();
    for (auto h : header) field(std::string(h));
  }
  CsvTable& row_begin() {
    if (!out_.str().empty()) out_ << "\r\n";
    first_ = true;
    return *this;
  }
  CsvTable& field(const std::string& value) {
    if (!first_) out_ << ',';
    out_ << value;
    first_ = false;
    return *this;
  }
  CsvTable& number(double value) { return field(format_number(value)); }
  CsvTable& count(std::uint64_t value) { return field(std::to_string(value)); }
  std::string str() const { return out_.str() + "\r\n"; }

 private:
  std::ostringstream out_;
  bool first_ = true;
};

ojson bound_json(const BoundReport& b) {
  ojson j;
  j["n"] = b.n;
  j["lower"] = b.lower;
  j["upper"] = b.upper;
  j["width"] = b.width();
  j["bottleneck"] = b.bottleneck;
  const auto& c = b.components;
  j["components"] = {{"other_means", c.other_means},
                     {"window_coeff", c.window_coeff},
                     {"difference_sd_sum", c.difference_sd_sum},
                     {"max_coeff", c.max_coeff},
                     {"bottleneck_sd", c.bottleneck_sd},
                     {"service_stations", c.service_stations},
                     {"mu_bound", c.mu_bound}};
  return j;
}

ojson gamma_json(const CycleTime& g) {
  return {{"gamma", g.gamma},
          {"standard_error", g.standard_error},
          {"exact", g.exact}};
}

CommandResult simulate(const ExperimentConfig& c, const CommandOptions& opt) {
  const CycleTimeEstimate est =
      estimate_gamma(c.system, c.n, c.replications, c.seed);
  const CycleTime gamma = closed_form_gamma(c.system, c.seed);
  const auto sandwich = sandwich_for(c.system, c.n);

  CommandResult result;
  if (c.format == OutputFormat::kJson) {
    ojson j = envelope(Command::kSimulate, c);
    j["result"]["estimate"] = {{"point", est.point},
                               {"half_width", est.half_width},
                               {"sample_sd", est.sample_sd},
                               {"n", est.n},
                               {"replications", est.replications},
                               {"seed", est.seed}};
    j["result"]["closed_form"] = gamma_json(gamma);
    j["result"]["sandwich"] = sandwich ? bound_json(*sandwich) : ojson(nullptr);
    result.output = dump(j);
  } else {
    CsvTable t{"n",     "replications",   "seed",          "point",
               "half_width", "gamma",     "sandwich_lower", "sandwich_upper"};
    t.row_begin()
        .count(est.n)
        .count(est.replications)
        .count(est.seed)
        .number(est.point)
        .number(est.half_width)
        .number(gamma.gamma)
        .number(sandwich ? sandwich->lower : NAN)
        .number(sandwich ? sandwich->upper : NAN);
    result.output = t.str();
  }

  if (opt.want_trace) {
    const auto rule = blocking_rule_of(c.system.discipline);
    CsvTable t = rule ? CsvTable{"n", "gamma_hat", "rule"}
                      : CsvTable{"n", "gamma_hat"};
    Trajectory traj(c.system, derive_seed(c.seed, 0));
    for (std::size_t n = 1; n <= c.n; ++n) {
      const double d = traj.step();
      t.row_begin().count(n).number(d / static_cast<double>(n));
      if (rule) t.field(std::string(blocking_rule_name(*rule)));
    }
    result.trace_csv = t.str();
  }
  return result;
}

struct Check {
  std::string name;
  double max_abs_deviation = 0.0;
  std::uint64_t violations = 0;
  std::uint64_t comparisons = 0;

  void deviation(double d) {
    ++comparisons;
    max_abs_deviation = std::max(max_abs_deviation, std::abs(d));
    if (std::abs(d) > kVerifyTolerance) ++violations;
  }
  // Records a one-sided constraint lhs <= rhs.
  void at_most(double lhs, double rhs) {
    ++comparisons;
    const double excess = std::max(0.0, lhs - rhs);
    max_abs_deviation = std::max(max_abs_deviation, excess);
    if (excess > kVerifyTolerance) ++violations;
  }
  bool passed() const { return violations == 0; }
};

CommandResult verify(const ExperimentConfig& c) {
  const std::size_t m_max = c.system.service_stations();
  const std::size_t horizon = c.verify_n;
  if (tuple_count(m_max, horizon) > kDefaultTupleBudget) {
    throw BudgetError("verify: " + std::to_string(tuple_count(m_max, horizon)) +
                      " index tuples per realization exceed the budget " +
                      std::to_string(kDefaultTupleBudget) +
                      "; lower verify_n");
  }
  SystemSpec infinite = c.system;
  infinite.discipline = Discipline::kInfinite;
  const bool two = m_max == 2;

  std::vector<Check> checks{{"recursion_vs_explicit"}, {"subadditivity"}};
  if (two) {
    checks.push_back({"manufacturing_explicit_d1"});
    checks.push_back({"communication_explicit_d2"});
    checks.push_back({"manufacturing_sandwich"});
    checks.push_back({"discipline_ordering"});
  }

  for (std::size_t rep = 0; rep < c.realizations; ++rep) {
    const Realization r =
        sample_realization(infinite, horizon + 1, derive_seed(c.seed, rep));
    const Realization head = r.slice(0, horizon);
    const auto d = run_recursion(head);
    for (std::size_t m = 1; m <= m_max; ++m) {
      for (std::size_t n = 1; n <= horizon; ++n) {
        checks[0].deviation(d.at(m, n) - explicit_solution(head, m, n));
      }
    }
    for (std::size_t n = 2; n <= horizon; ++n) {
      for (std::size_t l = 0; l < n; ++l) {
        for (std::size_t k = l + 1; k < n; ++k) {
          checks[1].at_most(zeta(head, l, n),
                            zeta(head, l, k) + zeta(head, k, n));
        }
      }
    }
    if (!two) continue;
    const auto mfg = run_blocking_recursion(head, BlockingRule::kManufacturing);
    const auto com = run_blocking_recursion(head, BlockingRule::kCommunication);
    for (std::size_t n = 1; n <= horizon; ++n) {
      checks[2].deviation(mfg.at(1, n) - manufacturing_explicit_d1(head, n));
      checks[3].deviation(com.at(2, n) - communication_explicit_d2(head, n));
      const Sandwich s = sandwich_d1(r, n);
      checks[4].at_most(s.lower, mfg.at(1, n));
      checks[4].at_most(mfg.at(1, n), s.upper);
      checks[5].at_most(d.at(2, n), mfg.at(2, n));
      checks[5].at_most(mfg.at(2, n), com.at(2, n));
    }
  }

  const bool passed = std::all_of(checks.begin(), checks.end(),
                                  [](const Check& k) { return k.passed(); });
  CommandResult result;
  result.exit_code = passed ? kExitOk : kExitVerifyFailed;
  if (c.format == OutputFormat::kJson) {
    ojson j = envelope(Command::kVerify, c);
    j["result"]["tolerance"] = kVerifyTolerance;
    auto arr = ojson::array();
    for (const auto& k : checks) {
      arr.push_back({{"name", k.name},
                     {"max_abs_deviation", k.max_abs_deviation},
                     {"violations", k.violations},
                     {"comparisons", k.comparisons},
                     {"passed", k.passed()}});
    }
    j["result"]["checks"] = arr;
    j["result"]["passed"] = passed;
    result.output = dump(j);
  } else {
    CsvTable t{"check", "max_abs_deviation", "violations", "comparisons",
               "passed"};
    for (const auto& k : checks) {
      t.row_begin()
          .field(k.name)
          .number(k.max_abs_deviation)
          .count(k.violations)
          .count(k.comparisons)
          .field(k.passed() ? "true" : "false");
    }
    result.output = t.str();
  }
  return result;
}

CommandResult bounds(const ExperimentConfig& c) {
  if (c.system.discipline != Discipline::kInfinite) {
    throw OutOfScopeError(
        "bounds: the finite-n sandwich is defined for infinite buffers only");
  }
  std::vector<BoundReport> reports;
  for (std::size_t n : c.grid) reports.push_back(*sandwich_for(c.system, n));

  CommandResult result;
  if (c.format == OutputFormat::kJson) {
    ojson j = envelope(Command::kBounds, c);
    auto arr = ojson::array();
    for (const auto& b : reports) arr.push_back(bound_json(b));
    j["result"]["reports"] = arr;
    result.output = dump(j);
  } else {
    CsvTable t{"n",           "lower",         "upper",
               "width",       "bottleneck",    "other_means",
               "window_coeff", "difference_sd_sum", "max_coeff",
               "bottleneck_sd", "mu_bound"};
    for (const auto& b : reports) {
      const auto& k = b.components;
      t.row_begin()
          .count(b.n)
          .number(b.lower)
          .number(b.upper)
          .number(b.width())
          .count(b.bottleneck)
          .number(k.other_means)
          .number(k.window_coeff)
          .number(k.difference_sd_sum)
          .number(k.max_coeff)
          .number(k.bottleneck_sd)
          .number(k.mu_bound);
    }
    result.output = t.str();
  }
  return result;
}

CommandResult converge(const ExperimentConfig& c) {
  const auto rows =
      convergence_study(c.system, c.grid, c.replications, c.seed);
  const CycleTime gamma = closed_form_gamma(c.system, c.seed);
  CommandResult result;
  if (c.format == OutputFormat::kJson) {
    ojson j = envelope(Command::kConverge, c);
    j["result"]["gamma"] = gamma.gamma;
    auto arr = ojson::array();
    for (const auto& r : rows) {
      arr.push_back({{"n", r.n},
                     {"mean_gamma_hat", r.mean_gamma_hat},
                     {"mean_abs_error", r.mean_abs_error},
                     {"sandwich_width", std::isnan(r.sandwich_width)
                                            ? ojson(nullptr)
                                            : ojson(r.sandwich_width)}});
    }
    j["result"]["rows"] = arr;
    result.output = dump(j);
  } else {
    CsvTable t{"n", "mean_gamma_hat", "mean_abs_error", "sandwich_width"};
    for (const auto& r : rows) {
      t.row_begin()
          .count(r.n)
          .number(r.mean_gamma_hat)
          .number(r.mean_abs_error)
          .number(r.sandwich_width);
    }
    result.output = t.str();
  }
  return result;
}

CommandResult formula(const ExperimentConfig& c) {
  const CycleTime gamma = closed_form_gamma(c.system, c.seed);
  const double pi = throughput(c.system, c.seed);
  CommandResult result;
  if (c.format == OutputFormat::kJson) {
    ojson j = envelope(Command::kFormula, c);
    j["result"] = {{"gamma", gamma.gamma},
                   {"throughput", pi},
                   {"standard_error", gamma.standard_error},
                   {"exact", gamma.exact}};
    result.output = dump(j);
  } else {
    CsvTable t{"gamma", "throughput", "standard_error", "exact"};
    t.row_begin()
        .number(gamma.gamma)
        .number(pi)
        .number(gamma.standard_error)
        .field(gamma.exact ? "true" : "false");
    result.output = t.str();
  }
  return result;
}

}  // namespace

std::optional<Command> command_from_name(std::string_view name) noexcept {
  for (Command c : {Command::kSimulate, Command::kVerify, Command::kBounds,
                    Command::kConverge, Command::kFormula}) {
    if (command_name(c) == name) return c;
  }
  return std::nullopt;
}

std::string_view command_name(Command command) noexcept {
  switch (command) {
    case Command::kSimulate:
      return "simulate";
    case Command::kVerify:
      return "verify";
    case Command::kBounds:
      return "bounds";
    case Command::kConverge:
      return "converge";
    case Command::kFormula:
      return "formula";
  }
  return "unknown";
}

std::string format_number(double value) {
  if (std::isnan(value)) return "";
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, end);
}

std::string error_object(std::string_view code, std::string_view message) {
  ojson j;
  j["schema_version"] = kSchemaVersion;
  j["error"] = {{"code", code}, {"message", message}};
  return dump(j);
}

CommandResult run_command(Command command, const ExperimentConfig& config,
                          const CommandOptions& options) {
  try {
    switch (command) {
      case Command::kSimulate:
        return simulate(config, options);
      case Command::kVerify:
        return verify(config);
      case Command::kBounds:
        return bounds(config);
      case Command::kConverge:
        return converge(config);
      case Command::kFormula:
        return formula(config);
    }
  } catch (const Error& e) {
    return {kExitError, error_object(error_code_name(e.code()), e.what()),
            std::nullopt};
  }
  return {kExitUsage, error_object("usage_error", "unknown command"),
          std::nullopt};
}

}  // namespace tandem::cli

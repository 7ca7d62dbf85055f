#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "tandem_cli/commands.hpp"

namespace {

using namespace tandem;
using namespace tandem::cli;

std::string read_all(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot read config '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_all(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot write '" + path + "'");
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Tandem queue cycle-time toolkit: exact departure recursions, "
      "Monte Carlo estimates, closed-form cycle times and finite-n bounds."};

  std::string command;
  std::string config_path;
  std::string out_path;
  std::string trace_path;
  std::string format;
  bool timing = false;
  Overrides overrides;
  std::size_t n = 0, replications = 0;
  std::uint64_t seed = 0;
  std::vector<std::size_t> grid;

  app.add_option("command", command, "simulate | verify | bounds | converge | formula")
      ->required()
      ->check(CLI::IsMember({"simulate", "verify", "bounds", "converge", "formula"}));
  app.add_option("--config", config_path, "JSON experiment config ('-' for stdin)")
      ->required();
  auto* n_opt = app.add_option("--n", n, "customers per trajectory (verify: horizon)");
  auto* rep_opt = app.add_option("--replications", replications, "independent replications");
  auto* seed_opt = app.add_option("--seed", seed, "master seed");
  auto* grid_opt = app.add_option("--grid", grid, "customer counts, e.g. 100,1000")
                       ->delimiter(',');
  auto* fmt_opt = app.add_option("--format", format, "json | csv")
                      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", out_path, "write the primary output here instead of stdout");
  app.add_option("--trace", trace_path, "simulate: write the (n, gamma_hat) trace CSV here");
  app.add_flag("--timing", timing, "add a wall-clock 'timing' field to JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cout << error_object("usage_error", e.what());
    return kExitUsage;
  }

  const Command cmd = *command_from_name(command);
  auto emit = [&](const std::string& text) {
    if (out_path.empty()) {
      std::cout << text;
    } else {
      write_all(out_path, text);
    }
  };

  ExperimentConfig config;
  try {
    config = parse_config(read_all(config_path));
    if (*n_opt && cmd == Command::kVerify) {
      config.verify_n = n;
    } else if (*n_opt) {
      overrides.n = n;
    }
    if (*rep_opt) overrides.replications = replications;
    if (*seed_opt) overrides.seed = seed;
    if (*grid_opt) overrides.grid = grid;
    if (*fmt_opt) {
      overrides.format = format == "csv" ? OutputFormat::kCsv : OutputFormat::kJson;
    }
    apply_overrides(config, overrides);
  } catch (const Error& e) {
    std::cout << error_object(error_code_name(e.code()), e.what());
    return kExitUsage;
  }

  try {
    const auto start = std::chrono::steady_clock::now();
    CommandOptions options;
    options.want_trace = !trace_path.empty() && cmd == Command::kSimulate;
    CommandResult result = run_command(cmd, config, options);
    if (timing && config.format == OutputFormat::kJson) {
      auto j = nlohmann::ordered_json::parse(result.output);
      const std::chrono::duration<double> wall =
          std::chrono::steady_clock::now() - start;
      j["timing"] = {{"wall_seconds", wall.count()}};
      result.output = j.dump(2) + "\n";
    }
    emit(result.output);
    if (result.trace_csv) write_all(trace_path, *result.trace_csv);
    return result.exit_code;
  } catch (const Error& e) {
    std::cout << error_object(error_code_name(e.code()), e.what());
    return kExitError;
  }
}

#include "tandem_cli/config.hpp"

#include <algorithm>

namespace tandem::cli {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw ConfigError(ErrorCode::kConfig, path + ": " + message);
}

void reject_unknown(const json& object, const std::string& path,
                    std::initializer_list<std::string_view> allowed) {
  for (const auto& [key, value] : object.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      fail(path.empty() ? key : path + "." + key, "unknown key");
    }
  }
}

std::uint64_t as_unsigned(const json& v, const std::string& path) {
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  if (v.is_number_integer() && v.get<std::int64_t>() >= 0) {
    return static_cast<std::uint64_t>(v.get<std::int64_t>());
  }
  fail(path, "expected a nonnegative integer");
}

double as_real(const json& v, const std::string& path) {
  if (!v.is_number()) fail(path, "expected a number");
  return v.get<double>();
}

std::string as_string(const json& v, const std::string& path) {
  if (!v.is_string()) fail(path, "expected a string");
  return v.get<std::string>();
}

double param(const json& params, const std::string& path, const char* name) {
  if (!params.contains(name)) fail(path, std::string("missing '") + name + "'");
  return as_real(params.at(name), path + "." + name);
}

DistributionSpec parse_station(const json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object {family, params}");
  reject_unknown(j, path, {"family", "params"});
  if (!j.contains("family")) fail(path, "missing 'family'");
  const std::string name = as_string(j.at("family"), path + ".family");
  const auto family = family_from_name(name);
  if (!family) {
    fail(path + ".family",
         "unknown family '" + name +
             "' (expected deterministic, exponential, uniform, gamma, "
             "bernoulli-scaled)");
  }
  const std::string ppath = path + ".params";
  if (!j.contains("params") || !j.at("params").is_object()) {
    fail(ppath, "expected an object");
  }
  const json& p = j.at("params");
  try {
    switch (*family) {
      case Family::kDeterministic:
        reject_unknown(p, ppath, {"value"});
        return DistributionSpec::deterministic(param(p, ppath, "value"));
      case Family::kExponential:
        reject_unknown(p, ppath, {"rate", "mean"});
        if (p.contains("rate") == p.contains("mean")) {
          fail(ppath, "exponential takes exactly one of 'rate' or 'mean'");
        }
        if (p.contains("mean")) {
          const double mean = param(p, ppath, "mean");
          if (!(mean > 0.0)) {
            throw ParameterError("exponential: mean must be positive");
          }
          return DistributionSpec::exponential(1.0 / mean);
        }
        return DistributionSpec::exponential(param(p, ppath, "rate"));
      case Family::kUniform:
        reject_unknown(p, ppath, {"low", "high"});
        return DistributionSpec::uniform(param(p, ppath, "low"),
                                         param(p, ppath, "high"));
      case Family::kGamma:
        reject_unknown(p, ppath, {"shape", "scale"});
        return DistributionSpec::gamma(param(p, ppath, "shape"),
                                       param(p, ppath, "scale"));
      case Family::kBernoulliScaled:
        reject_unknown(p, ppath, {"p", "scale"});
        return DistributionSpec::bernoulli_scaled(param(p, ppath, "p"),
                                                  param(p, ppath, "scale"));
    }
  } catch (const ParameterError& e) {
    throw ConfigError(ErrorCode::kParameter, ppath + ": " + e.what());
  }
  fail(path, "unreachable");
}

std::vector<std::size_t> parse_grid(const json& v, const std::string& path) {
  if (!v.is_array()) fail(path, "expected an array of customer counts");
  std::vector<std::size_t> grid;
  for (std::size_t i = 0; i < v.size(); ++i) {
    grid.push_back(as_unsigned(v[i], path + "[" + std::to_string(i) + "]"));
  }
  return grid;
}

std::pair<std::size_t, std::size_t> line_and_column(std::string_view text,
                                                    std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

}  // namespace

std::string_view format_name(OutputFormat format) noexcept {
  return format == OutputFormat::kJson ? "json" : "csv";
}

void validate(const ExperimentConfig& c) {
  if (c.n < 1) fail("n", "must be >= 1");
  if (c.replications < 2) fail("replications", "must be >= 2");
  if (c.grid.empty()) fail("grid", "must not be empty");
  if (c.grid.front() < 1) fail("grid", "points must be >= 1");
  for (std::size_t i = 1; i < c.grid.size(); ++i) {
    if (c.grid[i] <= c.grid[i - 1]) fail("grid", "must be strictly increasing");
  }
  if (c.verify_n < 1) fail("verify_n", "must be >= 1");
  if (c.realizations < 1) fail("realizations", "must be >= 1");
  try {
    c.system.validate();
  } catch (const Error& e) {
    throw ConfigError(e.code(), std::string("stations: ") + e.what());
  }
}

ExperimentConfig parse_config(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, column] = line_and_column(text, e.byte);
    throw ConfigError(ErrorCode::kConfigParse,
                      "line " + std::to_string(line) + ", column " +
                          std::to_string(column) + ": " + e.what());
  }
  if (!doc.is_object()) fail("<root>", "expected a JSON object");
  reject_unknown(doc, "",
                 {"schema_version", "stations", "discipline", "mode", "seed",
                  "n", "replications", "grid", "verify_n", "realizations",
                  "format"});

  ExperimentConfig c;
  if (doc.contains("schema_version") &&
      as_unsigned(doc["schema_version"], "schema_version") !=
          static_cast<std::uint64_t>(kSchemaVersion)) {
    fail("schema_version", "unsupported (expected 1)");
  }
  if (!doc.contains("stations") || !doc["stations"].is_array()) {
    fail("stations", "expected an array: arrivals first, then each server");
  }
  const json& stations = doc["stations"];
  for (std::size_t i = 0; i < stations.size(); ++i) {
    c.system.stations.push_back(
        parse_station(stations[i], "stations[" + std::to_string(i) + "]"));
  }
  if (doc.contains("discipline")) {
    const auto name = as_string(doc["discipline"], "discipline");
    const auto d = discipline_from_name(name);
    if (!d) {
      fail("discipline", "unknown '" + name +
                             "' (expected infinite, manufacturing, "
                             "communication)");
    }
    c.system.discipline = *d;
  }
  if (doc.contains("mode")) {
    const auto name = as_string(doc["mode"], "mode");
    const auto m = dependence_mode_from_name(name);
    if (!m) {
      fail("mode", "unknown '" + name +
                       "' (expected independent, shared-draw, "
                       "identical-service)");
    }
    c.system.mode = *m;
  }
  if (doc.contains("seed")) c.seed = as_unsigned(doc["seed"], "seed");
  if (doc.contains("n")) c.n = as_unsigned(doc["n"], "n");
  if (doc.contains("replications")) {
    c.replications = as_unsigned(doc["replications"], "replications");
  }
  if (doc.contains("grid")) c.grid = parse_grid(doc["grid"], "grid");
  if (doc.contains("verify_n")) {
    c.verify_n = as_unsigned(doc["verify_n"], "verify_n");
  }
  if (doc.contains("realizations")) {
    c.realizations = as_unsigned(doc["realizations"], "realizations");
  }
  if (doc.contains("format")) {
    const auto f = as_string(doc["format"], "format");
    if (f == "json") {
      c.format = OutputFormat::kJson;
    } else if (f == "csv") {
      c.format = OutputFormat::kCsv;
    } else {
      fail("format", "expected 'json' or 'csv'");
    }
  }
  validate(c);
  return c;
}

void apply_overrides(ExperimentConfig& c, const Overrides& o) {
  if (o.n) c.n = *o.n;
  if (o.replications) c.replications = *o.replications;
  if (o.seed) c.seed = *o.seed;
  if (o.grid) c.grid = *o.grid;
  if (o.format) c.format = *o.format;
  validate(c);
}

nlohmann::ordered_json to_json(const DistributionSpec& spec) {
  nlohmann::ordered_json params;
  const auto p = spec.params();
  switch (spec.family()) {
    case Family::kDeterministic:
      params["value"] = p[0];
      break;
    case Family::kExponential:
      params["rate"] = p[0];
      break;
    case Family::kUniform:
      params["low"] = p[0];
      params["high"] = p[1];
      break;
    case Family::kGamma:
      params["shape"] = p[0];
      params["scale"] = p[1];
      break;
    case Family::kBernoulliScaled:
      params["p"] = p[0];
      params["scale"] = p[1];
      break;
  }
  nlohmann::ordered_json j;
  j["family"] = family_name(spec.family());
  j["params"] = params;
  return j;
}

nlohmann::ordered_json to_json(const ExperimentConfig& c) {
  nlohmann::ordered_json j;
  j["schema_version"] = kSchemaVersion;
  auto stations = nlohmann::ordered_json::array();
  for (const auto& s : c.system.stations) stations.push_back(to_json(s));
  j["stations"] = stations;
  j["discipline"] = discipline_name(c.system.discipline);
  j["mode"] = dependence_mode_name(c.system.mode);
  j["seed"] = c.seed;
  j["n"] = c.n;
  j["replications"] = c.replications;
  j["grid"] = c.grid;
  j["verify_n"] = c.verify_n;
  j["realizations"] = c.realizations;
  j["format"] = format_name(c.format);
  return j;
}

}  // namespace tandem::cli

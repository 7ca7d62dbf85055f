#include "tandem/realization.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tandem/error.hpp"
#include "tandem/random.hpp"

namespace tandem {

std::string_view discipline_name(Discipline discipline) noexcept {
  switch (discipline) {
    case Discipline::kInfinite:
      return "infinite";
    case Discipline::kManufacturing:
      return "manufacturing";
    case Discipline::kCommunication:
      return "communication";
  }
  return "unknown";
}

std::optional<Discipline> discipline_from_name(std::string_view name) noexcept {
  for (Discipline d : {Discipline::kInfinite, Discipline::kManufacturing,
                       Discipline::kCommunication}) {
    if (discipline_name(d) == name) return d;
  }
  return std::nullopt;
}

void SystemSpec::validate() const {
  if (stations.size() < 2) {
    throw ParameterError(
        "system needs an arrival stream and at least one service station");
  }
  if (discipline != Discipline::kInfinite && service_stations() != 2) {
    throw OutOfScopeError(
        "blocking disciplines are defined only for two service stations with "
        "a zero-capacity second buffer; got " +
        std::to_string(service_stations()) + " service stations");
  }
  if (mode == DependenceMode::kIdenticalService) {
    for (std::size_t i = 2; i < stations.size(); ++i) {
      if (!(stations[i] == stations[1])) {
        throw ParameterError(
            "identical-service mode requires every service station to use "
            "the same distribution");
      }
    }
  }
}

Realization::Realization(std::size_t service_stations, std::size_t customers)
    : stations_(service_stations + 1),
      customers_(customers),
      data_(stations_ * customers, 0.0) {}

Realization Realization::from_rows(
    const std::vector<std::vector<double>>& rows) {
  if (rows.size() < 2) {
    throw ParameterError("realization needs at least two rows");
  }
  Realization r(rows.size() - 1, rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != r.customers_) {
      throw ParameterError("realization rows must have equal length");
    }
    for (std::size_t n = 0; n < r.customers_; ++n) {
      r.set_tau(i, n + 1, rows[i][n]);
    }
  }
  return r;
}

double Realization::tau(std::size_t station, std::size_t customer) const {
  if (station >= stations_ || customer == 0 || customer > customers_) {
    throw IndexError("tau(" + std::to_string(station) + ", " +
                     std::to_string(customer) + ") out of range");
  }
  return data_[station * customers_ + customer - 1];
}

void Realization::set_tau(std::size_t station, std::size_t customer,
                          double value) {
  if (station >= stations_ || customer == 0 || customer > customers_) {
    throw IndexError("tau(" + std::to_string(station) + ", " +
                     std::to_string(customer) + ") out of range");
  }
  if (!std::isfinite(value) || value < 0.0) {
    throw ParameterError("times must be finite and nonnegative");
  }
  data_[station * customers_ + customer - 1] = value;
}

std::span<const double> Realization::row(std::size_t station) const {
  if (station >= stations_) throw IndexError("row out of range");
  return {data_.data() + station * customers_, customers_};
}

Realization Realization::slice(std::size_t first, std::size_t last) const {
  if (first > last || last > customers_) {
    throw IndexError("slice(" + std::to_string(first) + ", " +
                     std::to_string(last) + ") out of range");
  }
  Realization out(stations_ - 1, last - first);
  for (std::size_t i = 0; i < stations_; ++i) {
    const auto src = row(i).subspan(first, last - first);
    std::copy(src.begin(), src.end(),
              out.data_.begin() + static_cast<std::ptrdiff_t>(i * out.customers_));
  }
  return out;
}

void Realization::column(std::size_t customer, std::span<double> out) const {
  if (out.size() != stations_) throw IndexError("column buffer size mismatch");
  for (std::size_t i = 0; i < stations_; ++i) out[i] = tau(i, customer);
}

void sample_customer(const SystemSpec& spec, std::uint64_t seed,
                     std::uint64_t customer, std::span<double> out) {
  const auto& st = spec.stations;
  switch (spec.mode) {
    case DependenceMode::kIndependent:
      for (std::size_t i = 0; i < st.size(); ++i) {
        out[i] = st[i].quantile(
            uniform_at(seed, static_cast<std::uint32_t>(i), customer));
      }
      break;
    case DependenceMode::kSharedDraw: {
      const double u = uniform_at(seed, kSharedStream, customer);
      for (std::size_t i = 0; i < st.size(); ++i) out[i] = st[i].quantile(u);
      break;
    }
    case DependenceMode::kIdenticalService: {
      out[0] = st[0].quantile(uniform_at(seed, 0, customer));
      const double service = st[1].quantile(uniform_at(seed, 1, customer));
      for (std::size_t i = 1; i < st.size(); ++i) out[i] = service;
      break;
    }
  }
}

Realization sample_realization(const SystemSpec& spec, std::size_t customers,
                               std::uint64_t seed) {
  spec.validate();
  if (customers < 1) throw ParameterError("need at least one customer");
  Realization r(spec.service_stations(), customers);
  std::vector<double> col(spec.stations.size());
  for (std::size_t n = 1; n <= customers; ++n) {
    sample_customer(spec, seed, n, col);
    for (std::size_t i = 0; i < col.size(); ++i) r.set_tau(i, n, col[i]);
  }
  return r;
}

}  // namespace tandem

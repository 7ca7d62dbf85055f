#pragma once

#include <array>
#include <cstdint>

namespace tandem {

using PhiloxCounter = std::array<std::uint32_t, 4>;
using PhiloxKey = std::array<std::uint32_t, 2>;

/// Philox4x32 with 10 rounds (Salmon et al., SC'11). Stateless: the output
/// is a pure function of (counter, key).
PhiloxCounter philox4x32_10(PhiloxCounter counter, PhiloxKey key) noexcept;

/// Stream id reserved for the per-customer shared uniform.
inline constexpr std::uint32_t kSharedStream = 0xFFFFFFFEu;

/// 64 random bits addressed by (seed, stream, index).
std::uint64_t random_bits(std::uint64_t seed, std::uint32_t stream,
                          std::uint64_t index) noexcept;

/// Uniform on [0, 1) with 53 bits of resolution.
double uniform_at(std::uint64_t seed, std::uint32_t stream,
                  std::uint64_t index) noexcept;

/// Seed for replication `replication` of an experiment seeded with `seed`.
std::uint64_t derive_seed(std::uint64_t seed,
                          std::uint64_t replication) noexcept;

/// Cursor over one counter-addressed stream. Copying a StreamState forks the
/// cursor; nothing is shared between copies.
struct StreamState {
  std::uint64_t seed = 0;
  std::uint32_t station = 0;
  std::uint64_t counter = 0;

  double next_uniform() noexcept {
    return uniform_at(seed, station, counter++);
  }
};

}  // namespace tandem

#include "tandem/random.hpp"

namespace tandem {
namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi,
                    std::uint32_t& lo) noexcept {
  const std::uint64_t product = static_cast<std::uint64_t>(a) * b;
  hi = static_cast<std::uint32_t>(product >> 32);
  lo = static_cast<std::uint32_t>(product);
}

inline PhiloxCounter round(PhiloxCounter c, PhiloxKey k) noexcept {
  std::uint32_t hi0, lo0, hi1, lo1;
  mulhilo(kMul0, c[0], hi0, lo0);
  mulhilo(kMul1, c[2], hi1, lo1);
  return {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
}

inline PhiloxKey split(std::uint64_t seed) noexcept {
  return {static_cast<std::uint32_t>(seed),
          static_cast<std::uint32_t>(seed >> 32)};
}

}  // namespace

PhiloxCounter philox4x32_10(PhiloxCounter counter, PhiloxKey key) noexcept {
  for (int r = 0; r < 10; ++r) {
    if (r > 0) {
      key[0] += kWeyl0;
      key[1] += kWeyl1;
    }
    counter = round(counter, key);
  }
  return counter;
}

std::uint64_t random_bits(std::uint64_t seed, std::uint32_t stream,
                          std::uint64_t index) noexcept {
  const PhiloxCounter out = philox4x32_10(
      {static_cast<std::uint32_t>(index),
       static_cast<std::uint32_t>(index >> 32), stream, 0u},
      split(seed));
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

double uniform_at(std::uint64_t seed, std::uint32_t stream,
                  std::uint64_t index) noexcept {
  return static_cast<double>(random_bits(seed, stream, index) >> 11) *
         0x1.0p-53;
}

std::uint64_t derive_seed(std::uint64_t seed,
                          std::uint64_t replication) noexcept {
  // Domain-separated from variate streams by the fourth counter word.
  const PhiloxCounter out = philox4x32_10(
      {static_cast<std::uint32_t>(replication),
       static_cast<std::uint32_t>(replication >> 32), 0xFFFFFFFFu, 1u},
      split(seed));
  return (static_cast<std::uint64_t>(out[2]) << 32) | out[3];
}

}  // namespace tandem

#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace heatcast {

// All randomness in the pipeline flows from one master seed through named
// substreams, so independent stages (tuning, sampling, injection, runs) stay
// reproducible no matter how work is scheduled across threads.

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace detail

/// Deterministic RNG stream. Draw helpers avoid std distributions so the
/// produced values are bit-identical across standard libraries.
class RngStream {
public:
  explicit RngStream(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform double in (0, 1); never returns an exact endpoint.
  double uniform_open() {
    double u;
    do {
      u = uniform01();
    } while (u <= 0.0);
    return u;
  }

  /// Unbiased uniform integer in [0, n).
  std::uint64_t uniform_below(std::uint64_t n) {
    if (n == 0) return 0;
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % n;
  }

  bool coin() { return (engine_() & 1ULL) != 0; }

private:
  std::mt19937_64 engine_;
};

/// Derive the seed of a named substream from the master seed.
inline std::uint64_t derive_seed(std::uint64_t master, std::string_view stream) {
  return detail::splitmix64(master ^ detail::fnv1a64(stream));
}

/// Derive an indexed substream seed (per run, per hour, per day, ...).
inline std::uint64_t derive_seed(std::uint64_t master, std::string_view stream,
                                 std::uint64_t index) {
  return detail::splitmix64(derive_seed(master, stream) ^
                            detail::splitmix64(index + 0x51ed270b76f0fe65ULL));
}

inline RngStream substream(std::uint64_t master, std::string_view stream) {
  return RngStream(derive_seed(master, stream));
}

inline RngStream substream(std::uint64_t master, std::string_view stream,
                           std::uint64_t index) {
  return RngStream(derive_seed(master, stream, index));
}

}  // namespace heatcast

#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>

#include "d2d/numeric.hpp"

namespace d2d {

/// SplitMix64 finalizer: one mixing step of the well-known public-domain
/// generator. Used both as the stream generator and to derive substreams.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Deterministic counter-based generator. Cheap to construct, so every
/// (seed, purpose, index) tuple gets its own engine and results do not depend
/// on iteration order.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }
  result_type operator()() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

/// Stream purposes used by the simulator.
namespace stream {
inline constexpr std::uint64_t arrival = 0xA1;
inline constexpr std::uint64_t bin_choice = 0xB2;
inline constexpr std::uint64_t backoff = 0xC3;
}  // namespace stream

/// Derives an independent substream state from (seed, purpose, a, b).
inline std::uint64_t substream(std::uint64_t seed, std::uint64_t purpose,
                               std::uint64_t a = 0, std::uint64_t b = 0) {
  std::uint64_t s = mix64(seed);
  s = mix64(s ^ purpose);
  s = mix64(s ^ a);
  s = mix64(s ^ b);
  return s;
}

/// Uniform double in [0, 1) with 53-bit resolution.
inline double uniform01(SplitMix64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform integer in [1, n] (multiply-shift bounding; bias is O(n / 2^64)).
inline std::int64_t uniform_1_to_n(SplitMix64& rng, std::int64_t n) {
  if (n < 1) throw std::domain_error("uniform_1_to_n: n must be >= 1");
  const auto wide = static_cast<unsigned __int128>(rng()) *
                    static_cast<unsigned __int128>(n);
  return static_cast<std::int64_t>(wide >> 64) + 1;
}

/// Beta(alpha, beta) quantile on [0, 1] by bisection on the regularized
/// incomplete beta. 64 halvings reach the resolution of double.
inline double beta_quantile(double u, double alpha, double beta) {
  if (u <= 0.0) return 0.0;
  if (u >= 1.0) return 1.0;
  double lo = 0.0, hi = 1.0;
  for (int iter = 0; iter < 64; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (regularized_incomplete_beta(alpha, beta, mid) < u)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace d2d

#pragma once

#include <cstdint>

// Counter-based random streams: every variate is a pure function of
// (seed, draw, cell), so Monte Carlo runs are reproducible regardless of
// how draws are scheduled across threads.

namespace radcomplex::rng {

inline constexpr std::uint64_t kDefaultSeed = 0x5EED;

// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z;
}

constexpr std::uint64_t cell_bits(std::uint64_t seed, std::uint64_t draw,
                                  std::uint64_t cell) noexcept {
  constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = mix64(seed + kGamma * (draw + 1));
  z = mix64(z + kGamma * (cell + 1));
  return z;
}

// Uniform on [0, 1), 53-bit resolution.
constexpr double uniform01(std::uint64_t seed, std::uint64_t draw,
                           std::uint64_t cell) noexcept {
  return static_cast<double>(cell_bits(seed, draw, cell) >> 11) * 0x1.0p-53;
}

// Uniform on (0, 1), never returns an endpoint.
constexpr double uniform01_open(std::uint64_t seed, std::uint64_t draw,
                                std::uint64_t cell) noexcept {
  return (static_cast<double>(cell_bits(seed, draw, cell) >> 11) + 0.5) *
         0x1.0p-53;
}

constexpr double rademacher_sign(std::uint64_t seed, std::uint64_t draw,
                                 std::uint64_t cell) noexcept {
  return (cell_bits(seed, draw, cell) >> 63) ? 1.0 : -1.0;
}

// Inverse standard normal CDF (Acklam's rational approximation,
// relative error below 1.2e-9 across the open unit interval).
double inverse_normal_cdf(double p) noexcept;

inline double standard_normal(std::uint64_t seed, std::uint64_t draw,
                              std::uint64_t cell) noexcept {
  return inverse_normal_cdf(uniform01_open(seed, draw, cell));
}

}  // namespace radcomplex::rng

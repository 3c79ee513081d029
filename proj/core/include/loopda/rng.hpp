/*
 * (C) Copyright 2026 loopda developers.
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace loopda {

// Counter-based generator: every draw is a pure function of
// (seed, stream, index), so parallel and serial runs agree bitwise.

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t mix3(std::uint64_t seed, std::uint64_t stream,
                          std::uint64_t index) {
  std::uint64_t h = splitmix64(seed);
  h = splitmix64(h ^ splitmix64(stream + 0x632be59bd9b4e019ULL));
  h = splitmix64(h ^ splitmix64(index + 0x2545f4914f6cdd1dULL));
  return h;
}

}  // namespace detail

/// Uniform draw in (0, 1).
inline double rng_uniform(std::uint64_t seed, std::uint64_t stream,
                          std::uint64_t index) {
  const std::uint64_t bits = detail::mix3(seed, stream, index);
  return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
}

/// Standard normal draw via Box-Muller on two derived uniforms.
inline double rng_normal(std::uint64_t seed, std::uint64_t stream,
                         std::uint64_t index) {
  const double u1 = rng_uniform(seed, stream, 2 * index);
  const double u2 = rng_uniform(seed, stream, 2 * index + 1);
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

/// Convenience cursor over one (seed, stream) pair.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream)
      : seed_(seed), stream_(stream) {}

  double normal() { return rng_normal(seed_, stream_, index_++); }
  double uniform() { return rng_uniform(seed_, stream_, index_++); }

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t index_ = 0;
};

}  // namespace loopda

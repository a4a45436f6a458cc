// SPDX-License-Identifier: Apache-2.0
// Small seeded generators for property tests.
#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "mtf/media.hpp"

namespace mtf::testing {

inline constexpr int kPropertyCases = 60;

class Gen
{
public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  double log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }
  bool coin() { return integer(0, 1) == 1; }

  /// Vacuum outside, a random dielectric/magnetic body inside, physically consistent wavenumbers.
  MediaPair media(double omega_lo = 0.5, double omega_hi = 20.0)
  {
    const double omega = log_uniform(omega_lo, omega_hi);
    const Medium outer = Medium::from_physical(1.0, 1.0, omega);
    const Medium inner = Medium::from_physical(uniform(1.0, 6.0), uniform(1.0, 4.0), omega);
    return {outer, inner};
  }

  std::uint64_t seed() { return rng_(); }

private:
  std::mt19937_64 rng_;
};

}  // namespace mtf::testing

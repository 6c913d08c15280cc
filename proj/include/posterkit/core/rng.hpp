// Copyright (c) 2026 the posterkit authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>

#include "posterkit/core/errors.hpp"

namespace posterkit {

// Output mixing function of the splitmix64 generator.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Deterministic RNG used everywhere in the toolkit. Engine and distributions
// are fixed here rather than taken from <random> so that identical seeds give
// identical draws on every platform and standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() noexcept {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix64(state_);
  }

  // Uniform double in [0, 1).
  double uniform() noexcept {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) noexcept {
    return lo + (hi - lo) * uniform();
  }

  // Uniform integer in [0, bound). Multiply-high mapping; bias is O(bound/2^64).
  std::uint64_t uniform_int(std::uint64_t bound) noexcept {
    const auto wide =
        static_cast<unsigned __int128>(next_u64()) * static_cast<unsigned __int128>(bound);
    return static_cast<std::uint64_t>(wide >> 64);
  }

  // Uniform integer in the closed range [lo, hi].
  std::int64_t range_int(std::int64_t lo, std::int64_t hi) noexcept {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1u;
    return lo + static_cast<std::int64_t>(uniform_int(span));
  }

  bool bernoulli(double p) noexcept { return uniform() < p; }

  // Index drawn proportionally to non-negative weights.
  std::size_t pick_weighted(std::span<const double> weights) {
    double total = 0.0;
    for (double w : weights) {
      if (w < 0.0) throw ConfigError("pick_weighted: negative weight");
      total += w;
    }
    if (!(total > 0.0)) throw ConfigError("pick_weighted: weights sum to zero");
    double r = uniform() * total;
    for (std::size_t i = 0; i + 1 < weights.size(); ++i) {
      r -= weights[i];
      if (r < 0.0) return i;
    }
    return weights.size() - 1;
  }

 private:
  std::uint64_t state_;
};

// Per-record seed derivation: a pure function of (master seed, record index),
// so any worker can generate any record and results never depend on scheduling.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) noexcept {
  return mix64(mix64(master + 0x9E3779B97F4A7C15ULL) ^
               mix64(index + 0x2545F4914F6CDD1DULL));
}

}  // namespace posterkit

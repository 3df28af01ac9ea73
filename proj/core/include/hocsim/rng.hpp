// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 hocsim contributors

#pragma once

#include <cstdint>
#include <random>

namespace hocsim {

/// Finalizer of splitmix64; bijective on 64-bit integers.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Derive a stream seed from a master seed and an arbitrary tuple of integer
/// tags (trial index, sub-stream id, site id, ...). Counter-based so that
/// every consumer gets an independent stream regardless of scheduling; the
/// result is a pure function of its arguments.
template <typename... Parts>
constexpr std::uint64_t derive_seed(std::uint64_t master, Parts... parts) {
  std::uint64_t s = mix64(master);
  ((s = mix64(s ^ static_cast<std::uint64_t>(parts))), ...);
  return s;
}

/// Sub-stream tags used by the campaign layer.
enum class Stream : std::uint64_t {
  trial = 0x747269616cULL,      // per-trial identity recorded in datasets
  ppp = 0x707070ULL,            // site count, positions, sector rotations
  shadowing = 0x73686164ULL,    // per-cell shadow fading
};

inline std::mt19937_64 make_engine(std::uint64_t seed) {
  return std::mt19937_64{seed};
}

}  // namespace hocsim

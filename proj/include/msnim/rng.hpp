// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Random sources used across the library.
//
// Two flavours: `Rng` is a sequential stream (mt19937_64) for generators, and
// `coin()` is a stateless counter-based draw keyed by (seed, trial, u, v) for
// Monte Carlo trials. Bounded and real-valued draws are done here rather than
// through <random> distributions, whose outputs differ between standard
// libraries, so that generated files are identical on every platform.

#ifndef MSNIM_RNG_HPP_
#define MSNIM_RNG_HPP_

#include <cstdint>
#include <random>
#include <vector>

namespace msnim {

// splitmix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t hash_combine(std::uint64_t a, std::uint64_t b) noexcept {
  return mix64(a ^ mix64(b));
}

// Maps the top 53 bits of `bits` to [0, 1).
constexpr double to_unit(std::uint64_t bits) noexcept {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

// Uniform [0,1) draw for edge (u,v) in trial t of a pool seeded with `seed`.
constexpr double coin(std::uint64_t seed, std::uint64_t trial, std::uint32_t u,
                      std::uint32_t v) noexcept {
  const std::uint64_t edge = (static_cast<std::uint64_t>(u) << 32) | v;
  return to_unit(hash_combine(hash_combine(seed, trial), edge));
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  double uniform01() { return to_unit(engine_()); }

  // Unbiased draw in [0, bound) by rejection; bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  template <class T>
  void shuffle(std::vector<T>& values) {
    for (std::size_t i = values.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(values[i - 1], values[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace msnim

#endif  // MSNIM_RNG_HPP_

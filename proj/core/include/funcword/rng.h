// Copyright 2026 The funcword Authors.
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

#ifndef FUNCWORD_RNG_H_
#define FUNCWORD_RNG_H_

#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>
#include <string_view>
#include <utility>

namespace funcword {

// Seeded randomness whose output is identical across standard libraries:
// the engine is std::mt19937_64 (fully specified), and bounded draws and
// shuffles are done here instead of through std::uniform_int_distribution /
// std::shuffle, whose algorithms are implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t Next() { return engine_(); }

  // Uniform in [0, bound). bound must be > 0.
  std::uint64_t Below(std::uint64_t bound);

  // Uniform in [0, 1).
  double Uniform();

  template <typename T>
  void Shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(Below(i));
      using std::swap;
      swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

// Combines a seed with stream keys into an independent 64-bit value
// (SplitMix64 finalizer chained over the keys).
std::uint64_t MixSeed(std::uint64_t seed, std::initializer_list<std::uint64_t> keys);

// Uniform draw in [0, bound) that depends only on the seed and keys.
std::uint64_t KeyedBelow(std::uint64_t seed,
                         std::initializer_list<std::uint64_t> keys,
                         std::uint64_t bound);

// 64-bit FNV-1a; used to turn string identifiers into stream keys.
std::uint64_t HashString(std::string_view text);

}  // namespace funcword

#endif  // FUNCWORD_RNG_H_

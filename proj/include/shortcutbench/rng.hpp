/*
 * Copyright 2026 The shortcutbench Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>

namespace scb {

// Seeded generator with a platform-stable output sequence. The engine is
// std::mt19937_64, whose output is fixed by the standard; the conversions
// below are written out by hand because std distributions are not.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform in [0, n). n == 1 consumes nothing. Rejection sampling, no modulo bias.
  std::size_t index(std::size_t n);

  // Fisher-Yates over [first, last).
  template <typename It>
  void shuffle(It first, It last) {
    const auto n = static_cast<std::size_t>(last - first);
    for (std::size_t i = n; i > 1; --i) {
      const std::size_t j = index(i);
      std::iter_swap(first + static_cast<std::ptrdiff_t>(i - 1), first + static_cast<std::ptrdiff_t>(j));
    }
  }

 private:
  std::mt19937_64 engine_;
};

// Seed for the substream owned by (master seed, sample id, stage). Injection
// draws per sample from its own substream, so results do not depend on
// iteration order or worker count.
std::uint64_t derive_seed(std::uint64_t master, std::string_view key, std::string_view stage);

inline Rng substream(std::uint64_t master, std::string_view key, std::string_view stage) {
  return Rng(derive_seed(master, key, stage));
}

}  // namespace scb

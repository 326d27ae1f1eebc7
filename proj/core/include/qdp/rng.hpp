// Copyright 2026 The qdp developers
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

#ifndef QDP_RNG_HPP_
#define QDP_RNG_HPP_

#include <cstdint>
#include <random>
#include <string_view>

namespace qdp {

// All randomness in the library flows from one root seed through labeled
// substreams so that every experiment cell owns an independent, reproducible
// generator regardless of evaluation order.

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Derives a child seed from (root, label, index). Labels separate logical
// streams ("mechanism", "noise", ...); the index separates cells of a sweep.
inline std::uint64_t derive_seed(std::uint64_t root, std::string_view label,
                                 std::uint64_t index = 0) {
  std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a over the label bytes.
  for (char c : label) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  std::uint64_t s = splitmix64(root ^ h);
  return splitmix64(s ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
}

inline std::mt19937_64 substream(std::uint64_t root, std::string_view label,
                                 std::uint64_t index = 0) {
  return std::mt19937_64(derive_seed(root, label, index));
}

// Uniform double in [0, 1) with 53 random bits. Implemented directly instead
// of via std::uniform_real_distribution so that streams are identical across
// standard library implementations.
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, n) by rejection, unbiased for any n >= 1.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
  for (;;) {
    std::uint64_t x = rng();
    if (x < limit) return x % n;
  }
}

}  // namespace qdp

#endif  // QDP_RNG_HPP_

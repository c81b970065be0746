// Copyright 2026 The propaudit Authors
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

#ifndef PROPAUDIT_RNG_H_
#define PROPAUDIT_RNG_H_

#include <cstdint>

namespace propaudit {

// SplitMix64 finalizer.
constexpr std::uint64_t Mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Child seed for substream `tag` of `parent`.
constexpr std::uint64_t DeriveSeed(std::uint64_t parent, std::uint64_t tag) {
  return Mix64(Mix64(parent) ^ Mix64(tag ^ 0x5851f42d4c957f2dULL));
}

// Counter-based generator: draw i of a stream is Mix64(key ^ Mix64(i)), so a
// stream is fully described by (key, counter) and substreams come from
// DeriveSeed. Not cryptographic.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : key_(Mix64(seed)) {}

  std::uint64_t NextU64() { return Mix64(key_ ^ Mix64(counter_++)); }

  // Uniform in [0, 1) with 53 random bits.
  double NextUniform() {
    return static_cast<double>(NextU64() >> 11) * 0x1.0p-53;
  }

  // Uniform in [0, bound), unbiased (Lemire's multiply-and-reject).
  std::uint64_t NextBelow(std::uint64_t bound);

  // Standard normal via Box-Muller; the second variate is cached.
  double NextGaussian();

  std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace propaudit

#endif  // PROPAUDIT_RNG_H_

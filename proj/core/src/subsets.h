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

#ifndef PROPAUDIT_SRC_SUBSETS_H_
#define PROPAUDIT_SRC_SUBSETS_H_

#include <bit>
#include <cstdint>
#include <vector>

namespace propaudit::internal {

// Next mask with the same popcount (Gosper's hack).
inline std::uint64_t NextSamePopcount(std::uint64_t x) {
  const std::uint64_t c = x & (~x + 1);
  const std::uint64_t r = x + c;
  return (((r ^ x) >> 2) / c) | r;
}

// Visits the subsets of an n-element universe with size in [min_size,
// max_size], by size and then by increasing bitmask. Stops as soon as fn
// returns true and reports whether it did.
template <typename Fn>
bool ForEachSubsetBySize(unsigned n, unsigned min_size, unsigned max_size,
                         Fn&& fn) {
  if (max_size > n) max_size = n;
  const std::uint64_t end = n >= 64 ? 0 : (std::uint64_t{1} << n);
  for (unsigned size = min_size; size <= max_size; ++size) {
    if (size == 0) {
      if (fn(std::uint64_t{0})) return true;
      continue;
    }
    for (std::uint64_t mask = (std::uint64_t{1} << size) - 1; mask < end;
         mask = NextSamePopcount(mask)) {
      if (fn(mask)) return true;
    }
  }
  return false;
}

template <typename T>
std::vector<T> PickByMask(const std::vector<T>& items, std::uint64_t mask) {
  std::vector<T> out;
  for (std::uint64_t m = mask; m != 0; m &= m - 1) {
    out.push_back(items[std::countr_zero(m)]);
  }
  return out;
}

inline std::vector<std::size_t> BitIndices(std::uint64_t mask) {
  std::vector<std::size_t> out;
  for (std::uint64_t m = mask; m != 0; m &= m - 1) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
  }
  return out;
}

// Fixed-width bitset over candidates for the approval routines.
class Bits {
 public:
  Bits() = default;
  explicit Bits(std::size_t size) : words_((size + 63) / 64, 0) {}

  void Set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool Test(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1;
  }
  void Fill(std::size_t size) {
    for (std::size_t i = 0; i < size; ++i) Set(i);
  }
  Bits& operator&=(const Bits& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= o.words_[w];
    return *this;
  }
  Bits& operator|=(const Bits& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
    return *this;
  }
  std::size_t Count() const {
    std::size_t total = 0;
    for (std::uint64_t w : words_) total += std::popcount(w);
    return total;
  }
  std::size_t CountAnd(const Bits& o) const {
    std::size_t total = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      total += std::popcount(words_[w] & o.words_[w]);
    }
    return total;
  }

 private:
  std::vector<std::uint64_t> words_;
};

}  // namespace propaudit::internal

#endif  // PROPAUDIT_SRC_SUBSETS_H_

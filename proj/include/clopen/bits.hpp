// Copyright 2026 The clopen Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

namespace clopen {

// Fixed-width dynamic bitset. Bits beyond size() are kept zero so that
// word-wise equality and hashing are exact.
class Bits {
 public:
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  Bits() = default;
  explicit Bits(std::size_t nbits, bool fill = false)
      : nbits_(nbits), words_((nbits + 63) / 64, fill ? ~0ull : 0ull) {
    trim();
  }

  std::size_t size() const { return nbits_; }

  bool test(std::size_t i) const {
    assert(i < nbits_);
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }

  void set(std::size_t i, bool v = true) {
    assert(i < nbits_);
    if (v) {
      words_[i >> 6] |= std::uint64_t{1} << (i & 63);
    } else {
      words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }
  }

  void resize(std::size_t nbits) {
    nbits_ = nbits;
    words_.resize((nbits + 63) / 64, 0);
    trim();
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  // Number of set bits at positions < n.
  std::size_t count_prefix(std::size_t n) const {
    if (n > nbits_) n = nbits_;
    std::size_t c = 0, full = n >> 6;
    for (std::size_t i = 0; i < full; ++i) c += std::popcount(words_[i]);
    if (n & 63) c += std::popcount(words_[full] & ((std::uint64_t{1} << (n & 63)) - 1));
    return c;
  }

  bool none() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  std::size_t find_first() const { return find_from(0); }

  std::size_t find_next(std::size_t prev) const { return find_from(prev + 1); }

  // Index of the k-th (0-based) set bit; npos if fewer than k+1 bits are set.
  std::size_t nth_set(std::size_t k) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::size_t pc = std::popcount(words_[w]);
      if (k >= pc) {
        k -= pc;
        continue;
      }
      std::uint64_t cur = words_[w];
      while (k--) cur &= cur - 1;
      return (w << 6) + std::countr_zero(cur);
    }
    return npos;
  }

  Bits operator&(const Bits& o) const {
    assert(nbits_ == o.nbits_);
    Bits r(nbits_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & o.words_[i];
    return r;
  }

  Bits operator|(const Bits& o) const {
    assert(nbits_ == o.nbits_);
    Bits r(nbits_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] | o.words_[i];
    return r;
  }

  Bits operator~() const {
    Bits r(nbits_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
    r.trim();
    return r;
  }

  bool operator==(const Bits&) const = default;

  const std::vector<std::uint64_t>& words() const { return words_; }

  std::size_t hash() const {
    std::uint64_t h = 0xcbf29ce484222325ull ^ nbits_;
    for (auto w : words_) {
      h ^= w;
      h *= 0x100000001b3ull;
    }
    return static_cast<std::size_t>(h);
  }

  std::vector<std::size_t> to_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = find_first(); i != npos; i = find_next(i)) out.push_back(i);
    return out;
  }

 private:
  std::size_t nbits_ = 0;
  std::vector<std::uint64_t> words_;

  void trim() {
    if (nbits_ & 63 && !words_.empty()) {
      words_.back() &= (std::uint64_t{1} << (nbits_ & 63)) - 1;
    }
  }

  std::size_t find_from(std::size_t i) const {
    while (i < nbits_) {
      std::uint64_t w = words_[i >> 6] >> (i & 63);
      if (w) return i + std::countr_zero(w);
      i = (i & ~std::size_t{63}) + 64;
    }
    return npos;
  }
};

}  // namespace clopen

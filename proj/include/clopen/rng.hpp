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

#include <random>

#include "clopen/upset.hpp"

namespace clopen {

// Seeded generator with hand-rolled bounded sampling; std::mt19937_64 output
// is pinned by the standard, so reports are byte-identical across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }
  // Uniform-ish value in [0, n); modulo bias is irrelevant here and the
  // standard distributions are not portable.
  std::uint64_t below(std::uint64_t n) { return n ? eng_() % n : 0; }
  bool chance(std::uint32_t num, std::uint32_t den) { return below(den) < num; }

 private:
  std::mt19937_64 eng_;
};

struct UpsetParams {
  Nat max_period = 6;
  Nat max_threshold = 6;
  bool allow_finite = true;
};

inline UPSet random_upset(Rng& rng, const UpsetParams& params = {}) {
  Nat p = 1 + rng.below(params.max_period);
  Nat t = rng.below(params.max_threshold + 1);
  std::vector<Nat> residues, transient;
  for (Nat r = 0; r < p; ++r) {
    if (rng.chance(1, 2)) residues.push_back(r);
  }
  if (!params.allow_finite && residues.empty()) residues.push_back(rng.below(p));
  for (Nat i = 0; i < t; ++i) {
    if (rng.chance(1, 2)) transient.push_back(i);
  }
  return UPSet::from_residues(p, residues, t, transient);
}

}  // namespace clopen

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

#include <doctest.h>

#include "clopen/families.hpp"
#include "clopen/rng.hpp"

using namespace clopen;

namespace {

UPSet evens() { return UPSet::from_residues(2, {0}); }

FiniteFamily nat_family(std::vector<UPSet> sets) {
  FiniteFamily f((Universe::nat()));
  for (auto& s : sets) f.add(GroundSet::nat(std::move(s)));
  return f;
}

}  // namespace

TEST_CASE("neighborhood construction") {
  GroundSet a = GroundSet::nat(UPSet::from_elements({0}));
  Neighborhood n = Neighborhood::make(Universe::nat(), {a}, {});
  CHECK_FALSE(n.inconsistent());
  CHECK(n.pos().size() == 1);

  GroundSet e = GroundSet::nat(evens());
  Neighborhood bad = Neighborhood::make(Universe::nat(), {e}, {e});
  CHECK(bad.inconsistent());

  GroundSet b = GroundSet::nat(UPSet::from_elements({1}));
  Neighborhood dedup = Neighborhood::make(Universe::nat(), {a, a}, {b});
  CHECK(dedup.pos().size() == 1);
  CHECK(dedup.neg().size() == 1);

  // Extensional duplicates collapse even when built differently.
  GroundSet e2 = GroundSet::nat(UPSet::from_residues(4, {0, 2}));
  Neighborhood dedup2 = Neighborhood::make(Universe::nat(), {e, e2}, {});
  CHECK(dedup2.pos().size() == 1);
}

TEST_CASE("membership against the cofinite topology oracle") {
  FamilyOracle cof = FamilyOracle::cofinite_topology();
  GroundSet almost_all = GroundSet::nat(set_complement(UPSet::from_elements({0})));
  GroundSet zero = GroundSet::nat(UPSet::from_elements({0}));
  CHECK(cof.member(almost_all));
  CHECK_FALSE(cof.member(zero));
  CHECK(cof.member(GroundSet::nat(UPSet::empty_set())));
  CHECK_FALSE(cof.member(GroundSet::nat(evens())));

  Neighborhood n = Neighborhood::make(Universe::nat(), {almost_all}, {zero});
  CHECK(nbhd_member(cof, n));
}

TEST_CASE("membership against materialized families") {
  FiniteFamily bounds = nat_family({UPSet::empty_set(), UPSet::naturals()});
  FamilyOracle o = FamilyOracle::materialized(bounds);
  Neighborhood both = Neighborhood::make(
      Universe::nat(),
      {GroundSet::nat(UPSet::empty_set()), GroundSet::nat(UPSet::naturals())}, {});
  CHECK(nbhd_member(o, both));
  Neighborhood wants_evens =
      Neighborhood::make(Universe::nat(), {GroundSet::nat(evens())}, {});
  CHECK_FALSE(nbhd_member(o, wants_evens));
}

TEST_CASE("inconsistent neighborhood contains nothing") {
  GroundSet e = GroundSet::nat(evens());
  Neighborhood bad = Neighborhood::make(Universe::nat(), {e}, {e});
  CHECK_FALSE(nbhd_member(FamilyOracle::cofinite_topology(), bad));
  CHECK_FALSE(nbhd_member(FamilyOracle::materialized(nat_family({evens()})), bad));
}

TEST_CASE("intersection is constraint conjunction") {
  Rng rng(17);
  for (int i = 0; i < 200; ++i) {
    int n = 2 + static_cast<int>(rng.below(2));
    auto random_nbhd = [&]() {
      std::vector<GroundSet> pos, neg;
      for (Nat k = 0; k < rng.below(3); ++k) {
        pos.push_back(GroundSet::finite(n, static_cast<std::uint32_t>(rng.below(1u << n))));
      }
      for (Nat k = 0; k < rng.below(3); ++k) {
        neg.push_back(GroundSet::finite(n, static_cast<std::uint32_t>(rng.below(1u << n))));
      }
      return Neighborhood::make(Universe::finite(n), pos, neg);
    };
    Neighborhood n1 = random_nbhd(), n2 = random_nbhd();
    Neighborhood both = nbhd_intersect(n1, n2);
    for (std::uint64_t fb = 0; fb < family_count(n); ++fb) {
      FamilyOracle f = FamilyOracle::materialized(
          family_from_bitmap(n, static_cast<FamilyBitmap>(fb)));
      CHECK(nbhd_member(f, both) == (nbhd_member(f, n1) && nbhd_member(f, n2)));
    }
  }
}

TEST_CASE("intersection merges and flags conflicts") {
  GroundSet a = GroundSet::nat(UPSet::from_elements({0}));
  GroundSet b = GroundSet::nat(UPSet::from_elements({1}));
  Neighborhood pa = Neighborhood::make(Universe::nat(), {a}, {});
  Neighborhood nb = Neighborhood::make(Universe::nat(), {}, {b});
  Neighborhood merged = nbhd_intersect(pa, nb);
  CHECK(merged.pos().size() == 1);
  CHECK(merged.neg().size() == 1);
  CHECK_FALSE(merged.inconsistent());

  Neighborhood na = Neighborhood::make(Universe::nat(), {}, {a});
  CHECK(nbhd_intersect(pa, na).inconsistent());
  CHECK(nbhd_intersect(pa, pa).pos().size() == 1);
}

TEST_CASE("positive and negative constraints split every family") {
  // For any single set, each family lies in exactly one of the two halves.
  for (int n = 1; n <= 3; ++n) {
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      GroundSet g = GroundSet::finite(n, mask);
      Neighborhood plus = Neighborhood::make(Universe::finite(n), {g}, {});
      Neighborhood minus = Neighborhood::make(Universe::finite(n), {}, {g});
      for (std::uint64_t fb = 0; fb < family_count(n); ++fb) {
        FamilyOracle f = FamilyOracle::materialized(
            family_from_bitmap(n, static_cast<FamilyBitmap>(fb)));
        CHECK(nbhd_member(f, plus) != nbhd_member(f, minus));
      }
    }
  }
}

TEST_CASE("brute force equivalence over small finite universes") {
  Rng rng(29);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 1 + static_cast<int>(rng.below(3));
    std::vector<GroundSet> pos, neg;
    for (Nat k = 0; k < rng.below(3); ++k) {
      pos.push_back(GroundSet::finite(n, static_cast<std::uint32_t>(rng.below(1u << n))));
    }
    for (Nat k = 0; k < rng.below(3); ++k) {
      neg.push_back(GroundSet::finite(n, static_cast<std::uint32_t>(rng.below(1u << n))));
    }
    Neighborhood nb = Neighborhood::make(Universe::finite(n), pos, neg);
    for (std::uint64_t fb = 0; fb < family_count(n); ++fb) {
      FiniteFamily fam = family_from_bitmap(n, static_cast<FamilyBitmap>(fb));
      bool expect = !nb.inconsistent();
      for (const auto& g : nb.pos()) expect = expect && fam.contains(g);
      for (const auto& g : nb.neg()) expect = expect && !fam.contains(g);
      CHECK(nbhd_member(FamilyOracle::materialized(fam), nb) == expect);
    }
  }
}

TEST_CASE("universe mismatches are rejected") {
  FiniteFamily f((Universe::finite(2)));
  CHECK_THROWS_AS(f.add(GroundSet::nat(evens())), ValidationError);
  Neighborhood n = Neighborhood::make(Universe::nat(), {GroundSet::nat(evens())}, {});
  CHECK_THROWS_AS(nbhd_member(FamilyOracle::discrete_topology(2), n), ValidationError);
}

TEST_CASE("pair universe members") {
  GroundSet p = GroundSet::pair(3, 5);
  GroundSet q = GroundSet::y_subset(evens());
  CHECK(p.universe() == Universe::pairs());
  CHECK(q.universe() == Universe::pairs());
  CHECK(p != q);
  FamilyOracle prod = FamilyOracle::pairs_in_product(evens(), UPSet::naturals());
  CHECK(prod.member(GroundSet::pair(2, 7)));
  CHECK_FALSE(prod.member(GroundSet::pair(3, 7)));
  CHECK_FALSE(prod.member(q));
}

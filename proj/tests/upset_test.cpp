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

#include "clopen/rng.hpp"
#include "clopen/upset.hpp"

using namespace clopen;

namespace {

UPSet evens() { return UPSet::from_residues(2, {0}); }
UPSet odds() { return UPSet::from_residues(2, {1}); }
UPSet multiples(Nat k) { return UPSet::from_residues(k, {0}); }

// Membership straight from the defining fields of the inputs.
bool direct(const UPSet& s, Nat n) {
  if (n < s.threshold()) return s.transient_bits().test(n);
  return s.residue_bits().test(n % s.period());
}

}  // namespace

TEST_CASE("construction from elements") {
  UPSet empty = UPSet::from_elements({});
  CHECK(empty.is_empty());
  CHECK(empty.threshold() == 0);
  CHECK(empty.period() == 1);
  CHECK(empty.residues().empty());

  UPSet dup = UPSet::from_elements({1, 2, 2});
  CHECK(dup.classify() == Cardinality::finite(2));
  CHECK(dup.contains(1));
  CHECK(dup.contains(2));
  CHECK_FALSE(dup.contains(0));

  std::vector<Nat> ten(10);
  for (Nat i = 0; i < 10; ++i) ten[i] = i;
  CHECK(UPSet::from_elements(ten).classify() == Cardinality::finite(10));
}

TEST_CASE("construction from residues") {
  CHECK(evens().contains(0));
  CHECK(evens().contains(4));
  CHECK_FALSE(evens().contains(7));

  UPSet cofinite = UPSet::from_residues(1, {0}, 3, {});
  CHECK_FALSE(cofinite.contains(0));
  CHECK_FALSE(cofinite.contains(2));
  CHECK(cofinite.contains(3));
  CHECK(cofinite.is_infinite());

  // Redundant period collapses to the canonical one.
  UPSet wide = UPSet::from_residues(4, {0, 2});
  CHECK(wide == evens());
  for (Nat n = 0; n <= 100; ++n) CHECK(wide.contains(n) == (n % 2 == 0));

  CHECK_THROWS_AS(UPSet::from_residues(2, {2}), ValidationError);
  CHECK_THROWS_AS(UPSet::from_residues(2, {0}, 1, {1}), ValidationError);
  CHECK_THROWS_AS(UPSet::from_residues(0, {}), ValidationError);
}

TEST_CASE("boolean operations") {
  CHECK(set_union(evens(), odds()) == UPSet::naturals());
  UPSet six = set_intersection(evens(), multiples(3));
  CHECK(six == multiples(6));
  for (Nat n = 0; n <= 120; ++n) CHECK(six.contains(n) == (n % 6 == 0));

  Rng rng(7);
  for (int i = 0; i < 1000; ++i) {
    UPSet a = random_upset(rng);
    CHECK(set_complement(set_complement(a)) == a);
  }
}

TEST_CASE("classification") {
  CHECK(UPSet::empty_set().classify() == Cardinality::finite(0));
  CHECK(evens().classify() == Cardinality::infinite());
  CHECK(set_intersection(evens(), odds()).classify() == Cardinality::finite(0));
}

TEST_CASE("membership examples") {
  CHECK(evens().contains(4));
  CHECK_FALSE(evens().contains(7));
  UPSet missing_three = UPSet::from_residues(1, {0}, 3, {});
  CHECK_FALSE(missing_three.contains(2));
}

TEST_CASE("nth element") {
  CHECK(evens().nth(3) == 6);
  CHECK(odds().nth(0) == 1);

  // multiples of 3 shifted behind a transient 1
  UPSet s = UPSet::from_residues(3, {0}, 2, {1});
  std::vector<Nat> expect{1, 3, 6, 9, 12};
  for (Nat k = 0; k < expect.size(); ++k) CHECK(s.nth(k) == expect[k]);

  // Enumeration agrees with a membership scan for random sets.
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    UPSet a = random_upset(rng, {5, 5, false});
    Nat k = 0;
    for (Nat n = 0; n < 200; ++n) {
      if (a.contains(n)) {
        CHECK(a.nth(k) == n);
        ++k;
      }
    }
    CHECK(a.count_below(200) == k);
  }

  UPSet fin = UPSet::from_elements({5});
  CHECK_THROWS_AS(fin.nth(1), RangeError);
}

TEST_CASE("subset") {
  CHECK(is_subset(UPSet::empty_set(), evens()));
  CHECK(is_subset(UPSet::empty_set(), UPSet::empty_set()));
  CHECK(is_subset(multiples(6), evens()));
  for (Nat n = 0; n <= 120; ++n) {
    if (multiples(6).contains(n)) CHECK(evens().contains(n));
  }
  CHECK_FALSE(is_subset(evens(), odds()));
}

TEST_CASE("index filter") {
  CHECK(index_filter(UPSet::naturals(), 2, 0) == evens());

  UPSet f = index_filter(evens(), 2, 1);
  // Every other even number: 2, 6, 10, ...
  CHECK(f == UPSet::from_residues(4, {2}));
  for (Nat i = 0; i <= 50; ++i) {
    Nat v = evens().nth(i);
    CHECK(f.contains(v) == (i % 2 == 1));
  }

  Rng rng(23);
  for (int i = 0; i < 100; ++i) {
    UPSet a = random_upset(rng, {5, 5, false});
    CHECK(index_filter(a, 1, 0) == a);
    Nat q = 1 + rng.below(5);
    UPSet uni = UPSet::empty_set();
    std::vector<UPSet> parts;
    for (Nat r = 0; r < q; ++r) parts.push_back(index_filter(a, q, r));
    for (Nat r = 0; r < q; ++r) {
      for (Nat r2 = r + 1; r2 < q; ++r2) {
        CHECK(set_intersection(parts[r], parts[r2]).is_empty());
      }
      uni = set_union(uni, parts[r]);
    }
    CHECK(uni == a);
  }

  CHECK_THROWS_AS(index_filter(UPSet::from_elements({1, 2}), 2, 0), PreconditionError);
}

TEST_CASE("boolean algebra laws on random triples") {
  Rng rng(3);
  for (int i = 0; i < 500; ++i) {
    UPSet a = random_upset(rng), b = random_upset(rng), c = random_upset(rng);
    CHECK(set_union(a, b) == set_union(b, a));
    CHECK(set_intersection(set_intersection(a, b), c) ==
          set_intersection(a, set_intersection(b, c)));
    CHECK(set_intersection(a, set_union(b, c)) ==
          set_union(set_intersection(a, b), set_intersection(a, c)));
    CHECK(set_complement(set_union(a, b)) ==
          set_intersection(set_complement(a), set_complement(b)));
    CHECK(set_union(a, set_intersection(a, b)) == a);
  }
}

TEST_CASE("operations agree with pointwise field semantics") {
  Rng rng(5);
  for (int i = 0; i < 300; ++i) {
    UPSet a = random_upset(rng), b = random_upset(rng);
    Nat bound = 5 * (std::max(a.threshold(), b.threshold()) +
                     a.period() * b.period());
    UPSet u = set_union(a, b), in = set_intersection(a, b);
    for (Nat n = 0; n <= bound; ++n) {
      CHECK(a.contains(n) == direct(a, n));
      CHECK(u.contains(n) == (direct(a, n) || direct(b, n)));
      CHECK(in.contains(n) == (direct(a, n) && direct(b, n)));
    }
  }
}

TEST_CASE("canonical form is a normal form") {
  Rng rng(9);
  for (int i = 0; i < 300; ++i) {
    UPSet a = random_upset(rng);
    // Re-expressing through a doubled period and padded threshold lands on
    // the same fields.
    std::vector<Nat> residues, transient;
    Nat p2 = a.period() * 2, t2 = a.threshold() + 3;
    for (Nat r = 0; r < p2; ++r) {
      if (a.residue_bits().test(r % a.period())) residues.push_back(r);
    }
    for (Nat n = 0; n < t2; ++n) {
      if (a.contains(n)) transient.push_back(n);
    }
    UPSet b = UPSet::from_residues(p2, residues, t2, transient);
    CHECK(b == a);
    CHECK(b.threshold() == a.threshold());
    CHECK(b.period() == a.period());
  }
}

TEST_CASE("finite classification counts the transient exactly") {
  Rng rng(13);
  for (int i = 0; i < 200; ++i) {
    UPSet a = random_upset(rng);
    Cardinality c = a.classify();
    if (c.is_finite()) {
      Nat count = 0;
      for (Nat n = 0; n < a.threshold(); ++n) {
        if (a.contains(n)) ++count;
      }
      CHECK(c.count() == count);
      CHECK(a.residues().empty());
    }
  }
}

TEST_CASE("period cap") {
  Nat old = max_period();
  set_max_period(16);
  CHECK_THROWS_AS(set_union(UPSet::from_residues(5, {0}), UPSet::from_residues(7, {0})),
                  ResourceError);
  set_max_period(old);
  CHECK(set_union(UPSet::from_residues(5, {0}), UPSet::from_residues(7, {0})).period() == 35);
}

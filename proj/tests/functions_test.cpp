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

#include <numeric>

#include "clopen/functions.hpp"
#include "clopen/rng.hpp"

using namespace clopen;

namespace {

UPSet evens() { return UPSet::from_residues(2, {0}); }
UPSet odds() { return UPSet::from_residues(2, {1}); }

UPSet range_set(Nat k) {
  std::vector<Nat> v(k);
  std::iota(v.begin(), v.end(), Nat{0});
  return UPSet::from_elements(v);
}

}  // namespace

TEST_CASE("pair membership") {
  PartialFn finite = PartialFn::make({{1, 2}});
  CHECK(fn_contains_pair(finite, 1, 2));
  CHECK_FALSE(fn_contains_pair(finite, 1, 3));
  CHECK_FALSE(fn_contains_pair(finite, 2, 2));

  PartialFn constant = PartialFn::make({}, ConstTail{evens(), 5});
  CHECK(fn_contains_pair(constant, 4, 5));
  CHECK_FALSE(fn_contains_pair(constant, 4, 6));
  CHECK_FALSE(fn_contains_pair(constant, 3, 5));

  PartialFn enumerated = PartialFn::make({}, EnumerateTail{evens(), odds()});
  for (Nat i = 0; i <= 20; ++i) {
    CHECK(fn_contains_pair(enumerated, evens().nth(i), odds().nth(i)));
  }
  CHECK_FALSE(fn_contains_pair(enumerated, evens().nth(0), odds().nth(1)));
}

TEST_CASE("graph cardinality dichotomy") {
  CHECK(PartialFn::make({{0, 1}, {2, 3}}).graph_cardinality() == Cardinality::finite(2));
  PartialFn inf = PartialFn::make({{1, 1}}, ConstTail{evens(), 0});
  CHECK(inf.graph_cardinality().is_infinite());
  PartialFn fin_tail = PartialFn::make({}, ConstTail{range_set(3), 0});
  CHECK(fin_tail.graph_cardinality() == Cardinality::finite(3));

  FnSpace fin_space = FnSpace::make(UPSet::naturals(), UPSet::naturals(),
                                    FnSpace::Flavor::FiniteOnly);
  CHECK(fn_in_space(fin_tail, fin_space).ok);
  SpaceCheck rejected = fn_in_space(inf, fin_space);
  CHECK_FALSE(rejected.ok);
  CHECK(rejected.violation->kind == SpaceViolation::Kind::NotFinite);
}

TEST_CASE("space membership basics") {
  FnSpace all = FnSpace::make(UPSet::naturals(), UPSet::naturals(), FnSpace::Flavor::All);
  SpaceCheck conflict = fn_in_space(PartialFn::make({{0, 1}, {0, 2}}), all);
  CHECK_FALSE(conflict.ok);
  CHECK(conflict.violation->kind == SpaceViolation::Kind::Conflict);
  CHECK(conflict.violation->a == 0);

  FnSpace inj = FnSpace::make(UPSet::naturals(), UPSet::naturals(), FnSpace::Flavor::Injective);
  SpaceCheck collide = fn_in_space(PartialFn::make({{0, 5}, {2, 5}}), inj);
  CHECK_FALSE(collide.ok);
  CHECK(collide.violation->kind == SpaceViolation::Kind::NotInjective);
  CHECK(collide.violation->b == 5);

  PartialFn onto_fn = PartialFn::make({}, EnumerateTail{evens(), odds()});
  FnSpace onto = FnSpace::make(evens(), odds(), FnSpace::Flavor::Onto);
  CHECK(fn_in_space(onto_fn, onto).ok);
  for (Nat i = 0; i <= 50; ++i) CHECK(odds().contains(*onto_fn.tail_value_at(evens().nth(i))));

  CHECK_THROWS_AS(FnSpace::make(range_set(2), range_set(3), FnSpace::Flavor::Onto),
                  ValidationError);
}

TEST_CASE("tail rules and injectivity") {
  FnSpace inj = FnSpace::make(UPSet::naturals(), UPSet::naturals(), FnSpace::Flavor::Injective);
  // A constant tail over two or more points repeats its value.
  CHECK_FALSE(fn_in_space(PartialFn::make({}, ConstTail{evens(), 3}), inj).ok);
  CHECK(fn_in_space(PartialFn::make({}, ConstTail{range_set(1), 3}), inj).ok);
  // An enumerating tail into an infinite codomain never repeats.
  CHECK(fn_in_space(PartialFn::make({}, EnumerateTail{evens(), odds()}), inj).ok);
  // Wrapping around a finite codomain repeats.
  CHECK_FALSE(fn_in_space(PartialFn::make({}, EnumerateTail{evens(), range_set(3)}), inj).ok);
  // A finite pair colliding with the tail image.
  PartialFn mixed = PartialFn::make({{1, 1}}, EnumerateTail{evens(), odds()});
  SpaceCheck c = fn_in_space(mixed, inj);
  CHECK_FALSE(c.ok);
  CHECK(c.violation->kind == SpaceViolation::Kind::NotInjective);
}

TEST_CASE("re-representation stability") {
  // Moving a tail point into the finite graph leaves every check unchanged.
  Rng rng(53);
  for (int i = 0; i < 100; ++i) {
    UPSet domain = UPSet::from_residues(2 + rng.below(3), {rng.below(2)});
    Nat value = rng.below(4);
    PartialFn f = PartialFn::make({}, ConstTail{domain, value});
    Nat first = domain.nth(0);
    PartialFn g = PartialFn::make({{first, value}},
                                  ConstTail{set_difference(domain, UPSet::from_elements({first})),
                                            value});
    for (Nat a = 0; a < 20; ++a) {
      for (Nat b = 0; b < 6; ++b) CHECK(fn_contains_pair(f, a, b) == fn_contains_pair(g, a, b));
    }
    for (auto flavor : {FnSpace::Flavor::All, FnSpace::Flavor::Injective, FnSpace::Flavor::Onto}) {
      FnSpace space = FnSpace::make(UPSet::naturals(), UPSet::naturals(), flavor);
      CHECK(fn_in_space(f, space).ok == fn_in_space(g, space).ok);
    }
  }
}

TEST_CASE("exhaustive agreement with the definitional oracle") {
  // All pair sets over a small grid, including out-of-range pairs.
  for (Nat ka = 1; ka <= 2; ++ka) {
    for (Nat kb = 1; kb <= 2; ++kb) {
      UPSet A = range_set(ka), B = range_set(kb);
      std::vector<std::pair<Nat, Nat>> grid;
      for (Nat a = 0; a <= ka; ++a) {
        for (Nat b = 0; b <= kb; ++b) grid.emplace_back(a, b);
      }
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << grid.size()); ++mask) {
        std::vector<std::pair<Nat, Nat>> raw;
        for (std::size_t i = 0; i < grid.size(); ++i) {
          if (mask >> i & 1) raw.push_back(grid[i]);
        }
        bool in_product = true, functional = true, injective = true, onto_b;
        for (const auto& [a, b] : raw) in_product = in_product && a < ka && b < kb;
        for (std::size_t i = 0; i < raw.size(); ++i) {
          for (std::size_t j = i + 1; j < raw.size(); ++j) {
            if (raw[i].first == raw[j].first && raw[i].second != raw[j].second) {
              functional = false;
            }
            if (raw[i].second == raw[j].second && raw[i].first != raw[j].first) {
              injective = false;
            }
          }
        }
        std::vector<bool> hit(kb, false);
        for (const auto& [a, b] : raw) {
          if (b < kb) hit[b] = true;
        }
        onto_b = std::all_of(hit.begin(), hit.end(), [](bool v) { return v; });

        PartialFn f = PartialFn::make(raw);
        CHECK(fn_in_space(f, FnSpace::make(A, B, FnSpace::Flavor::All)).ok ==
              (in_product && functional));
        CHECK(fn_in_space(f, FnSpace::make(A, B, FnSpace::Flavor::Injective)).ok ==
              (in_product && functional && injective));
        if (ka >= kb) {
          CHECK(fn_in_space(f, FnSpace::make(A, B, FnSpace::Flavor::Onto)).ok ==
                (in_product && functional && onto_b));
        }
      }
    }
  }
}

TEST_CASE("tail validation") {
  CHECK_THROWS_AS(PartialFn::make({{0, 1}}, ConstTail{evens(), 2}), ValidationError);
  CHECK_THROWS_AS(PartialFn::make({}, EnumerateTail{evens(), UPSet::empty_set()}),
                  ValidationError);
  CHECK_NOTHROW(PartialFn::make({{1, 1}}, ConstTail{evens(), 2}));
}

TEST_CASE("pair encodings over a tiny carrier") {
  UPSet degenerate = encode_kuratowski(0, 0, 4);
  CHECK(degenerate.classify() == Cardinality::finite(1));
  CHECK(degenerate.contains(4 + 1));  // the singleton {0}

  UPSet pair01 = encode_kuratowski(0, 1, 4);
  CHECK(pair01.classify() == Cardinality::finite(2));
  CHECK(pair01.contains(4 + 0b01));
  CHECK(pair01.contains(4 + 0b11));

  auto [a, b] = decode_kuratowski(encode_kuratowski(3, 5, 8), 8);
  CHECK(a == 3);
  CHECK(b == 5);

  for (Nat x = 0; x < 4; ++x) {
    for (Nat y = 0; y < 4; ++y) {
      auto [dx, dy] = decode_kuratowski(encode_kuratowski(x, y, 4), 4);
      CHECK(dx == x);
      CHECK(dy == y);
    }
  }

  CHECK_THROWS_AS(encode_kuratowski(9, 0, 8), ValidationError);
  CHECK_THROWS_AS(decode_kuratowski(evens(), 4), ValidationError);
}

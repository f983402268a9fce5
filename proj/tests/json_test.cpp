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

#include "clopen/json_io.hpp"
#include "clopen/rng.hpp"

using namespace clopen;
using namespace clopen::jsonio;

TEST_CASE("set encoding is canonical and bit-exact") {
  UPSet evens = UPSet::from_residues(2, {0});
  CHECK(upset_to_json(evens).dump() == R"({"R":[0],"T":0,"p":2,"transient":[]})");

  // A redundant representation parses to the same canonical bytes.
  UPSet wide = upset_from_json(json::parse(R"({"p":4,"R":[0,2],"T":3,"transient":[0,2]})"));
  CHECK(upset_to_json(wide).dump() == upset_to_json(evens).dump());

  CHECK(upset_from_json(json::parse(R"({"elems":[1,2,2]})")) == UPSet::from_elements({1, 2}));
  CHECK(upset_from_json(json::parse("[3,1]")) == UPSet::from_elements({1, 3}));

  CHECK_THROWS_AS(upset_from_json(json::parse(R"({"p":2,"R":[5]})")), ValidationError);
  CHECK_THROWS_AS(upset_from_json(json::parse(R"({"T":1})")), ValidationError);
}

TEST_CASE("set round-trips") {
  Rng rng(71);
  for (int i = 0; i < 300; ++i) {
    UPSet a = random_upset(rng);
    CHECK(upset_from_json(upset_to_json(a)) == a);
  }
}

TEST_CASE("family encoding") {
  FiniteFamily f = family_from_json(json::parse(R"({"universe":{"finite":2},"sets":[[0],[1]]})"));
  CHECK(f.universe() == Universe::finite(2));
  CHECK(f.size() == 2);
  CHECK(f.contains(GroundSet::finite(2, 0b01)));
  CHECK(family_from_json(family_to_json(f)).same_members(f));

  FiniteFamily nat = family_from_json(
      json::parse(R"({"universe":"nat","sets":[{"p":2,"R":[0]},{"elems":[1]}]})"));
  CHECK(nat.size() == 2);
  CHECK(family_from_json(family_to_json(nat)).same_members(nat));

  CHECK_THROWS_AS(family_from_json(json::parse(R"({"sets":[]})")), ValidationError);
}

TEST_CASE("neighborhood encoding") {
  Neighborhood n = nbhd_from_json(json::parse(
      R"({"universe":"nat","pos":[{"p":2,"R":[0]}],"neg":[{"p":2,"R":[1]}]})"));
  CHECK(n.pos().size() == 1);
  CHECK(n.neg().size() == 1);
  json j = nbhd_to_json(n);
  CHECK_FALSE(j.contains("inconsistent"));
  Neighborhood back = nbhd_from_json(j);
  CHECK(back.pos()[0] == n.pos()[0]);

  Neighborhood bad = nbhd_from_json(json::parse(
      R"({"universe":"nat","pos":[{"p":2,"R":[0]}],"neg":[{"p":2,"R":[0]}]})"));
  CHECK(bad.inconsistent());
  CHECK(nbhd_to_json(bad).at("inconsistent") == true);

  Neighborhood pairs = nbhd_from_json(json::parse(
      R"({"universe":"pairs","pos":[{"pair":[0,1]}],"neg":[{"yset":{"elems":[2]}}]})"));
  CHECK(pairs.pos()[0] == GroundSet::pair(0, 1));
  CHECK(nbhd_from_json(nbhd_to_json(pairs)).neg()[0] == pairs.neg()[0]);
}

TEST_CASE("partial function encoding") {
  PartialFn f = partial_fn_from_json(json::parse(
      R"({"map":[[0,1]],"tail":{"const":{"domain":{"p":2,"R":[0],"T":1,"transient":[]},"value":3}}})"));
  CHECK(fn_contains_pair(f, 0, 1));
  CHECK(fn_contains_pair(f, 2, 3));
  CHECK_FALSE(fn_contains_pair(f, 0, 3));
  json j = partial_fn_to_json(f);
  PartialFn back = partial_fn_from_json(j);
  for (Nat a = 0; a < 10; ++a) {
    for (Nat b = 0; b < 5; ++b) CHECK(fn_contains_pair(f, a, b) == fn_contains_pair(back, a, b));
  }

  PartialFn bare = partial_fn_from_json(json::parse(R"({"map":[[4,4]],"tail":null})"));
  CHECK(bare.pairs().size() == 1);
  CHECK(partial_fn_to_json(bare).at("tail").is_null());

  FnSpace s = fn_space_from_json(json::parse(
      R"({"A":{"p":1,"R":[0]},"B":{"elems":[0,1]},"flavor":"onto"})"));
  CHECK(s.flavor == FnSpace::Flavor::Onto);
  CHECK(fn_space_from_json(fn_space_to_json(s)).A == s.A);
}

TEST_CASE("certificate and construction reports serialize") {
  FiniteFamily theta(Universe::finite(2), {GroundSet::finite(2, 1), GroundSet::finite(2, 2)});
  auto cert = witnesses::separate_lattice(theta);
  REQUIRE(cert.ok());
  json j = certificate_to_json(cert.value());
  CHECK(j.at("class") == "lattices");
  CHECK(j.at("checks").size() == 3);
  CHECK(j.at("neighborhood").at("pos").size() == 2);

  auto lem = witnesses::nontopology_lattice(
      Neighborhood::make(Universe::nat(), {}, {GroundSet::nat(UPSet::from_elements({0}))}), 2);
  REQUIRE(lem.ok());
  json lj = nontopology_to_json(lem.value());
  CHECK(lj.at("branch") == 1);
  CHECK(lj.at("parts").size() == 2);
  CHECK(lj.at("checks").size() == 6);
}

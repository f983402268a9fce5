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

// Partial functions between subsets of the naturals, represented as a finite
// list of pairs plus an optional infinite tail rule, and the spaces (all /
// injective / onto / finite-only partial functions) they are checked against.

#pragma once

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "clopen/cube.hpp"

namespace clopen {

struct ConstTail {
  UPSet domain;
  Nat value;
};

// Maps the i-th element of the domain to the (i mod |codomain|)-th element of
// the codomain (the i-th when the codomain is infinite).
struct EnumerateTail {
  UPSet domain;
  UPSet codomain;
};

using Tail = std::variant<std::monostate, ConstTail, EnumerateTail>;

// A set of ordered pairs: a finite graph part and an optional tail rule on a
// disjoint domain. Conflicting finite pairs (same first coordinate, distinct
// second) are representable so that membership checkers can witness them;
// operations that require functionality validate it first.
class PartialFn {
 public:
  PartialFn() = default;
  static PartialFn make(std::vector<std::pair<Nat, Nat>> pairs, Tail tail = std::monostate{});

  const std::vector<std::pair<Nat, Nat>>& pairs() const { return pairs_; }
  const Tail& tail() const { return tail_; }
  bool has_tail() const { return !std::holds_alternative<std::monostate>(tail_); }

  bool is_function() const;
  std::optional<std::pair<Nat, std::pair<Nat, Nat>>> conflict() const;  // (a, (b, b'))

  Cardinality graph_cardinality() const;
  UPSet domain() const;
  // Every value the tail rule attains, as an exact set.
  UPSet tail_image() const;
  std::optional<Nat> tail_value_at(Nat a) const;

  std::string brief() const;

 private:
  std::vector<std::pair<Nat, Nat>> pairs_;
  Tail tail_;
};

bool fn_contains_pair(const PartialFn& f, Nat a, Nat b);

// Membership oracle for the graph of f in the pair universe.
FamilyOracle graph_oracle(const PartialFn& f);

struct FnSpace {
  enum class Flavor { All, Injective, Onto, FiniteOnly };
  UPSet A, B;
  Flavor flavor = Flavor::All;

  // The onto flavor requires |A| >= |B|.
  static FnSpace make(UPSet A, UPSet B, Flavor flavor);
};

const char* flavor_name(FnSpace::Flavor f);

struct SpaceViolation {
  enum class Kind {
    NonPairMember,     // a member that is not an ordered pair
    OutsideProduct,    // a pair outside A x B
    Conflict,          // <a,b> and <a,b'> with b != b'
    NotInjective,      // <a,b> and <a',b> with a != a'
    NotOnto,           // some b in B is never attained
    NotFinite,         // infinite graph in the finite-only space
  };
  Kind kind;
  Nat a = 0, b = 0, a2 = 0, b2 = 0;
  std::optional<GroundSet> member;
};

struct SpaceCheck {
  bool ok = false;
  std::optional<SpaceViolation> violation;
};

// Does the graph of f belong to the space? Decidable for tail rules: a
// constant tail attains one value, an enumerate tail attains its codomain.
SpaceCheck fn_in_space(const PartialFn& f, const FnSpace& space);

// Same check for a raw family of pair-universe members (the form in which
// points outside every function space arrive).
SpaceCheck pairset_in_space(const FiniteFamily& p, const FnSpace& space);

// The ordered pair {{a},{a,b}} spelled out as a subset of Y union P(Y) for a
// finite carrier Y of size n <= 8: index i < n is the point i of Y, index
// n + m is the subset of Y with mask m. Round-trips through
// decode_kuratowski.
UPSet encode_kuratowski(Nat a, Nat b, int y_size);
std::pair<Nat, Nat> decode_kuratowski(const UPSet& s, int y_size);

}  // namespace clopen

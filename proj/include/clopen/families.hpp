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

// Classification and closure of finite set families: sublattices of the
// powerset, bounded sublattices, topologies, almost disjoint families, and
// the operators that generate them.

#pragma once

#include <cstdint>
#include <optional>

#include "clopen/cube.hpp"

namespace clopen {

inline constexpr std::size_t kDefaultClosureCap = 200000;

struct LatticeWitness {
  GroundSet a, b;
  GroundSet combined;  // a|b or a&b, absent from the family
  bool is_union;
};

struct ClassReport {
  bool is_lattice = false;
  bool is_bounded = false;  // contains both the empty set and the universe
  bool is_topology = false;
  std::optional<bool> is_t1;  // finite universes only
  std::optional<LatticeWitness> lattice_witness;  // set when !is_lattice
  std::optional<GroundSet> missing_bound;         // set when !is_bounded
};

// Least family containing the generators and closed under binary union and
// intersection. Exploits distributivity of the ambient powerset: the closure
// is exactly the set of unions of nonempty intersections of generators, so a
// meet fixpoint followed by a join fixpoint reaches it. Throws ResourceError
// past `cap` members (or past a memory budget for symbolic members).
FiniteFamily lattice_closure(const FiniteFamily& generators, std::size_t cap = kDefaultClosureCap);

// lattice_closure plus both bounds; the result is a (finite) topology.
FiniteFamily topology_from_subbase(const FiniteFamily& generators,
                                   std::size_t cap = kDefaultClosureCap);

ClassReport classify_family(const FiniteFamily& f);

struct AdViolation {
  enum class Kind { SmallMember, LargeIntersection };
  Kind kind;
  GroundSet first;
  std::optional<GroundSet> second;  // the other half of a violating pair
};

struct AdReport {
  bool is_ad = false;
  std::optional<AdViolation> violation;
};

// Almost disjointness over the naturals: every member infinite and every
// distinct pair with intersection of cardinality below lambda (lambda
// infinite means: finite intersection).
AdReport is_ad_family(const FiniteFamily& f, const Cardinality& lambda);

// Self-map of a finite universe.
struct EndoMap {
  int n = 0;
  std::vector<int> images;

  static EndoMap make(int n, std::vector<int> images);
  int operator()(int x) const { return images[static_cast<std::size_t>(x)]; }
  std::uint32_t image_mask(std::uint32_t m) const;
  std::uint32_t preimage_mask(std::uint32_t m) const;
};

// The largest topology making f continuous out of (X, sigma):
// {X} together with every set whose preimage lies in sigma.
FiniteFamily tau_f(const FiniteFamily& sigma, const EndoMap& f);

struct MapCheck {
  bool continuous = false;
  bool open = false;
  bool closed = false;
};

// Continuity, openness and closedness of f as a self-map of (X, rho).
MapCheck map_check(const EndoMap& f, const FiniteFamily& rho);

struct ClassCounts {
  std::uint64_t families = 0;
  std::uint64_t lattices = 0;
  std::uint64_t bounded_lattices = 0;
  std::uint64_t topologies = 0;
  std::uint64_t t1_topologies = 0;
};

// Exhaustively classifies every family of subsets of an n-element universe,
// n in [1,4]. At n = 4 that is 65536 families.
ClassCounts enumerate_classify(int n);

// A family over a finite universe of size n <= 4 packs into a bitmap whose
// bit k records whether the subset with mask k is a member.
using FamilyBitmap = std::uint32_t;

bool bitmap_is_lattice(int n, FamilyBitmap fb);
bool bitmap_is_bounded(int n, FamilyBitmap fb);
bool bitmap_is_topology(int n, FamilyBitmap fb);
bool bitmap_is_t1(int n, FamilyBitmap fb);
FiniteFamily family_from_bitmap(int n, FamilyBitmap fb);
FamilyBitmap bitmap_from_family(const FiniteFamily& f);
std::uint64_t family_count(int n);  // 2^(2^n)

}  // namespace clopen

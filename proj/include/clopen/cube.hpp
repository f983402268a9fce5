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

// Points of the powerset-of-powerset cube are families of subsets of a
// ground universe. A basic clopen neighborhood of such a point is a finite
// list of positive constraints (sets that must be members) and negative
// constraints (sets that must not be). Families that are too large to list
// enter as decidable membership predicates.

#pragma once

#include <compare>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "clopen/upset.hpp"

namespace clopen {

enum class UniverseKind { Nat, Finite, Pairs };

struct Universe {
  UniverseKind kind = UniverseKind::Nat;
  int width = 0;  // Finite universes only

  static Universe nat() { return Universe{UniverseKind::Nat, 0}; }
  static Universe finite(int n);
  static Universe pairs() { return Universe{UniverseKind::Pairs, 0}; }

  bool operator==(const Universe&) const = default;
  std::string label() const;
};

// A single potential member of a family: a subset of the naturals, a subset
// of a finite universe as a bitmask, or (in the pairs universe) an ordered
// pair or a plain subset of the first-coordinate carrier.
class GroundSet {
 public:
  enum class Kind { Nat, Fin, Pair, YSub };

  static GroundSet nat(UPSet s);
  static GroundSet finite(int n, std::uint32_t mask);
  static GroundSet finite_elems(int n, const std::vector<int>& elems);
  static GroundSet pair(Nat a, Nat b);
  static GroundSet y_subset(UPSet s);

  Kind kind() const { return kind_; }
  Universe universe() const;

  const UPSet& upset() const;  // Nat or YSub
  int width() const { return width_; }
  std::uint32_t mask() const { return mask_; }
  std::pair<Nat, Nat> pair_value() const { return {a_, b_}; }
  bool is_pair() const { return kind_ == Kind::Pair; }

  bool is_empty_set() const;  // Nat / Fin only
  bool is_full_set() const;

  bool operator==(const GroundSet&) const = default;
  std::strong_ordering operator<=>(const GroundSet& o) const;
  std::size_t hash() const;
  std::string brief() const;

 private:
  GroundSet() = default;
  Kind kind_ = Kind::Nat;
  UPSet set_;
  int width_ = 0;
  std::uint32_t mask_ = 0;
  Nat a_ = 0, b_ = 0;
};

struct GroundSetHash {
  std::size_t operator()(const GroundSet& g) const { return g.hash(); }
};

// Deduplicated family of sets over one universe; member order is the
// insertion order, which keeps witness searches deterministic.
class FiniteFamily {
 public:
  FiniteFamily() : u_(Universe::nat()) {}
  explicit FiniteFamily(Universe u) : u_(std::move(u)) {}
  FiniteFamily(Universe u, std::vector<GroundSet> members);

  const Universe& universe() const { return u_; }
  const std::vector<GroundSet>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(const GroundSet& g) const { return index_.count(g) > 0; }

  // Inserts unless an extensionally equal member exists already.
  void add(GroundSet g);

  bool same_members(const FiniteFamily& o) const;
  FiniteFamily sorted() const;
  std::string brief() const;

 private:
  Universe u_;
  std::vector<GroundSet> members_;
  std::unordered_map<GroundSet, std::size_t, GroundSetHash> index_;
};

// Membership predicate standing in for a (possibly infinite) family.
class FamilyOracle {
 public:
  static FamilyOracle materialized(FiniteFamily f, std::string name = "family");
  static FamilyOracle predicate(Universe u, std::string name,
                                std::function<bool(const GroundSet&)> member,
                                std::function<std::optional<GroundSet>(std::size_t)> enumerate = {});

  // All cofinite subsets together with the empty set.
  static FamilyOracle cofinite_topology();
  // Every subset of the n-element universe.
  static FamilyOracle discrete_topology(int n);
  // The ordered pairs with first coordinate in A and second in B.
  static FamilyOracle pairs_in_product(UPSet A, UPSet B);

  bool member(const GroundSet& g) const;
  const Universe& universe() const { return u_; }
  const std::string& name() const { return name_; }
  bool is_materialized() const { return family_.has_value(); }
  const FiniteFamily* family() const { return family_ ? &*family_ : nullptr; }
  bool can_enumerate() const { return family_.has_value() || static_cast<bool>(enumerate_); }
  // k-th candidate member for search-style operations; nullopt when the
  // oracle cannot enumerate or is exhausted.
  std::optional<GroundSet> enumerate(std::size_t k) const;

 private:
  FamilyOracle() = default;
  Universe u_;
  std::string name_;
  std::optional<FiniteFamily> family_;
  std::function<bool(const GroundSet&)> member_;
  std::function<std::optional<GroundSet>(std::size_t)> enumerate_;
};

// Basic clopen set: finitely many positive and negative membership
// constraints. A set demanded on both sides yields the distinguished
// inconsistent (empty) neighborhood, a value rather than an error so that
// witness generators can return "empty clopen set" meaningfully.
class Neighborhood {
 public:
  static Neighborhood make(Universe u, std::vector<GroundSet> pos, std::vector<GroundSet> neg);

  const Universe& universe() const { return u_; }
  const std::vector<GroundSet>& pos() const { return pos_; }
  const std::vector<GroundSet>& neg() const { return neg_; }
  bool inconsistent() const { return inconsistent_; }
  bool unconstrained() const { return !inconsistent_ && pos_.empty() && neg_.empty(); }
  std::string brief() const;

 private:
  Universe u_;
  std::vector<GroundSet> pos_, neg_;
  bool inconsistent_ = false;
};

// F lies in the neighborhood iff every positive constraint is a member of F
// and no negative constraint is. The inconsistent neighborhood contains
// nothing.
bool nbhd_member(const FamilyOracle& f, const Neighborhood& n);

// Conjunction of constraints; inconsistent when a set ends up on both sides.
Neighborhood nbhd_intersect(const Neighborhood& a, const Neighborhood& b);

}  // namespace clopen

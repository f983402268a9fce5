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

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "clopen/bits.hpp"
#include "clopen/errors.hpp"

namespace clopen {

using Nat = std::uint64_t;

// Exact cardinality: a finite count or infinity.
class Cardinality {
 public:
  static Cardinality finite(Nat k) { return Cardinality(false, k); }
  static Cardinality infinite() { return Cardinality(true, 0); }

  bool is_finite() const { return !infinite_; }
  bool is_infinite() const { return infinite_; }

  Nat count() const {
    if (infinite_) throw PreconditionError("count() on an infinite cardinality");
    return count_;
  }

  bool operator==(const Cardinality&) const = default;

 private:
  Cardinality(bool inf, Nat k) : infinite_(inf), count_(k) {}
  bool infinite_;
  Nat count_;
};

// Ultimately periodic subset of the naturals. Membership below the threshold
// is tabulated bit by bit; from the threshold on it is a union of residue
// classes modulo the period:
//
//   n in S  <=>  (n < T and transient[n]) or (n >= T and residues[n mod p])
//
// Values are kept canonical: the period is minimal, the threshold is minimal
// given the period, so equality of values is field-by-field equality. The
// class is closed under union, intersection and complement, and membership,
// finiteness and enumeration are all decidable.
class UPSet {
 public:
  UPSet();  // the empty set

  static UPSet empty_set() { return UPSet(); }
  static UPSet naturals();
  static UPSet from_elements(const std::vector<Nat>& elems);
  // residues must lie below period, transient below threshold.
  static UPSet from_residues(Nat period, const std::vector<Nat>& residues,
                             Nat threshold = 0, const std::vector<Nat>& transient = {});
  // Low-level constructor from raw tables; canonicalizes.
  static UPSet from_bits(Nat threshold, Bits transient, Nat period, Bits residues);

  bool contains(Nat n) const {
    return n < threshold_ ? transient_.test(n) : residues_.test(n % period_);
  }

  Cardinality classify() const;
  bool is_empty() const { return threshold_ == 0 && residues_.none(); }
  bool is_infinite() const { return !residues_.none(); }

  // k-th smallest element, 0-indexed. Exact per-residue arithmetic.
  Nat nth(Nat k) const;
  // |S intersect [0, limit)|
  Nat count_below(Nat limit) const;

  Nat threshold() const { return threshold_; }
  Nat period() const { return period_; }
  const Bits& transient_bits() const { return transient_; }
  const Bits& residue_bits() const { return residues_; }
  std::vector<Nat> transient_elements() const;
  std::vector<Nat> residues() const;

  bool operator==(const UPSet&) const = default;
  std::strong_ordering operator<=>(const UPSet& o) const;
  std::size_t hash() const;

  // Compact display form, e.g. "{1,2}" or "{T=2 tr={1} p=3 R={0}}".
  std::string brief() const;

 private:
  Nat threshold_;
  Nat period_;
  Bits transient_;  // threshold_ bits
  Bits residues_;   // period_ bits

  void canonicalize();
};

UPSet set_union(const UPSet& a, const UPSet& b);
UPSet set_intersection(const UPSet& a, const UPSet& b);
UPSet set_complement(const UPSet& a);
UPSet set_difference(const UPSet& a, const UPSet& b);
bool is_subset(const UPSet& a, const UPSet& b);

// {a.nth(i) : i = r (mod q)}. For an infinite set the result is again
// ultimately periodic; the q filters with r < q partition the set.
UPSet index_filter(const UPSet& a, Nat q, Nat r);

// Periods grow through least common multiples; operations that would push a
// period beyond this bound raise ResourceError. Default 2^20.
Nat max_period();
void set_max_period(Nat cap);

}  // namespace clopen

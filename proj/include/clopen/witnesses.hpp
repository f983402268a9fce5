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

// Constructive certificates. Separators take a point outside a class of
// families and return a basic clopen neighborhood that contains the point and
// misses the class; density constructions take a neighborhood and build the
// class member living inside it. Negative answers (the point is in the class,
// a search bound ran out, no member exists) are values, not exceptions.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "clopen/families.hpp"
#include "clopen/functions.hpp"

namespace clopen::witnesses {

struct SeparationCertificate {
  std::string class_tag;   // the class the neighborhood avoids
  std::string rationale;   // which construction case fired
  std::string point;       // display form of the separated point
  Neighborhood nbhd;
  std::vector<std::pair<std::string, bool>> checks;

  bool all_checks_pass() const {
    for (const auto& [name, ok] : checks) {
      if (!ok) return false;
    }
    return true;
  }
};

// Families that are not sublattices: pos = the pair whose join (or meet) is
// missing, neg = the missing combination. No sublattice fits.
Outcome<SeparationCertificate> separate_lattice(const FiniteFamily& theta);

// Sublattices-with-bounds: a missing bound alone carries the certificate,
// otherwise the lattice failure does.
Outcome<SeparationCertificate> separate_latb(const FiniteFamily& theta);

enum class Direction { Down, Up };

// Down-sets phi-down and up-sets phi-up are closed: a member of theta
// missing from phi (resp. a member of phi missing from theta) separates.
Outcome<SeparationCertificate> separate_updown(Direction dir, const FamilyOracle& phi,
                                               const FiniteFamily& theta);

// Families containing every cofinite set are closed. Searches for a cofinite
// set absent from tau whose complement lies inside [0, bound); exhausting the
// search is inconclusive, not a membership proof.
Outcome<SeparationCertificate> separate_t1(const FamilyOracle& tau, Nat bound);

enum class MapProperty { Continuous, Open, Closed };

// Topologies making f continuous / open / closed are closed classes; the
// witness is a member set whose preimage (image, closed image) escapes.
Outcome<SeparationCertificate> separate_map(MapProperty kind, const EndoMap& f,
                                            const FiniteFamily& rho);

// Function spaces: a member outside the product, a conflicting pair, or an
// injectivity collision each yield a two-constraint neighborhood. Onto and
// finite-only defects are dense and admit no clopen separation.
Outcome<SeparationCertificate> separate_function(const FiniteFamily& p, const FnSpace& space);

// Almost disjoint families: a small member or a pair with large intersection.
Outcome<SeparationCertificate> separate_ad(const FiniteFamily& p, const Cardinality& lambda);

// The finite topology generated by the positive constraints, provided no
// negative constraint is generated along the way.
Outcome<FiniteFamily> density_topology(const Neighborhood& n);

// The finite restriction of f to exactly the positive constraints.
Outcome<PartialFn> density_finite_fn(const PartialFn& f, const Neighborhood& n);

// An infinite extension of the finite function p inside the neighborhood and
// the space: a constant tail on the domain left over after removing p's
// domain and the negatively constrained first coordinates.
Outcome<PartialFn> extend_infinite_fn(const PartialFn& p, const Neighborhood& n,
                                      const FnSpace& space);

// An onto function inside the neighborhood: the positive pairs plus an
// enumerating tail covering whatever of B they leave uncovered.
Outcome<PartialFn> density_onto(const Neighborhood& n, const UPSet& A, const UPSet& B);

// Bounded sublattice refuting join completeness inside a neighborhood: an
// infinite set S compatible with every constraint, split into infinitely many
// infinite parts of which m are materialized; the lattice generated by the
// positive constraints and the parts contains every positive constraint but
// neither any negative one nor S itself.
struct NontopologyLatticeOutput {
  UPSet S;
  std::vector<UPSet> parts;  // m pairwise disjoint infinite subsets of S
  FiniteFamily lattice;
  UPSet residual;  // S minus the union of the parts
  int branch = 0;  // 1: constraints leave an infinite complement; 2: chain
  bool trimmed_finite_constraints = false;
  std::vector<std::pair<std::string, bool>> checks;
};

Outcome<NontopologyLatticeOutput> nontopology_lattice(const Neighborhood& n, int m,
                                           std::size_t closure_cap = kDefaultClosureCap);

// A set extending the almost disjoint family F, when one exists: any infinite
// subset of the complement of its union works, and for a finite family a
// cofinite union rules every extension out.
Outcome<UPSet> extend_ad(const FiniteFamily& f);

}  // namespace clopen::witnesses

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

#include "clopen/witnesses.hpp"

#include <algorithm>

namespace clopen::witnesses {

namespace {

bool point_in(const FiniteFamily& point, const Neighborhood& nbhd) {
  return nbhd_member(FamilyOracle::materialized(point), nbhd);
}

}  // namespace

Outcome<SeparationCertificate> separate_lattice(const FiniteFamily& theta) {
  ClassReport rep = classify_family(theta);
  if (rep.is_lattice) return fail(FailCode::NotSeparable, "the family is a sublattice");
  const LatticeWitness& w = *rep.lattice_witness;
  SeparationCertificate cert;
  cert.class_tag = "lattices";
  cert.rationale = w.is_union ? "missing join" : "missing meet";
  cert.point = theta.brief();
  cert.nbhd = Neighborhood::make(theta.universe(), {w.a, w.b}, {w.combined});
  cert.checks = {
      {"point in neighborhood", point_in(theta, cert.nbhd)},
      {"witness pair present", theta.contains(w.a) && theta.contains(w.b)},
      {"combination absent", !theta.contains(w.combined)},
  };
  return cert;
}

Outcome<SeparationCertificate> separate_latb(const FiniteFamily& theta) {
  ClassReport rep = classify_family(theta);
  if (rep.is_lattice && rep.is_bounded) {
    return fail(FailCode::NotSeparable, "the family is a bounded sublattice");
  }
  if (!rep.is_bounded) {
    const GroundSet& bound = *rep.missing_bound;
    SeparationCertificate cert;
    cert.class_tag = "bounded lattices";
    cert.rationale = bound.is_empty_set() ? "empty set missing" : "universe missing";
    cert.point = theta.brief();
    cert.nbhd = Neighborhood::make(theta.universe(), {}, {bound});
    cert.checks = {
        {"point in neighborhood", point_in(theta, cert.nbhd)},
        {"bound absent", !theta.contains(bound)},
    };
    return cert;
  }
  Outcome<SeparationCertificate> inner = separate_lattice(theta);
  SeparationCertificate cert = inner.value();
  cert.class_tag = "bounded lattices";
  return cert;
}

Outcome<SeparationCertificate> separate_updown(Direction dir, const FamilyOracle& phi,
                                               const FiniteFamily& theta) {
  if (phi.universe() != theta.universe()) {
    throw ValidationError("oracle and family universes differ");
  }
  SeparationCertificate cert;
  cert.point = theta.brief();
  if (dir == Direction::Down) {
    // theta outside the down-set of phi: some member of theta is not below.
    for (const auto& b : theta.members()) {
      if (!phi.member(b)) {
        cert.class_tag = "down-set of " + phi.name();
        cert.rationale = "member outside the base family";
        cert.nbhd = Neighborhood::make(theta.universe(), {b}, {});
        cert.checks = {
            {"point in neighborhood", point_in(theta, cert.nbhd)},
            {"witness outside base family", !phi.member(b)},
        };
        return cert;
      }
    }
    return fail(FailCode::NotSeparable, "every member lies in the base family");
  }
  // theta outside the up-set of phi: some member of phi is missing from theta.
  if (!phi.can_enumerate()) {
    throw ValidationError("oracle '" + phi.name() + "' cannot enumerate members");
  }
  std::size_t budget = theta.size() + 8;
  for (std::size_t k = 0; k < budget; ++k) {
    auto cand = phi.enumerate(k);
    if (!cand) return fail(FailCode::NotSeparable, "no base member missing from the family");
    if (!theta.contains(*cand)) {
      cert.class_tag = "up-set of " + phi.name();
      cert.rationale = "base member missing";
      cert.nbhd = Neighborhood::make(theta.universe(), {}, {*cand});
      cert.checks = {
          {"point in neighborhood", point_in(theta, cert.nbhd)},
          {"witness in base family", phi.member(*cand)},
      };
      return cert;
    }
  }
  return fail(FailCode::SearchBoundExceeded, "enumeration budget exhausted");
}

Outcome<SeparationCertificate> separate_t1(const FamilyOracle& tau, Nat bound) {
  if (tau.universe() != Universe::nat()) {
    throw ValidationError("the T1 separator works over the naturals");
  }
  if (bound < 1 || bound > 20) throw ValidationError("search bound must be in [1,20]");
  // Complements drawn from [0, bound), in increasing mask order.
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << bound); ++mask) {
    std::vector<Nat> elems;
    for (Nat i = 0; i < bound; ++i) {
      if (mask >> i & 1) elems.push_back(i);
    }
    UPSet a = set_complement(UPSet::from_elements(elems));
    GroundSet g = GroundSet::nat(a);
    if (!tau.member(g)) {
      SeparationCertificate cert;
      cert.class_tag = "T1 topologies";
      cert.rationale = "cofinite set missing";
      cert.point = tau.name();
      cert.nbhd = Neighborhood::make(Universe::nat(), {}, {g});
      cert.checks = {
          {"witness cofinite", set_complement(a).classify().is_finite()},
          {"witness absent from the family", !tau.member(g)},
      };
      return cert;
    }
  }
  return fail(FailCode::SearchBoundExceeded,
              "every cofinite set with complement inside [0," + std::to_string(bound) +
                  ") is a member; inconclusive");
}

Outcome<SeparationCertificate> separate_map(MapProperty kind, const EndoMap& f,
                                            const FiniteFamily& rho) {
  MapCheck mc = map_check(f, rho);  // validates that rho is a topology
  int n = f.n;
  std::uint32_t full = (std::uint32_t{1} << n) - 1;
  SeparationCertificate cert;
  cert.point = rho.brief();
  auto build = [&](std::uint32_t member, std::uint32_t escaped, const char* tag,
                   const char* why) -> Outcome<SeparationCertificate> {
    GroundSet pos = GroundSet::finite(n, member), neg = GroundSet::finite(n, escaped);
    cert.class_tag = tag;
    cert.rationale = why;
    cert.nbhd = Neighborhood::make(Universe::finite(n), {pos}, {neg});
    cert.checks = {
        {"point in neighborhood", point_in(rho, cert.nbhd)},
        {"escaped set absent", !rho.contains(neg)},
    };
    return cert;
  };
  switch (kind) {
    case MapProperty::Continuous:
      if (mc.continuous) return fail(FailCode::NotSeparable, "the map is continuous");
      for (const auto& g : rho.members()) {
        std::uint32_t pre = f.preimage_mask(g.mask());
        if (!rho.contains(GroundSet::finite(n, pre))) {
          return build(g.mask(), pre, "continuity class", "open set with non-open preimage");
        }
      }
      break;
    case MapProperty::Open:
      if (mc.open) return fail(FailCode::NotSeparable, "the map is open");
      for (const auto& g : rho.members()) {
        std::uint32_t img = f.image_mask(g.mask());
        if (!rho.contains(GroundSet::finite(n, img))) {
          return build(g.mask(), img, "openness class", "open set with non-open image");
        }
      }
      break;
    case MapProperty::Closed:
      if (mc.closed) return fail(FailCode::NotSeparable, "the map is closed");
      for (const auto& g : rho.members()) {
        std::uint32_t closed_set = full & ~g.mask();
        std::uint32_t img = f.image_mask(closed_set);
        std::uint32_t co_img = full & ~img;
        if (!rho.contains(GroundSet::finite(n, co_img))) {
          return build(g.mask(), co_img, "closedness class", "closed set with non-closed image");
        }
      }
      break;
  }
  throw PreconditionError("map property report and witness scan disagree");
}

Outcome<SeparationCertificate> separate_function(const FiniteFamily& p, const FnSpace& space) {
  SpaceCheck chk = pairset_in_space(p, space);
  if (chk.ok) return fail(FailCode::NotSeparable, "the point lies in the function space");
  const SpaceViolation& v = *chk.violation;
  SeparationCertificate cert;
  cert.class_tag = std::string("partial functions (") + flavor_name(space.flavor) + ")";
  cert.point = p.brief();
  switch (v.kind) {
    case SpaceViolation::Kind::NonPairMember:
    case SpaceViolation::Kind::OutsideProduct: {
      cert.rationale = v.kind == SpaceViolation::Kind::NonPairMember
                           ? "member is not an ordered pair"
                           : "member outside the product";
      cert.nbhd = Neighborhood::make(Universe::pairs(), {*v.member}, {});
      bool outside = !v.member->is_pair() || !space.A.contains(v.member->pair_value().first) ||
                     !space.B.contains(v.member->pair_value().second);
      cert.checks = {
          {"point in neighborhood", point_in(p, cert.nbhd)},
          {"witness outside the product", outside},
      };
      return cert;
    }
    case SpaceViolation::Kind::Conflict: {
      cert.rationale = "two values at one argument";
      GroundSet g1 = GroundSet::pair(v.a, v.b), g2 = GroundSet::pair(v.a2, v.b2);
      cert.nbhd = Neighborhood::make(Universe::pairs(), {g1, g2}, {});
      cert.checks = {
          {"point in neighborhood", point_in(p, cert.nbhd)},
          {"same argument", v.a == v.a2},
          {"distinct values", v.b != v.b2},
      };
      return cert;
    }
    case SpaceViolation::Kind::NotInjective: {
      cert.rationale = "one value at two arguments";
      GroundSet g1 = GroundSet::pair(v.a, v.b), g2 = GroundSet::pair(v.a2, v.b2);
      cert.nbhd = Neighborhood::make(Universe::pairs(), {g1, g2}, {});
      cert.checks = {
          {"point in neighborhood", point_in(p, cert.nbhd)},
          {"distinct arguments", v.a != v.a2},
          {"same value", v.b == v.b2},
      };
      return cert;
    }
    case SpaceViolation::Kind::NotOnto:
    case SpaceViolation::Kind::NotFinite:
      // These spaces are dense in the space of all partial functions; a
      // point failing only ontoness/finiteness cannot be separated by a
      // basic clopen set.
      return fail(FailCode::DenseClassNotSeparable,
                  v.kind == SpaceViolation::Kind::NotOnto
                      ? "onto functions are dense; the defect is not clopen-separable"
                      : "finite functions are dense; the defect is not clopen-separable");
  }
  throw PreconditionError("unhandled space violation");
}

Outcome<SeparationCertificate> separate_ad(const FiniteFamily& p, const Cardinality& lambda) {
  AdReport rep = is_ad_family(p, lambda);
  if (rep.is_ad) return fail(FailCode::NotSeparable, "the family is almost disjoint");
  const AdViolation& v = *rep.violation;
  SeparationCertificate cert;
  cert.class_tag = "almost disjoint families";
  cert.point = p.brief();
  if (v.kind == AdViolation::Kind::SmallMember) {
    cert.rationale = "finite member";
    cert.nbhd = Neighborhood::make(Universe::nat(), {v.first}, {});
    cert.checks = {
        {"point in neighborhood", point_in(p, cert.nbhd)},
        {"member finite", v.first.upset().classify().is_finite()},
    };
    return cert;
  }
  cert.rationale = "intersection too large";
  cert.nbhd = Neighborhood::make(Universe::nat(), {v.first, *v.second}, {});
  Cardinality isect = set_intersection(v.first.upset(), v.second->upset()).classify();
  bool large = lambda.is_infinite() ? isect.is_infinite()
                                    : (isect.is_infinite() || isect.count() >= lambda.count());
  cert.checks = {
      {"point in neighborhood", point_in(p, cert.nbhd)},
      {"intersection at least lambda", large},
  };
  return cert;
}

Outcome<FiniteFamily> density_topology(const Neighborhood& n) {
  if (n.universe().kind == UniverseKind::Pairs) {
    throw ValidationError("topologies live over a set universe");
  }
  if (n.inconsistent()) {
    return fail(FailCode::NoTopologyInNeighborhood, "the neighborhood is empty");
  }
  FiniteFamily gens(n.universe());
  for (const auto& g : n.pos()) gens.add(g);
  FiniteFamily topo = topology_from_subbase(gens);
  for (const auto& g : n.neg()) {
    if (topo.contains(g)) {
      return fail(FailCode::NoTopologyInNeighborhood,
                  "negative constraint " + g.brief() + " is generated by the positives");
    }
  }
  return topo;
}

Outcome<PartialFn> density_finite_fn(const PartialFn& f, const Neighborhood& n) {
  if (n.universe().kind != UniverseKind::Pairs) {
    throw ValidationError("function neighborhoods live over the pair universe");
  }
  if (!nbhd_member(graph_oracle(f), n)) {
    throw PreconditionError("the function does not lie in the neighborhood");
  }
  std::vector<std::pair<Nat, Nat>> pairs;
  for (const auto& g : n.pos()) pairs.push_back(g.pair_value());
  return PartialFn::make(std::move(pairs));
}

namespace {

void require_pair_constraints(const Neighborhood& n) {
  for (const auto& g : n.pos()) {
    if (!g.is_pair()) throw PreconditionError("constraint " + g.brief() + " is not a pair");
  }
  for (const auto& g : n.neg()) {
    if (!g.is_pair()) throw PreconditionError("constraint " + g.brief() + " is not a pair");
  }
}

}  // namespace

Outcome<PartialFn> extend_infinite_fn(const PartialFn& p, const Neighborhood& n,
                                      const FnSpace& space) {
  if (n.universe().kind != UniverseKind::Pairs) {
    throw ValidationError("function neighborhoods live over the pair universe");
  }
  require_pair_constraints(n);
  if (!space.A.is_infinite()) {
    throw PreconditionError("extension requires an infinite domain side");
  }
  if (p.graph_cardinality().is_infinite()) {
    throw PreconditionError("the function to extend must be finite");
  }
  if (!p.is_function()) throw PreconditionError("the point to extend is not a function");
  if (!nbhd_member(graph_oracle(p), n)) {
    throw PreconditionError("the function does not lie in the neighborhood");
  }
  if (space.B.is_empty()) return fail(FailCode::CannotExtend, "empty value side");

  UPSet tail_domain = space.A;
  {
    std::vector<Nat> removed;
    for (const auto& [a, b] : p.pairs()) removed.push_back(a);
    for (const auto& g : n.neg()) removed.push_back(g.pair_value().first);
    tail_domain = set_difference(tail_domain, UPSet::from_elements(removed));
  }
  if (!tail_domain.is_infinite()) {
    return fail(FailCode::CannotExtend, "no infinite domain remains for the tail");
  }
  PartialFn g = PartialFn::make(p.pairs(), ConstTail{tail_domain, space.B.nth(0)});
  if (!g.graph_cardinality().is_infinite() || !nbhd_member(graph_oracle(g), n)) {
    return fail(FailCode::CannotExtend, "extension fell outside the neighborhood");
  }
  SpaceCheck chk = fn_in_space(g, space);
  if (!chk.ok) {
    return fail(FailCode::CannotExtend, "a constant tail cannot satisfy this space flavor");
  }
  return g;
}

Outcome<PartialFn> density_onto(const Neighborhood& n, const UPSet& A, const UPSet& B) {
  if (n.universe().kind != UniverseKind::Pairs) {
    throw ValidationError("function neighborhoods live over the pair universe");
  }
  require_pair_constraints(n);
  if (!A.is_infinite()) throw ValidationError("the domain side must be infinite");
  if (n.inconsistent()) {
    return fail(FailCode::NoFunctionInNeighborhood, "the neighborhood is empty");
  }
  std::vector<std::pair<Nat, Nat>> pairs;
  for (const auto& g : n.pos()) pairs.push_back(g.pair_value());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      if (pairs[i].first == pairs[j].first && pairs[i].second != pairs[j].second) {
        return fail(FailCode::NoFunctionInNeighborhood, "positive constraints conflict");
      }
    }
  }
  for (const auto& [a, b] : pairs) {
    if (!A.contains(a) || !B.contains(b)) {
      return fail(FailCode::NoFunctionInNeighborhood,
                  "positive constraint outside the product");
    }
  }
  std::vector<Nat> used_firsts, covered;
  for (const auto& [a, b] : pairs) {
    used_firsts.push_back(a);
    covered.push_back(b);
  }
  for (const auto& g : n.neg()) used_firsts.push_back(g.pair_value().first);
  UPSet tail_domain = set_difference(A, UPSet::from_elements(used_firsts));
  UPSet remaining = set_difference(B, UPSet::from_elements(covered));

  Tail tail = std::monostate{};
  if (!remaining.is_empty()) tail = EnumerateTail{tail_domain, remaining};
  PartialFn f = PartialFn::make(std::move(pairs), std::move(tail));
  if (!nbhd_member(graph_oracle(f), n) ||
      !fn_in_space(f, FnSpace::make(A, B, FnSpace::Flavor::Onto)).ok) {
    return fail(FailCode::NoFunctionInNeighborhood, "construction fell outside the neighborhood");
  }
  return f;
}

namespace {

Nat part_modulus(int k) { return Nat{1} << (k + 1); }
Nat part_residue(int k) { return (Nat{1} << k) - 1; }

}  // namespace

Outcome<NontopologyLatticeOutput> nontopology_lattice(const Neighborhood& n, int m,
                                           std::size_t closure_cap) {
  if (n.universe() != Universe::nat()) {
    throw ValidationError("the construction works over the naturals");
  }
  if (m < 1 || m > 16) throw ValidationError("part count must be in [1,16]");

  Outcome<FiniteFamily> base = density_topology(n);
  if (!base.ok()) return base.failure();
  const FiniteFamily& generated = base.value();

  std::vector<UPSet> pos, neg;
  for (const auto& g : n.pos()) pos.push_back(g.upset());
  for (const auto& g : n.neg()) neg.push_back(g.upset());

  NontopologyLatticeOutput out;
  UPSet all = UPSet::empty_set();
  for (const auto& s : pos) all = set_union(all, s);
  for (const auto& s : neg) all = set_union(all, s);
  UPSet comp = set_complement(all);

  if (comp.is_infinite()) {
    out.S = comp;
    out.branch = 1;
  } else {
    // Chain through the infinite constraint sets, positives first, keeping an
    // intersection only while it stays infinite; then drop the elements shared
    // with any constraint only finitely.
    std::vector<UPSet> chain;
    for (const auto& s : pos) {
      if (s.is_infinite()) chain.push_back(s);
    }
    for (const auto& s : neg) {
      if (s.is_infinite()) chain.push_back(s);
    }
    if (chain.empty()) {
      throw PreconditionError("finitely many finite sets cannot cover a cofinite part");
    }
    UPSet c = chain[0];
    for (std::size_t k = 1; k < chain.size(); ++k) {
      UPSet i = set_intersection(c, chain[k]);
      if (i.is_infinite()) c = std::move(i);
    }
    UPSet trimmed = c;
    auto trim_by = [&](const UPSet& s) {
      UPSet i = set_intersection(c, s);
      if (i.classify().is_finite() && !i.is_empty()) {
        trimmed = set_difference(trimmed, i);
        // Finite constraint sets are skipped by the chain; record when they
        // nonetheless shape S through the trimming step.
        if (s.classify().is_finite()) out.trimmed_finite_constraints = true;
      }
    };
    for (const auto& s : pos) trim_by(s);
    for (const auto& s : neg) trim_by(s);
    out.S = trimmed;
    out.branch = 2;
  }

  // If S itself is generated by the positive constraints it would land in the
  // lattice; an infinite half of S inherits every required property, so halve
  // until the collision disappears.
  std::size_t dedup_budget = generated.size() + 2;
  while (generated.contains(GroundSet::nat(out.S))) {
    if (dedup_budget-- == 0) {
      return fail(FailCode::InvariantViolated, "could not move S out of the generated topology");
    }
    out.S = index_filter(out.S, 2, 0);
  }

  out.parts.clear();
  for (int k = 1; k <= m; ++k) {
    out.parts.push_back(index_filter(out.S, part_modulus(k), part_residue(k)));
  }
  UPSet union_parts = UPSet::empty_set();
  for (const auto& p : out.parts) union_parts = set_union(union_parts, p);
  out.residual = set_difference(out.S, union_parts);

  FiniteFamily gens(Universe::nat());
  for (const auto& s : pos) gens.add(GroundSet::nat(s));
  for (const auto& p : out.parts) gens.add(GroundSet::nat(p));
  gens.add(GroundSet::nat(UPSet::empty_set()));
  gens.add(GroundSet::nat(UPSet::naturals()));
  out.lattice = lattice_closure(gens, closure_cap);

  bool s_infinite = out.S.is_infinite();
  bool parts_ok = true;
  for (std::size_t i = 0; i < out.parts.size() && parts_ok; ++i) {
    if (!out.parts[i].is_infinite() || !is_subset(out.parts[i], out.S)) parts_ok = false;
    for (std::size_t j = i + 1; j < out.parts.size() && parts_ok; ++j) {
      if (!set_intersection(out.parts[i], out.parts[j]).is_empty()) parts_ok = false;
    }
  }
  bool partition_ok = set_union(union_parts, out.residual) == out.S;
  bool trace_ok = true;
  for (const auto& s : pos) {
    UPSet i = set_intersection(s, out.S);
    if (!(i.is_empty() || i == out.S)) trace_ok = false;
  }
  for (const auto& s : neg) {
    UPSet i = set_intersection(s, out.S);
    if (!(i.is_empty() || i == out.S)) trace_ok = false;
  }
  bool pos_in = true;
  for (const auto& s : pos) {
    if (!out.lattice.contains(GroundSet::nat(s))) pos_in = false;
  }
  bool neg_out = !out.lattice.contains(GroundSet::nat(out.S));
  for (const auto& s : neg) {
    if (out.lattice.contains(GroundSet::nat(s))) neg_out = false;
  }
  out.checks = {
      {"S infinite", s_infinite},
      {"parts infinite, disjoint, inside S", parts_ok},
      {"parts and residual partition S", partition_ok},
      {"constraint traces on S trivial", trace_ok},
      {"positives inside the lattice", pos_in},
      {"negatives and S outside the lattice", neg_out},
  };
  for (const auto& [name, ok] : out.checks) {
    if (!ok) {
      return fail(FailCode::InvariantViolated, "postcondition failed: " + name);
    }
  }
  return out;
}

Outcome<UPSet> extend_ad(const FiniteFamily& f) {
  AdReport rep = is_ad_family(f, Cardinality::infinite());
  if (!rep.is_ad) throw PreconditionError("the family is not almost disjoint");
  UPSet all = UPSet::empty_set();
  for (const auto& g : f.members()) all = set_union(all, g.upset());
  UPSet comp = set_complement(all);
  if (!comp.is_infinite()) {
    return fail(FailCode::NotExtendable,
                "the union is cofinite; every infinite set meets some member infinitely");
  }
  return comp;
}

}  // namespace clopen::witnesses

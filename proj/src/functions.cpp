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

#include "clopen/functions.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace clopen {

PartialFn PartialFn::make(std::vector<std::pair<Nat, Nat>> pairs, Tail tail) {
  PartialFn f;
  // Exact duplicates collapse; conflicting pairs survive for the checkers.
  for (auto& pr : pairs) {
    if (std::find(f.pairs_.begin(), f.pairs_.end(), pr) == f.pairs_.end()) {
      f.pairs_.push_back(pr);
    }
  }
  const UPSet* dom = nullptr;
  if (auto* c = std::get_if<ConstTail>(&tail)) dom = &c->domain;
  if (auto* e = std::get_if<EnumerateTail>(&tail)) {
    if (e->codomain.is_empty()) throw ValidationError("enumerate tail needs a nonempty codomain");
    dom = &e->domain;
  }
  if (dom) {
    for (const auto& [a, b] : f.pairs_) {
      if (dom->contains(a)) {
        throw ValidationError("tail domain overlaps the finite graph at " + std::to_string(a));
      }
    }
  }
  f.tail_ = std::move(tail);
  return f;
}

std::optional<std::pair<Nat, std::pair<Nat, Nat>>> PartialFn::conflict() const {
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    for (std::size_t j = i + 1; j < pairs_.size(); ++j) {
      if (pairs_[i].first == pairs_[j].first && pairs_[i].second != pairs_[j].second) {
        return std::make_pair(pairs_[i].first,
                              std::make_pair(pairs_[i].second, pairs_[j].second));
      }
    }
  }
  return std::nullopt;
}

bool PartialFn::is_function() const { return !conflict().has_value(); }

Cardinality PartialFn::graph_cardinality() const {
  if (auto* c = std::get_if<ConstTail>(&tail_)) {
    if (c->domain.is_infinite()) return Cardinality::infinite();
    return Cardinality::finite(pairs_.size() + c->domain.classify().count());
  }
  if (auto* e = std::get_if<EnumerateTail>(&tail_)) {
    if (e->domain.is_infinite()) return Cardinality::infinite();
    return Cardinality::finite(pairs_.size() + e->domain.classify().count());
  }
  return Cardinality::finite(pairs_.size());
}

UPSet PartialFn::domain() const {
  std::vector<Nat> firsts;
  for (const auto& [a, b] : pairs_) firsts.push_back(a);
  UPSet d = UPSet::from_elements(firsts);
  if (auto* c = std::get_if<ConstTail>(&tail_)) d = set_union(d, c->domain);
  if (auto* e = std::get_if<EnumerateTail>(&tail_)) d = set_union(d, e->domain);
  return d;
}

UPSet PartialFn::tail_image() const {
  if (auto* c = std::get_if<ConstTail>(&tail_)) {
    if (c->domain.is_empty()) return UPSet::empty_set();
    return UPSet::from_elements({c->value});
  }
  if (auto* e = std::get_if<EnumerateTail>(&tail_)) {
    Cardinality dc = e->domain.classify();
    if (dc.is_infinite()) return e->codomain;  // every index is attained
    Nat s = dc.count();
    Cardinality cc = e->codomain.classify();
    Nat take = cc.is_finite() ? std::min(s, cc.count()) : s;
    std::vector<Nat> vals;
    for (Nat i = 0; i < take; ++i) vals.push_back(e->codomain.nth(i));
    return UPSet::from_elements(vals);
  }
  return UPSet::empty_set();
}

std::optional<Nat> PartialFn::tail_value_at(Nat a) const {
  if (auto* c = std::get_if<ConstTail>(&tail_)) {
    if (c->domain.contains(a)) return c->value;
    return std::nullopt;
  }
  if (auto* e = std::get_if<EnumerateTail>(&tail_)) {
    if (!e->domain.contains(a)) return std::nullopt;
    Nat i = e->domain.count_below(a);
    Cardinality cc = e->codomain.classify();
    return e->codomain.nth(cc.is_finite() ? i % cc.count() : i);
  }
  return std::nullopt;
}

std::string PartialFn::brief() const {
  std::ostringstream os;
  os << "fn{";
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    os << (i ? "," : "") << "<" << pairs_[i].first << "," << pairs_[i].second << ">";
  }
  if (auto* c = std::get_if<ConstTail>(&tail_)) {
    os << (pairs_.empty() ? "" : ",") << "const " << c->domain.brief() << "->" << c->value;
  }
  if (auto* e = std::get_if<EnumerateTail>(&tail_)) {
    os << (pairs_.empty() ? "" : ",") << "enum " << e->domain.brief() << "->" << e->codomain.brief();
  }
  os << "}";
  return os.str();
}

bool fn_contains_pair(const PartialFn& f, Nat a, Nat b) {
  for (const auto& [x, y] : f.pairs()) {
    if (x == a && y == b) return true;
  }
  auto tv = f.tail_value_at(a);
  return tv && *tv == b;
}

FamilyOracle graph_oracle(const PartialFn& f) {
  return FamilyOracle::predicate(Universe::pairs(), "graph(" + f.brief() + ")",
                                 [f](const GroundSet& g) {
                                   if (!g.is_pair()) return false;
                                   auto [a, b] = g.pair_value();
                                   return fn_contains_pair(f, a, b);
                                 });
}

FnSpace FnSpace::make(UPSet A, UPSet B, Flavor flavor) {
  if (flavor == Flavor::Onto) {
    Cardinality ca = A.classify(), cb = B.classify();
    bool ok = ca.is_infinite() || (cb.is_finite() && ca.count() >= cb.count());
    if (!ok) throw ValidationError("onto function space requires |A| >= |B|");
  }
  return FnSpace{std::move(A), std::move(B), flavor};
}

const char* flavor_name(FnSpace::Flavor f) {
  switch (f) {
    case FnSpace::Flavor::All: return "all";
    case FnSpace::Flavor::Injective: return "injective";
    case FnSpace::Flavor::Onto: return "onto";
    case FnSpace::Flavor::FiniteOnly: return "finite";
  }
  return "?";
}

namespace {

SpaceCheck bad(SpaceViolation v) { return SpaceCheck{false, std::move(v)}; }

// Injectivity of the tail rule itself plus collisions with the finite part.
std::optional<SpaceViolation> injectivity_violation(const PartialFn& f) {
  const auto& ps = f.pairs();
  for (std::size_t i = 0; i < ps.size(); ++i) {
    for (std::size_t j = i + 1; j < ps.size(); ++j) {
      if (ps[i].second == ps[j].second && ps[i].first != ps[j].first) {
        return SpaceViolation{SpaceViolation::Kind::NotInjective, ps[i].first, ps[i].second,
                              ps[j].first, ps[j].second, std::nullopt};
      }
    }
  }
  if (auto* c = std::get_if<ConstTail>(&f.tail())) {
    Cardinality dc = c->domain.classify();
    bool two = dc.is_infinite() || dc.count() >= 2;
    if (two) {
      Nat a0 = c->domain.nth(0), a1 = c->domain.nth(1);
      return SpaceViolation{SpaceViolation::Kind::NotInjective, a0, c->value, a1, c->value, std::nullopt};
    }
    if (!c->domain.is_empty()) {
      Nat a0 = c->domain.nth(0);
      for (const auto& [a, b] : ps) {
        if (b == c->value) {
          return SpaceViolation{SpaceViolation::Kind::NotInjective, a, b, a0, c->value, std::nullopt};
        }
      }
    }
  }
  if (auto* e = std::get_if<EnumerateTail>(&f.tail())) {
    Cardinality dc = e->domain.classify();
    Cardinality cc = e->codomain.classify();
    Nat dsize = dc.is_finite() ? dc.count() : 0;
    if (cc.is_finite()) {
      bool wraps = dc.is_infinite() || dsize > cc.count();
      if (wraps) {
        Nat a0 = e->domain.nth(0), a1 = e->domain.nth(cc.count());
        return SpaceViolation{SpaceViolation::Kind::NotInjective, a0, e->codomain.nth(0), a1,
                              e->codomain.nth(0), std::nullopt};
      }
    }
    for (const auto& [a, b] : ps) {
      if (!e->codomain.contains(b)) continue;
      Nat j = e->codomain.count_below(b);  // index of b in the codomain
      // Is index j (mod |codomain| when finite) attained by the domain?
      std::optional<Nat> hit;
      if (dc.is_infinite()) {
        hit = e->domain.nth(j);
      } else if (cc.is_finite()) {
        if (j < dsize) hit = e->domain.nth(j);  // smallest index with value b
      } else if (j < dsize) {
        hit = e->domain.nth(j);
      }
      if (hit) {
        return SpaceViolation{SpaceViolation::Kind::NotInjective, a, b, *hit, b, std::nullopt};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

SpaceCheck fn_in_space(const PartialFn& f, const FnSpace& space) {
  if (auto c = f.conflict()) {
    auto [a, bs] = *c;
    return bad({SpaceViolation::Kind::Conflict, a, bs.first, a, bs.second, std::nullopt});
  }
  for (const auto& [a, b] : f.pairs()) {
    if (!space.A.contains(a) || !space.B.contains(b)) {
      return bad({SpaceViolation::Kind::OutsideProduct, a, b, 0, 0,
                  GroundSet::pair(a, b)});
    }
  }
  if (auto* c = std::get_if<ConstTail>(&f.tail())) {
    if (!is_subset(c->domain, space.A)) {
      Nat a = set_difference(c->domain, space.A).nth(0);
      return bad({SpaceViolation::Kind::OutsideProduct, a, c->value, 0, 0,
                  GroundSet::pair(a, c->value)});
    }
    if (!c->domain.is_empty() && !space.B.contains(c->value)) {
      return bad({SpaceViolation::Kind::OutsideProduct, c->domain.nth(0), c->value, 0, 0,
                  GroundSet::pair(c->domain.nth(0), c->value)});
    }
  }
  if (auto* e = std::get_if<EnumerateTail>(&f.tail())) {
    if (!is_subset(e->domain, space.A)) {
      Nat a = set_difference(e->domain, space.A).nth(0);
      return bad({SpaceViolation::Kind::OutsideProduct, a, *f.tail_value_at(a), 0, 0,
                  GroundSet::pair(a, *f.tail_value_at(a))});
    }
    UPSet extra = set_difference(f.tail_image(), space.B);
    if (!extra.is_empty()) {
      Nat b = extra.nth(0);
      return bad({SpaceViolation::Kind::OutsideProduct, 0, b, 0, 0, std::nullopt});
    }
  }
  switch (space.flavor) {
    case FnSpace::Flavor::All:
      break;
    case FnSpace::Flavor::Injective:
      if (auto v = injectivity_violation(f)) return bad(std::move(*v));
      break;
    case FnSpace::Flavor::Onto: {
      std::vector<Nat> hit;
      for (const auto& [a, b] : f.pairs()) hit.push_back(b);
      UPSet image = set_union(UPSet::from_elements(hit), f.tail_image());
      UPSet missing = set_difference(space.B, image);
      if (!missing.is_empty()) {
        return bad({SpaceViolation::Kind::NotOnto, 0, missing.nth(0), 0, 0, std::nullopt});
      }
      break;
    }
    case FnSpace::Flavor::FiniteOnly:
      if (f.graph_cardinality().is_infinite()) {
        return bad({SpaceViolation::Kind::NotFinite, 0, 0, 0, 0, std::nullopt});
      }
      break;
  }
  return SpaceCheck{true, std::nullopt};
}

SpaceCheck pairset_in_space(const FiniteFamily& p, const FnSpace& space) {
  if (p.universe().kind != UniverseKind::Pairs) {
    throw ValidationError("pair-set check requires the pair universe");
  }
  std::vector<std::pair<Nat, Nat>> pairs;
  for (const auto& m : p.members()) {
    if (!m.is_pair()) {
      return bad({SpaceViolation::Kind::NonPairMember, 0, 0, 0, 0, m});
    }
    auto [a, b] = m.pair_value();
    if (!space.A.contains(a) || !space.B.contains(b)) {
      return bad({SpaceViolation::Kind::OutsideProduct, a, b, 0, 0, m});
    }
    pairs.emplace_back(a, b);
  }
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      if (pairs[i].first == pairs[j].first && pairs[i].second != pairs[j].second) {
        return bad({SpaceViolation::Kind::Conflict, pairs[i].first, pairs[i].second,
                    pairs[j].first, pairs[j].second, std::nullopt});
      }
    }
  }
  if (space.flavor == FnSpace::Flavor::Injective) {
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      for (std::size_t j = i + 1; j < pairs.size(); ++j) {
        if (pairs[i].second == pairs[j].second && pairs[i].first != pairs[j].first) {
          return bad({SpaceViolation::Kind::NotInjective, pairs[i].first, pairs[i].second,
                      pairs[j].first, pairs[j].second, std::nullopt});
        }
      }
    }
  }
  if (space.flavor == FnSpace::Flavor::Onto) {
    std::vector<Nat> hit;
    for (const auto& [a, b] : pairs) hit.push_back(b);
    UPSet missing = set_difference(space.B, UPSet::from_elements(hit));
    if (!missing.is_empty()) {
      return bad({SpaceViolation::Kind::NotOnto, 0, missing.nth(0), 0, 0, std::nullopt});
    }
  }
  return SpaceCheck{true, std::nullopt};
}

UPSet encode_kuratowski(Nat a, Nat b, int y_size) {
  if (y_size < 1 || y_size > 8) throw ValidationError("carrier size must be in [1,8]");
  Nat n = static_cast<Nat>(y_size);
  if (a >= n || b >= n) throw ValidationError("pair coordinates must lie in the carrier");
  Nat single = n + (Nat{1} << a);
  Nat both = n + ((Nat{1} << a) | (Nat{1} << b));
  if (a == b) return UPSet::from_elements({single});
  return UPSet::from_elements({single, both});
}

std::pair<Nat, Nat> decode_kuratowski(const UPSet& s, int y_size) {
  Nat n = static_cast<Nat>(y_size);
  Cardinality c = s.classify();
  if (c.is_infinite() || c.count() < 1 || c.count() > 2) {
    throw ValidationError("not a pair encoding");
  }
  auto mask_of = [&](Nat idx) {
    if (idx < n || idx >= n + (Nat{1} << y_size)) throw ValidationError("index outside P(Y)");
    return idx - n;
  };
  Nat m1 = mask_of(s.nth(0));
  if (c.count() == 1) {
    if (std::popcount(m1) != 1) throw ValidationError("not a pair encoding");
    Nat a = static_cast<Nat>(std::countr_zero(m1));
    return {a, a};
  }
  Nat m2 = mask_of(s.nth(1));
  if (std::popcount(m2) < std::popcount(m1)) std::swap(m1, m2);
  if (std::popcount(m1) != 1 || std::popcount(m2) != 2 || (m1 & m2) != m1) {
    throw ValidationError("not a pair encoding");
  }
  Nat a = static_cast<Nat>(std::countr_zero(m1));
  Nat b = static_cast<Nat>(std::countr_zero(m2 & ~m1));
  return {a, b};
}

}  // namespace clopen

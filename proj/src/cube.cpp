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

#include "clopen/cube.hpp"

#include <algorithm>
#include <sstream>

namespace clopen {

Universe Universe::finite(int n) {
  if (n < 1 || n > 16) throw ValidationError("finite universe size must be in [1,16]");
  return Universe{UniverseKind::Finite, n};
}

std::string Universe::label() const {
  switch (kind) {
    case UniverseKind::Nat: return "nat";
    case UniverseKind::Finite: return "finite(" + std::to_string(width) + ")";
    case UniverseKind::Pairs: return "pairs";
  }
  return "?";
}

GroundSet GroundSet::nat(UPSet s) {
  GroundSet g;
  g.kind_ = Kind::Nat;
  g.set_ = std::move(s);
  return g;
}

GroundSet GroundSet::finite(int n, std::uint32_t mask) {
  Universe::finite(n);  // validate width
  if (n < 32 && (mask >> n) != 0) throw ValidationError("mask has bits outside the universe");
  GroundSet g;
  g.kind_ = Kind::Fin;
  g.width_ = n;
  g.mask_ = mask;
  return g;
}

GroundSet GroundSet::finite_elems(int n, const std::vector<int>& elems) {
  std::uint32_t mask = 0;
  for (int e : elems) {
    if (e < 0 || e >= n) throw ValidationError("element " + std::to_string(e) + " outside universe");
    mask |= std::uint32_t{1} << e;
  }
  return finite(n, mask);
}

GroundSet GroundSet::pair(Nat a, Nat b) {
  GroundSet g;
  g.kind_ = Kind::Pair;
  g.a_ = a;
  g.b_ = b;
  return g;
}

GroundSet GroundSet::y_subset(UPSet s) {
  GroundSet g;
  g.kind_ = Kind::YSub;
  g.set_ = std::move(s);
  return g;
}

Universe GroundSet::universe() const {
  switch (kind_) {
    case Kind::Nat: return Universe::nat();
    case Kind::Fin: return Universe::finite(width_);
    default: return Universe::pairs();
  }
}

const UPSet& GroundSet::upset() const {
  if (kind_ != Kind::Nat && kind_ != Kind::YSub) {
    throw ValidationError("ground set is not backed by a subset of the naturals");
  }
  return set_;
}

bool GroundSet::is_empty_set() const {
  if (kind_ == Kind::Nat) return set_.is_empty();
  if (kind_ == Kind::Fin) return mask_ == 0;
  throw ValidationError("emptiness of a pair-universe member is not defined");
}

bool GroundSet::is_full_set() const {
  if (kind_ == Kind::Nat) return set_ == UPSet::naturals();
  if (kind_ == Kind::Fin) return mask_ == ((std::uint32_t{1} << width_) - 1);
  throw ValidationError("fullness of a pair-universe member is not defined");
}

std::strong_ordering GroundSet::operator<=>(const GroundSet& o) const {
  if (auto c = kind_ <=> o.kind_; c != 0) return c;
  switch (kind_) {
    case Kind::Nat:
    case Kind::YSub:
      return set_ <=> o.set_;
    case Kind::Fin:
      if (auto c = width_ <=> o.width_; c != 0) return c;
      return mask_ <=> o.mask_;
    case Kind::Pair:
      if (auto c = a_ <=> o.a_; c != 0) return c;
      return b_ <=> o.b_;
  }
  return std::strong_ordering::equal;
}

std::size_t GroundSet::hash() const {
  std::size_t h = static_cast<std::size_t>(kind_) * 0x9e3779b97f4a7c15ull;
  switch (kind_) {
    case Kind::Nat:
    case Kind::YSub:
      h ^= set_.hash();
      break;
    case Kind::Fin:
      h ^= (static_cast<std::size_t>(width_) << 32) ^ mask_;
      break;
    case Kind::Pair:
      h ^= a_ * 0x100000001b3ull + b_;
      break;
  }
  return h;
}

std::string GroundSet::brief() const {
  switch (kind_) {
    case Kind::Nat:
      return set_.brief();
    case Kind::YSub:
      return "yset" + set_.brief();
    case Kind::Pair:
      return "<" + std::to_string(a_) + "," + std::to_string(b_) + ">";
    case Kind::Fin: {
      std::ostringstream os;
      os << "{";
      bool first = true;
      for (int i = 0; i < width_; ++i) {
        if (mask_ >> i & 1) {
          if (!first) os << ",";
          os << i;
          first = false;
        }
      }
      os << "}";
      return os.str();
    }
  }
  return "?";
}

FiniteFamily::FiniteFamily(Universe u, std::vector<GroundSet> members) : u_(std::move(u)) {
  for (auto& m : members) add(std::move(m));
}

void FiniteFamily::add(GroundSet g) {
  if (g.universe() != u_) {
    throw ValidationError("member universe " + g.universe().label() +
                          " does not match family universe " + u_.label());
  }
  if (index_.count(g)) return;
  index_.emplace(g, members_.size());
  members_.push_back(std::move(g));
}

bool FiniteFamily::same_members(const FiniteFamily& o) const {
  if (u_ != o.u_ || members_.size() != o.members_.size()) return false;
  for (const auto& m : members_) {
    if (!o.contains(m)) return false;
  }
  return true;
}

FiniteFamily FiniteFamily::sorted() const {
  auto ms = members_;
  std::sort(ms.begin(), ms.end());
  return FiniteFamily(u_, std::move(ms));
}

std::string FiniteFamily::brief() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& m : members_) {
    if (!first) os << ", ";
    os << m.brief();
    first = false;
  }
  os << "}";
  return os.str();
}

FamilyOracle FamilyOracle::materialized(FiniteFamily f, std::string name) {
  FamilyOracle o;
  o.u_ = f.universe();
  o.name_ = std::move(name);
  o.family_ = std::move(f);
  return o;
}

FamilyOracle FamilyOracle::predicate(Universe u, std::string name,
                                     std::function<bool(const GroundSet&)> member,
                                     std::function<std::optional<GroundSet>(std::size_t)> enumerate) {
  FamilyOracle o;
  o.u_ = std::move(u);
  o.name_ = std::move(name);
  o.member_ = std::move(member);
  o.enumerate_ = std::move(enumerate);
  return o;
}

FamilyOracle FamilyOracle::cofinite_topology() {
  return predicate(
      Universe::nat(), "cofinite-topology",
      [](const GroundSet& g) {
        const UPSet& s = g.upset();
        return s.is_empty() || set_complement(s).classify().is_finite();
      },
      [](std::size_t k) -> std::optional<GroundSet> {
        // naturals, then the naturals minus one point each.
        if (k == 0) return GroundSet::nat(UPSet::naturals());
        return GroundSet::nat(set_complement(UPSet::from_elements({k - 1})));
      });
}

FamilyOracle FamilyOracle::discrete_topology(int n) {
  Universe u = Universe::finite(n);
  return predicate(
      u, "discrete(" + std::to_string(n) + ")", [](const GroundSet&) { return true; },
      [n](std::size_t k) -> std::optional<GroundSet> {
        if (k >= (std::size_t{1} << n)) return std::nullopt;
        return GroundSet::finite(n, static_cast<std::uint32_t>(k));
      });
}

FamilyOracle FamilyOracle::pairs_in_product(UPSet A, UPSet B) {
  return predicate(Universe::pairs(), "pairs-in-product",
                   [A = std::move(A), B = std::move(B)](const GroundSet& g) {
                     if (!g.is_pair()) return false;
                     auto [a, b] = g.pair_value();
                     return A.contains(a) && B.contains(b);
                   });
}

bool FamilyOracle::member(const GroundSet& g) const {
  if (g.universe() != u_) {
    throw ValidationError("membership query universe " + g.universe().label() +
                          " does not match oracle universe " + u_.label());
  }
  if (family_) return family_->contains(g);
  return member_(g);
}

std::optional<GroundSet> FamilyOracle::enumerate(std::size_t k) const {
  if (family_) {
    if (k >= family_->size()) return std::nullopt;
    return family_->members()[k];
  }
  if (enumerate_) return enumerate_(k);
  return std::nullopt;
}

Neighborhood Neighborhood::make(Universe u, std::vector<GroundSet> pos, std::vector<GroundSet> neg) {
  Neighborhood n;
  n.u_ = std::move(u);
  FiniteFamily pf(n.u_), nf(n.u_);
  for (auto& g : pos) pf.add(std::move(g));
  for (auto& g : neg) nf.add(std::move(g));
  for (const auto& g : nf.members()) {
    if (pf.contains(g)) n.inconsistent_ = true;
  }
  n.pos_ = pf.members();
  n.neg_ = nf.members();
  return n;
}

std::string Neighborhood::brief() const {
  std::ostringstream os;
  if (inconsistent_) os << "inconsistent ";
  os << "pos=[";
  for (std::size_t i = 0; i < pos_.size(); ++i) os << (i ? ", " : "") << pos_[i].brief();
  os << "] neg=[";
  for (std::size_t i = 0; i < neg_.size(); ++i) os << (i ? ", " : "") << neg_[i].brief();
  os << "]";
  return os.str();
}

bool nbhd_member(const FamilyOracle& f, const Neighborhood& n) {
  if (f.universe() != n.universe()) {
    throw ValidationError("family universe " + f.universe().label() +
                          " does not match neighborhood universe " + n.universe().label());
  }
  if (n.inconsistent()) return false;
  for (const auto& g : n.pos()) {
    if (!f.member(g)) return false;
  }
  for (const auto& g : n.neg()) {
    if (f.member(g)) return false;
  }
  return true;
}

Neighborhood nbhd_intersect(const Neighborhood& a, const Neighborhood& b) {
  if (a.universe() != b.universe()) {
    throw ValidationError("neighborhood universes differ");
  }
  // Inconsistent inputs keep their conflicting constraint on both sides, so
  // the conflict is rediscovered after concatenation.
  std::vector<GroundSet> pos = a.pos(), neg = a.neg();
  pos.insert(pos.end(), b.pos().begin(), b.pos().end());
  neg.insert(neg.end(), b.neg().begin(), b.neg().end());
  return Neighborhood::make(a.universe(), std::move(pos), std::move(neg));
}

}  // namespace clopen

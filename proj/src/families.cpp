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

#include "clopen/families.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace clopen {

namespace {

constexpr std::size_t kClosureMemoryBudget = std::size_t{256} << 20;  // bytes of grid bitsets

GroundSet empty_of(const Universe& u) {
  if (u.kind == UniverseKind::Nat) return GroundSet::nat(UPSet::empty_set());
  return GroundSet::finite(u.width, 0);
}

GroundSet full_of(const Universe& u) {
  if (u.kind == UniverseKind::Nat) return GroundSet::nat(UPSet::naturals());
  return GroundSet::finite(u.width, (std::uint32_t{1} << u.width) - 1);
}

GroundSet join_of(const Universe& u, const GroundSet& a, const GroundSet& b) {
  if (u.kind == UniverseKind::Nat) return GroundSet::nat(set_union(a.upset(), b.upset()));
  return GroundSet::finite(u.width, a.mask() | b.mask());
}

GroundSet meet_of(const Universe& u, const GroundSet& a, const GroundSet& b) {
  if (u.kind == UniverseKind::Nat) return GroundSet::nat(set_intersection(a.upset(), b.upset()));
  return GroundSet::finite(u.width, a.mask() & b.mask());
}

void require_set_universe(const FiniteFamily& f, const char* what) {
  if (f.universe().kind == UniverseKind::Pairs) {
    throw ValidationError(std::string(what) + " is not defined over the pair universe");
  }
}

// Closure over a finite universe: masks all the way down.
FiniteFamily closure_finite(const FiniteFamily& gens, std::size_t cap) {
  int n = gens.universe().width;
  std::vector<std::uint32_t> meets;
  std::unordered_set<std::uint32_t> seen;
  for (const auto& g : gens.members()) {
    std::uint32_t gm = g.mask();
    std::size_t before = meets.size();
    if (seen.insert(gm).second) meets.push_back(gm);
    for (std::size_t i = 0; i < before; ++i) {
      std::uint32_t m = meets[i] & gm;
      if (seen.insert(m).second) meets.push_back(m);
    }
    if (meets.size() > cap) throw ResourceError("lattice closure exceeds the size cap");
  }
  std::vector<std::uint32_t> closed = meets;
  std::unordered_set<std::uint32_t> cseen(meets.begin(), meets.end());
  for (std::size_t i = 0; i < closed.size(); ++i) {
    for (std::uint32_t m : meets) {
      std::uint32_t u = closed[i] | m;
      if (cseen.insert(u).second) {
        closed.push_back(u);
        if (closed.size() > cap) throw ResourceError("lattice closure exceeds the size cap");
      }
    }
  }
  std::sort(closed.begin(), closed.end());
  FiniteFamily out(gens.universe());
  for (std::uint32_t m : closed) out.add(GroundSet::finite(n, m));
  return out;
}

// Interning table over raw grid bitsets.
struct BitsIntern {
  std::vector<Bits> items;
  std::unordered_map<std::size_t, std::vector<std::uint32_t>> buckets;

  std::pair<std::uint32_t, bool> intern(Bits b) {
    std::size_t h = b.hash();
    auto& bucket = buckets[h];
    for (auto idx : bucket) {
      if (items[idx] == b) return {idx, false};
    }
    items.push_back(std::move(b));
    bucket.push_back(static_cast<std::uint32_t>(items.size() - 1));
    return {static_cast<std::uint32_t>(items.size() - 1), true};
  }
};

// Closure over the naturals. All generators are aligned once onto a common
// grid (threshold = max threshold, period = lcm of periods); union and
// intersection are then word-wise operations with no re-canonicalization
// until the final decode.
FiniteFamily closure_symbolic(const FiniteFamily& gens, std::size_t cap) {
  Nat t = 0, p = 1;
  for (const auto& g : gens.members()) {
    const UPSet& s = g.upset();
    t = std::max(t, s.threshold());
    Nat np = p / std::gcd(p, s.period()) * s.period();
    if (np > max_period()) throw ResourceError("closure grid period exceeds the period cap");
    p = np;
  }
  std::size_t grid_bits = static_cast<std::size_t>(t + p);
  std::size_t elem_cap = std::min(cap, kClosureMemoryBudget / std::max<std::size_t>(grid_bits / 8, 1));
  if (elem_cap < gens.size()) throw ResourceError("closure grid does not fit the memory budget");

  auto encode = [&](const UPSet& s) {
    Bits b(grid_bits);
    for (Nat n = 0; n < t; ++n) b.set(n, s.contains(n));
    for (Nat j = 0; j < p; ++j) {
      Nat n0 = t + ((j + p - t % p) % p);  // least n >= t with n = j (mod p)
      b.set(t + j, s.contains(n0));
    }
    return b;
  };
  auto decode = [&](const Bits& b) {
    Bits tr(t), res(p);
    for (Nat n = 0; n < t; ++n) tr.set(n, b.test(n));
    for (Nat j = 0; j < p; ++j) res.set(j, b.test(t + j));
    return UPSet::from_bits(t, std::move(tr), p, std::move(res));
  };

  BitsIntern meets;
  for (const auto& g : gens.members()) {
    Bits gb = encode(g.upset());
    std::size_t before = meets.items.size();
    meets.intern(gb);
    for (std::size_t i = 0; i < before; ++i) {
      meets.intern(meets.items[i] & gb);
      if (meets.items.size() > elem_cap) throw ResourceError("lattice closure exceeds the size cap");
    }
  }
  BitsIntern closed;
  for (const auto& b : meets.items) closed.intern(b);
  for (std::size_t i = 0; i < closed.items.size(); ++i) {
    for (std::size_t j = 0; j < meets.items.size(); ++j) {
      auto [idx, fresh] = closed.intern(closed.items[i] | meets.items[j]);
      if (fresh && closed.items.size() > elem_cap) {
        throw ResourceError("lattice closure exceeds the size cap");
      }
    }
  }
  std::vector<UPSet> sets;
  sets.reserve(closed.items.size());
  for (const auto& b : closed.items) sets.push_back(decode(b));
  std::sort(sets.begin(), sets.end());
  FiniteFamily out(Universe::nat());
  for (auto& s : sets) out.add(GroundSet::nat(std::move(s)));
  return out;
}

}  // namespace

FiniteFamily lattice_closure(const FiniteFamily& generators, std::size_t cap) {
  require_set_universe(generators, "lattice closure");
  if (generators.universe().kind == UniverseKind::Finite) return closure_finite(generators, cap);
  return closure_symbolic(generators, cap);
}

FiniteFamily topology_from_subbase(const FiniteFamily& generators, std::size_t cap) {
  FiniteFamily cl = lattice_closure(generators, cap);
  FiniteFamily out(cl.universe());
  out.add(empty_of(cl.universe()));
  for (const auto& m : cl.members()) out.add(m);
  out.add(full_of(cl.universe()));
  return out.sorted();
}

ClassReport classify_family(const FiniteFamily& f) {
  require_set_universe(f, "classification");
  const Universe& u = f.universe();
  ClassReport rep;

  rep.is_lattice = true;
  const auto& ms = f.members();
  for (std::size_t i = 0; i < ms.size() && rep.is_lattice; ++i) {
    for (std::size_t j = i + 1; j < ms.size() && rep.is_lattice; ++j) {
      GroundSet un = join_of(u, ms[i], ms[j]);
      if (!f.contains(un)) {
        rep.is_lattice = false;
        rep.lattice_witness = LatticeWitness{ms[i], ms[j], un, true};
      }
    }
  }
  for (std::size_t i = 0; i < ms.size() && rep.is_lattice; ++i) {
    for (std::size_t j = i + 1; j < ms.size() && rep.is_lattice; ++j) {
      GroundSet in = meet_of(u, ms[i], ms[j]);
      if (!f.contains(in)) {
        rep.is_lattice = false;
        rep.lattice_witness = LatticeWitness{ms[i], ms[j], in, false};
      }
    }
  }

  GroundSet full = full_of(u), empty = empty_of(u);
  if (!f.contains(full)) {
    rep.missing_bound = full;
  } else if (!f.contains(empty)) {
    rep.missing_bound = empty;
  }
  rep.is_bounded = !rep.missing_bound.has_value();

  // Finite families are automatically join complete.
  rep.is_topology = rep.is_lattice && rep.is_bounded;

  if (u.kind == UniverseKind::Finite) {
    // Every subset of a finite universe is cofinite, so containing all
    // cofinite sets means containing everything.
    rep.is_t1 = f.size() == (std::size_t{1} << u.width);
  }
  return rep;
}

AdReport is_ad_family(const FiniteFamily& f, const Cardinality& lambda) {
  if (f.universe().kind != UniverseKind::Nat) {
    throw ValidationError("almost disjointness is defined over the naturals");
  }
  const auto& ms = f.members();
  for (const auto& m : ms) {
    if (!m.upset().is_infinite()) {
      return AdReport{false, AdViolation{AdViolation::Kind::SmallMember, m, std::nullopt}};
    }
  }
  for (std::size_t i = 0; i < ms.size(); ++i) {
    for (std::size_t j = i + 1; j < ms.size(); ++j) {
      Cardinality c = set_intersection(ms[i].upset(), ms[j].upset()).classify();
      bool bad = lambda.is_infinite() ? c.is_infinite()
                                      : (c.is_infinite() || c.count() >= lambda.count());
      if (bad) {
        return AdReport{false, AdViolation{AdViolation::Kind::LargeIntersection, ms[i], ms[j]}};
      }
    }
  }
  return AdReport{true, std::nullopt};
}

EndoMap EndoMap::make(int n, std::vector<int> images) {
  if (n < 1 || n > 16) throw ValidationError("map universe size must be in [1,16]");
  if (images.size() != static_cast<std::size_t>(n)) {
    throw ValidationError("map image list must have one entry per point");
  }
  for (int v : images) {
    if (v < 0 || v >= n) throw ValidationError("map image outside the universe");
  }
  return EndoMap{n, std::move(images)};
}

std::uint32_t EndoMap::image_mask(std::uint32_t m) const {
  std::uint32_t out = 0;
  for (int x = 0; x < n; ++x) {
    if (m >> x & 1) out |= std::uint32_t{1} << images[static_cast<std::size_t>(x)];
  }
  return out;
}

std::uint32_t EndoMap::preimage_mask(std::uint32_t m) const {
  std::uint32_t out = 0;
  for (int x = 0; x < n; ++x) {
    if (m >> images[static_cast<std::size_t>(x)] & 1) out |= std::uint32_t{1} << x;
  }
  return out;
}

namespace {

void require_topology(const FiniteFamily& f, int n, const char* what) {
  if (f.universe().kind != UniverseKind::Finite || f.universe().width != n) {
    throw PreconditionError(std::string(what) + " requires a family over the map's universe");
  }
  if (!classify_family(f).is_topology) {
    throw PreconditionError(std::string(what) + " requires a topology");
  }
}

}  // namespace

FiniteFamily tau_f(const FiniteFamily& sigma, const EndoMap& f) {
  require_topology(sigma, f.n, "tau_f");
  int n = f.n;
  std::uint32_t full = (std::uint32_t{1} << n) - 1;
  std::vector<GroundSet> out;
  for (std::uint32_t m = 0; m <= full; ++m) {
    if (sigma.contains(GroundSet::finite(n, f.preimage_mask(m)))) {
      out.push_back(GroundSet::finite(n, m));
    }
  }
  out.push_back(GroundSet::finite(n, full));
  return FiniteFamily(Universe::finite(n), std::move(out)).sorted();
}

MapCheck map_check(const EndoMap& f, const FiniteFamily& rho) {
  require_topology(rho, f.n, "map_check");
  int n = f.n;
  std::uint32_t full = (std::uint32_t{1} << n) - 1;
  MapCheck out{true, true, true};
  for (const auto& g : rho.members()) {
    std::uint32_t m = g.mask();
    if (!rho.contains(GroundSet::finite(n, f.preimage_mask(m)))) out.continuous = false;
    if (!rho.contains(GroundSet::finite(n, f.image_mask(m)))) out.open = false;
    std::uint32_t closed_set = full & ~m;
    std::uint32_t image = f.image_mask(closed_set);
    if (!rho.contains(GroundSet::finite(n, full & ~image))) out.closed = false;
  }
  return out;
}

std::uint64_t family_count(int n) {
  if (n < 1 || n > 4) throw ResourceError("exhaustive enumeration is limited to n in [1,4]");
  return std::uint64_t{1} << (1 << n);
}

bool bitmap_is_lattice(int n, FamilyBitmap fb) {
  int subsets = 1 << n;
  for (int i = 0; i < subsets; ++i) {
    if (!(fb >> i & 1)) continue;
    for (int j = i + 1; j < subsets; ++j) {
      if (!(fb >> j & 1)) continue;
      if (!(fb >> (i | j) & 1) || !(fb >> (i & j) & 1)) return false;
    }
  }
  return true;
}

bool bitmap_is_bounded(int n, FamilyBitmap fb) {
  int full = (1 << n) - 1;
  return (fb & 1) && (fb >> full & 1);
}

bool bitmap_is_topology(int n, FamilyBitmap fb) {
  return bitmap_is_bounded(n, fb) && bitmap_is_lattice(n, fb);
}

bool bitmap_is_t1(int n, FamilyBitmap fb) {
  int subsets = 1 << n;
  return fb == (std::uint32_t{1} << subsets) - 1;
}

FiniteFamily family_from_bitmap(int n, FamilyBitmap fb) {
  FiniteFamily f(Universe::finite(n));
  int subsets = 1 << n;
  for (int m = 0; m < subsets; ++m) {
    if (fb >> m & 1) f.add(GroundSet::finite(n, static_cast<std::uint32_t>(m)));
  }
  return f;
}

FamilyBitmap bitmap_from_family(const FiniteFamily& f) {
  if (f.universe().kind != UniverseKind::Finite || f.universe().width > 4) {
    throw ValidationError("family bitmaps require a finite universe of size at most 4");
  }
  FamilyBitmap fb = 0;
  for (const auto& m : f.members()) fb |= FamilyBitmap{1} << m.mask();
  return fb;
}

ClassCounts enumerate_classify(int n) {
  std::uint64_t total = family_count(n);
  ClassCounts c;
  c.families = total;
  for (std::uint64_t fb = 0; fb < total; ++fb) {
    auto bm = static_cast<FamilyBitmap>(fb);
    bool lat = bitmap_is_lattice(n, bm);
    if (!lat) continue;
    ++c.lattices;
    if (!bitmap_is_bounded(n, bm)) continue;
    ++c.bounded_lattices;
    ++c.topologies;  // finite bounded lattices are topologies
    if (bitmap_is_t1(n, bm)) ++c.t1_topologies;
  }
  return c;
}

}  // namespace clopen

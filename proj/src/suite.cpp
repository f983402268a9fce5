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

#include "clopen/suite.hpp"

#include <chrono>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "clopen/logic.hpp"
#include "clopen/rng.hpp"
#include "clopen/witnesses.hpp"

namespace clopen::suite {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct Runner {
  CriterionResult result;
  Clock::time_point start = Clock::now();
  std::ostringstream details;
  bool pass = true;

  Runner(std::string id, std::string name) {
    result.id = std::move(id);
    result.name = std::move(name);
  }

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      details << "FAILED: " << what << "; ";
    }
  }

  CriterionResult finish(double limit_ms = 0.0) {
    result.elapsed_ms = ms_since(start);
    if (limit_ms > 0 && result.elapsed_ms >= limit_ms) {
      pass = false;
      details << "over the " << limit_ms / 1000.0 << " s budget; ";
    }
    result.pass = pass;
    result.details = details.str();
    return result;
  }
};

}  // namespace

// --------------------------------------------------------------------------
// c1: Boolean algebra laws and pointwise membership agreement.
// --------------------------------------------------------------------------

CriterionResult run_upset_laws(std::uint64_t seed) {
  Runner r("c1", "set algebra laws");
  Rng rng(seed);
  UpsetParams params{8, 8, true};
  const int kTriples = 10000;
  int ok = 0;
  for (int i = 0; i < kTriples && r.pass; ++i) {
    UPSet a = random_upset(rng, params), b = random_upset(rng, params),
          c = random_upset(rng, params);
    r.require(set_union(a, b) == set_union(b, a), "union commutativity");
    r.require(set_intersection(a, b) == set_intersection(b, a), "intersection commutativity");
    r.require(set_union(set_union(a, b), c) == set_union(a, set_union(b, c)),
              "union associativity");
    r.require(set_intersection(set_intersection(a, b), c) ==
                  set_intersection(a, set_intersection(b, c)),
              "intersection associativity");
    r.require(set_intersection(a, set_union(b, c)) ==
                  set_union(set_intersection(a, b), set_intersection(a, c)),
              "meet over join distributivity");
    r.require(set_union(a, set_intersection(b, c)) ==
                  set_intersection(set_union(a, b), set_union(a, c)),
              "join over meet distributivity");
    r.require(set_complement(set_union(a, b)) ==
                  set_intersection(set_complement(a), set_complement(b)),
              "complement of a union");
    r.require(set_complement(set_intersection(a, b)) ==
                  set_union(set_complement(a), set_complement(b)),
              "complement of an intersection");
    r.require(set_complement(set_complement(a)) == a, "double complement");
    r.require(set_union(a, set_intersection(a, b)) == a, "absorption (join)");
    r.require(set_intersection(a, set_union(a, b)) == a, "absorption (meet)");

    Nat lcm = std::lcm(a.period(), b.period());
    Nat bound = 5 * (std::max(a.threshold(), b.threshold()) + lcm);
    UPSet u = set_union(a, b), in = set_intersection(a, b), co = set_complement(a);
    for (Nat x = 0; x <= bound && r.pass; ++x) {
      r.require(u.contains(x) == (a.contains(x) || b.contains(x)), "union membership");
      r.require(in.contains(x) == (a.contains(x) && b.contains(x)), "intersection membership");
      r.require(co.contains(x) == !a.contains(x), "complement membership");
    }
    if (r.pass) ++ok;
  }
  r.details << ok << "/" << kTriples << " seeded triples satisfy every law exactly";
  return r.finish(10000.0);
}

// --------------------------------------------------------------------------
// c2: classification counts against an independent subbase-closure oracle.
// --------------------------------------------------------------------------

namespace {

// Counts distinct topologies by closing every subbase, an algorithm disjoint
// from the direct bitmap classification.
std::uint64_t count_topologies_by_subbase(int n) {
  std::unordered_set<FamilyBitmap> seen;
  std::uint64_t total = family_count(n);
  for (std::uint64_t fb = 0; fb < total; ++fb) {
    FiniteFamily subbase = family_from_bitmap(n, static_cast<FamilyBitmap>(fb));
    seen.insert(bitmap_from_family(topology_from_subbase(subbase)));
  }
  return seen.size();
}

}  // namespace

CriterionResult run_enumeration() {
  Runner r("c2", "finite topology counts");
  const std::uint64_t expected[4] = {1, 4, 29, 355};
  for (int n = 1; n <= 4; ++n) {
    ClassCounts c = enumerate_classify(n);
    r.require(c.topologies == expected[n - 1],
              "enumeration count at n=" + std::to_string(n));
    std::uint64_t cross = count_topologies_by_subbase(n);
    r.require(cross == expected[n - 1], "subbase-closure count at n=" + std::to_string(n));
    r.details << "n=" << n << ": " << c.topologies << "/" << cross << " ";
  }
  r.details << "(enumeration/subbase-generation)";
  return r.finish(60000.0);
}

// --------------------------------------------------------------------------
// c3: exhaustive separation soundness for sublattices and bounded
// sublattices over universes of size 1..3.
// --------------------------------------------------------------------------

CriterionResult run_separation_exhaustive() {
  Runner r("c3", "exhaustive separation certificates");
  for (int n = 1; n <= 3 && r.pass; ++n) {
    std::uint64_t total = family_count(n);
    std::vector<FiniteFamily> lattices, bounded;
    for (std::uint64_t fb = 0; fb < total; ++fb) {
      auto bm = static_cast<FamilyBitmap>(fb);
      if (bitmap_is_lattice(n, bm)) {
        lattices.push_back(family_from_bitmap(n, bm));
        if (bitmap_is_bounded(n, bm)) bounded.push_back(lattices.back());
      }
    }
    std::uint64_t lat_certs = 0, latb_certs = 0;
    for (std::uint64_t fb = 0; fb < total && r.pass; ++fb) {
      FiniteFamily theta = family_from_bitmap(n, static_cast<FamilyBitmap>(fb));
      ClassReport rep = classify_family(theta);
      if (!rep.is_lattice) {
        auto cert = witnesses::separate_lattice(theta);
        r.require(cert.ok() && cert.value().all_checks_pass(), "lattice certificate emitted");
        if (!r.pass) break;
        const Neighborhood& nb = cert.value().nbhd;
        r.require(nbhd_member(FamilyOracle::materialized(theta), nb),
                  "lattice certificate contains its point");
        for (const auto& l : lattices) {
          if (nbhd_member(FamilyOracle::materialized(l), nb)) {
            r.require(false, "a sublattice slipped into a lattice certificate at n=" +
                                 std::to_string(n));
            break;
          }
        }
        ++lat_certs;
      }
      if (!(rep.is_lattice && rep.is_bounded)) {
        auto cert = witnesses::separate_latb(theta);
        r.require(cert.ok() && cert.value().all_checks_pass(), "bounded-lattice certificate");
        if (!r.pass) break;
        const Neighborhood& nb = cert.value().nbhd;
        r.require(nbhd_member(FamilyOracle::materialized(theta), nb),
                  "bounded-lattice certificate contains its point");
        for (const auto& l : bounded) {
          if (nbhd_member(FamilyOracle::materialized(l), nb)) {
            r.require(false, "a bounded sublattice slipped into a certificate at n=" +
                                 std::to_string(n));
            break;
          }
        }
        ++latb_certs;
      }
    }
    r.details << "n=" << n << ": " << lat_certs << "+" << latb_certs << " certificates ";
  }
  r.details << "(all points covered, all classes excluded)";
  return r.finish(120000.0);
}

// --------------------------------------------------------------------------
// c4: exclusion certificates for the axiom corpus, exhaustive over all
// falsifying families at n = 2 and 3.
// --------------------------------------------------------------------------

namespace {

const char* const kAxiomCorpus[] = {
    "forall x. forall y. P(x) and P(y) -> P(x | y)",
    "forall x. forall y. P(x) and P(y) -> P(x & y)",
    "P(0) and P(1)",
    "forall x. P(x) -> P(~x)",
    "forall x. forall y. P(x) and x <= y -> P(y)",
    "forall x. forall y. P(x) and y <= x -> P(y)",
    "forall x. P(x | ~x)",
};

}  // namespace

CriterionResult run_logic_certificates() {
  Runner r("c4", "universal sentence exclusion certificates");
  std::uint64_t certs = 0;
  for (const char* text : kAxiomCorpus) {
    logic::Formula phi = logic::parse_sentence(text);
    for (int n = 2; n <= 3 && r.pass; ++n) {
      auto in_class = logic::defined_class_bitmaps(phi, n);
      std::unordered_set<FamilyBitmap> klass(in_class.begin(), in_class.end());
      std::uint64_t total = family_count(n);
      for (std::uint64_t fb = 0; fb < total && r.pass; ++fb) {
        if (klass.count(static_cast<FamilyBitmap>(fb))) continue;
        logic::Structure s = logic::Structure::from_bitmap(n, static_cast<FamilyBitmap>(fb));
        auto cert = logic::certify_exclusion(phi, s);
        r.require(cert.ok(), "certificate produced");
        if (!cert.ok()) break;
        const Neighborhood& nb = cert.value().nbhd;
        r.require(nbhd_member(FamilyOracle::materialized(s.family), nb),
                  "certificate contains the falsifying family");
        for (FamilyBitmap kb : in_class) {
          if (nbhd_member(FamilyOracle::materialized(family_from_bitmap(n, kb)), nb)) {
            r.require(false, std::string("class member inside certificate for: ") + text);
            break;
          }
        }
        ++certs;
      }
    }
  }
  r.details << certs << " certificates across " << std::size(kAxiomCorpus)
            << " sentences at n=2,3, all sound";
  return r.finish();
}

// --------------------------------------------------------------------------
// c5: the topology generated by the positive constraints lands inside every
// admissible random neighborhood.
// --------------------------------------------------------------------------

namespace {

Neighborhood random_symbolic_nbhd(Rng& rng, bool avoid_trivial_neg) {
  UpsetParams params{4, 4, true};
  while (true) {
    std::vector<GroundSet> pos, neg;
    std::size_t npos = rng.below(5), nneg = rng.below(5);
    for (std::size_t i = 0; i < npos; ++i) pos.push_back(GroundSet::nat(random_upset(rng, params)));
    for (std::size_t i = 0; i < nneg; ++i) {
      UPSet s = random_upset(rng, params);
      if (avoid_trivial_neg && (s.is_empty() || s == UPSet::naturals())) {
        --i;
        continue;
      }
      neg.push_back(GroundSet::nat(s));
    }
    Neighborhood n = Neighborhood::make(Universe::nat(), std::move(pos), std::move(neg));
    if (!n.inconsistent()) return n;
  }
}

}  // namespace

CriterionResult run_density(std::uint64_t seed) {
  Runner r("c5", "generated topology density");
  Rng rng(seed);
  const int kInstances = 1000;
  int produced = 0, skipped = 0;
  while (produced < kInstances && r.pass) {
    Neighborhood n = random_symbolic_nbhd(rng, true);
    // Instances meeting the precondition: no negative constraint generated.
    FiniteFamily gens(Universe::nat());
    for (const auto& g : n.pos()) gens.add(g);
    FiniteFamily topo = topology_from_subbase(gens);
    bool admissible = true;
    for (const auto& g : n.neg()) {
      if (topo.contains(g)) admissible = false;
    }
    if (!admissible) {
      ++skipped;
      continue;
    }
    auto out = witnesses::density_topology(n);
    r.require(out.ok(), "construction succeeded");
    if (!out.ok()) break;
    r.require(classify_family(out.value()).is_topology, "output is a topology");
    r.require(nbhd_member(FamilyOracle::materialized(out.value()), n),
              "output lies in the neighborhood");
    ++produced;
  }
  r.details << produced << "/" << kInstances << " admissible neighborhoods carry their topology ("
            << skipped << " resampled)";
  return r.finish();
}

// --------------------------------------------------------------------------
// c6: the join-incomplete bounded sublattice construction, validated
// externally on every accepted instance.
// --------------------------------------------------------------------------

namespace {

GroundSet residue_class_set(Nat modulus, Nat residue) {
  return GroundSet::nat(UPSet::from_residues(modulus, {residue}));
}

Neighborhood random_construction_nbhd(Rng& rng) {
  while (true) {
    std::vector<GroundSet> pos, neg;
    if (rng.chance(1, 2)) {
      // Covering style: split the residue classes of a small modulus between
      // the two sides so that branch 2 fires often.
      Nat k = 2 + rng.below(3);
      for (Nat i = 0; i < k; ++i) {
        switch (rng.below(3)) {
          case 0: pos.push_back(residue_class_set(k, i)); break;
          case 1: neg.push_back(residue_class_set(k, i)); break;
          default: break;
        }
      }
      if (rng.chance(1, 3)) pos.push_back(GroundSet::nat(random_upset(rng, {4, 4, true})));
      if (rng.chance(1, 3)) neg.push_back(GroundSet::nat(random_upset(rng, {4, 4, true})));
    } else {
      std::size_t npos = rng.below(4), nneg = 1 + rng.below(3);
      for (std::size_t i = 0; i < npos; ++i) {
        pos.push_back(GroundSet::nat(random_upset(rng, {4, 4, true})));
      }
      for (std::size_t i = 0; i < nneg; ++i) {
        neg.push_back(GroundSet::nat(random_upset(rng, {4, 4, true})));
      }
    }
    // Trivially hopeless negatives are invalid instances, not rejections.
    bool valid = true;
    for (const auto& g : neg) {
      if (g.upset().is_empty() || g.upset() == UPSet::naturals()) valid = false;
    }
    if (!valid) continue;
    Neighborhood n = Neighborhood::make(Universe::nat(), std::move(pos), std::move(neg));
    if (!n.inconsistent()) return n;
  }
}

// Re-derives every postcondition from scratch.
bool validate_nontopology(const Neighborhood& n, const witnesses::NontopologyLatticeOutput& o, int m,
                      std::string& why) {
  if (!o.S.is_infinite()) {
    why = "S finite";
    return false;
  }
  if (static_cast<int>(o.parts.size()) != m) {
    why = "part count";
    return false;
  }
  UPSet uni = UPSet::empty_set();
  for (std::size_t i = 0; i < o.parts.size(); ++i) {
    if (!o.parts[i].is_infinite() || !is_subset(o.parts[i], o.S)) {
      why = "part not an infinite subset";
      return false;
    }
    for (std::size_t j = i + 1; j < o.parts.size(); ++j) {
      if (!set_intersection(o.parts[i], o.parts[j]).is_empty()) {
        why = "parts overlap";
        return false;
      }
    }
    uni = set_union(uni, o.parts[i]);
  }
  if (set_union(uni, o.residual) != o.S || !set_intersection(uni, o.residual).is_empty()) {
    why = "partition identity";
    return false;
  }
  for (const auto& g : n.pos()) {
    UPSet t = set_intersection(g.upset(), o.S);
    if (!(t.is_empty() || t == o.S)) {
      why = "positive trace";
      return false;
    }
    if (!o.lattice.contains(g)) {
      why = "positive missing from the lattice";
      return false;
    }
  }
  for (const auto& g : n.neg()) {
    UPSet t = set_intersection(g.upset(), o.S);
    if (!(t.is_empty() || t == o.S)) {
      why = "negative trace";
      return false;
    }
    if (o.lattice.contains(g)) {
      why = "negative inside the lattice";
      return false;
    }
  }
  if (o.lattice.contains(GroundSet::nat(o.S))) {
    why = "S inside the lattice";
    return false;
  }
  return true;
}

}  // namespace

CriterionResult run_nontopology(std::uint64_t seed) {
  Runner r("c6", "join-incomplete lattice construction");
  Rng rng(seed);
  const int kInstances = 500, kParts = 8;
  int accepted = 0, rejected = 0;
  for (int i = 0; i < kInstances && r.pass; ++i) {
    Neighborhood n = random_construction_nbhd(rng);
    try {
      auto out = witnesses::nontopology_lattice(n, kParts);
      if (!out.ok()) {
        ++rejected;
        continue;
      }
      std::string why;
      bool valid = validate_nontopology(n, out.value(), kParts, why);
      r.require(valid, "instance " + std::to_string(i) + ": " + why);
      if (valid) ++accepted;
    } catch (const ResourceError&) {
      ++rejected;
    }
  }
  double rate = 100.0 * rejected / kInstances;
  r.require(rate < 20.0, "rejection rate below 20%");
  std::ostringstream rt;
  rt.precision(1);
  rt << std::fixed << rate;
  r.details << accepted << " accepted, " << rejected << " rejected (" << rt.str()
            << "%), all six postconditions re-derived";
  return r.finish();
}

// --------------------------------------------------------------------------
// c7: function space separation (exhaustive on small carriers) and the three
// density constructions (seeded symbolic batteries).
// --------------------------------------------------------------------------

namespace {

// Definitional membership for a finite pair set, written independently of
// pairset_in_space.
bool pairset_member_oracle(const std::vector<std::pair<Nat, Nat>>& ps, bool has_junk, Nat ka,
                           Nat kb, bool injective) {
  if (has_junk) return false;
  for (const auto& [a, b] : ps) {
    if (a >= ka || b >= kb) return false;
  }
  for (std::size_t i = 0; i < ps.size(); ++i) {
    for (std::size_t j = 0; j < ps.size(); ++j) {
      if (i == j) continue;
      if (ps[i].first == ps[j].first && ps[i].second != ps[j].second) return false;
      if (injective && ps[i].second == ps[j].second && ps[i].first != ps[j].first) return false;
    }
  }
  return true;
}

UPSet range_set(Nat k) {
  std::vector<Nat> v(k);
  std::iota(v.begin(), v.end(), Nat{0});
  return UPSet::from_elements(v);
}

}  // namespace

CriterionResult run_function_spaces(std::uint64_t seed) {
  Runner r("c7", "function space witnesses");
  Rng rng(seed);

  // Exhaustive half: all pair sets drawn from an extended grid (one extra
  // point on each side) so that out-of-product members occur, plus an
  // occasional non-pair junk member.
  std::uint64_t checked = 0, separated = 0;
  for (Nat ka = 1; ka <= 3 && r.pass; ++ka) {
    for (Nat kb = 1; kb <= 3 && r.pass; ++kb) {
      UPSet A = range_set(ka), B = range_set(kb);
      std::vector<std::pair<Nat, Nat>> grid;
      for (Nat a = 0; a <= ka; ++a) {
        for (Nat b = 0; b <= kb; ++b) grid.emplace_back(a, b);
      }
      for (int injective = 0; injective <= 1 && r.pass; ++injective) {
        FnSpace space = FnSpace::make(
            A, B, injective ? FnSpace::Flavor::Injective : FnSpace::Flavor::All);
        // Members of the space, enumerated definitionally for the exclusion
        // check: all functions from a subset of A into B (injective or not).
        std::vector<FamilyOracle> members;
        Nat combos = 1;
        for (Nat i = 0; i < ka; ++i) combos *= kb + 1;  // kb values or absent
        for (Nat code = 0; code < combos; ++code) {
          Nat rest = code;
          std::vector<GroundSet> pairs;
          std::vector<std::pair<Nat, Nat>> raw;
          for (Nat a = 0; a < ka; ++a) {
            Nat digit = rest % (kb + 1);
            rest /= kb + 1;
            if (digit < kb) {
              pairs.push_back(GroundSet::pair(a, digit));
              raw.emplace_back(a, digit);
            }
          }
          if (injective && !pairset_member_oracle(raw, false, ka, kb, true)) continue;
          members.push_back(
              FamilyOracle::materialized(FiniteFamily(Universe::pairs(), std::move(pairs))));
        }
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << grid.size()) && r.pass; ++mask) {
          std::vector<std::pair<Nat, Nat>> raw;
          std::vector<GroundSet> sets;
          for (std::size_t i = 0; i < grid.size(); ++i) {
            if (mask >> i & 1) {
              raw.push_back(grid[i]);
              sets.push_back(GroundSet::pair(grid[i].first, grid[i].second));
            }
          }
          bool junk = rng.chance(1, 16);
          if (junk) sets.push_back(GroundSet::y_subset(random_upset(rng, {3, 3, true})));
          FiniteFamily p(Universe::pairs(), std::move(sets));
          bool is_member = pairset_member_oracle(raw, junk, ka, kb, injective != 0);
          auto cert = witnesses::separate_function(p, space);
          ++checked;
          if (is_member) {
            r.require(!cert.ok() && cert.failure().code == FailCode::NotSeparable,
                      "member not separated");
            continue;
          }
          r.require(cert.ok(), "non-member separated");
          if (!cert.ok()) break;
          const Neighborhood& nb = cert.value().nbhd;
          r.require(nbhd_member(FamilyOracle::materialized(p), nb),
                    "certificate contains its point");
          for (const auto& mem : members) {
            if (nbhd_member(mem, nb)) {
              r.require(false, "space member inside a separation certificate");
              break;
            }
          }
          ++separated;
        }
      }
    }
  }

  // Symbolic half: 200 instances per construction.
  UpsetParams params{4, 4, false};
  const int kSymbolic = 200;
  int finite_ok = 0, extend_ok = 0, onto_ok = 0;
  for (int done = 0; done < kSymbolic && r.pass;) {
    // density_finite_fn: a neighborhood straddling an infinite function.
    UPSet domain = UPSet::from_residues(2 + rng.below(3), {rng.below(2)});
    PartialFn f = PartialFn::make({}, ConstTail{domain, rng.below(5)});
    std::vector<GroundSet> pos, neg;
    for (Nat k = 0; k < 1 + rng.below(3); ++k) {
      Nat a = domain.nth(rng.below(20));
      pos.push_back(GroundSet::pair(a, *f.tail_value_at(a)));
    }
    for (Nat k = 0; k < rng.below(3); ++k) {
      Nat a = rng.below(40), b = rng.below(8);
      if (!fn_contains_pair(f, a, b)) neg.push_back(GroundSet::pair(a, b));
    }
    Neighborhood n = Neighborhood::make(Universe::pairs(), pos, neg);
    if (n.inconsistent()) continue;
    ++done;
    auto h = witnesses::density_finite_fn(f, n);
    bool ok1 = h.ok() && h.value().graph_cardinality().is_finite() &&
               nbhd_member(graph_oracle(h.value()), n);
    if (ok1) {
      for (const auto& [a, b] : h.value().pairs()) ok1 = ok1 && fn_contains_pair(f, a, b);
    }
    r.require(ok1, "finite restriction instance " + std::to_string(done));
    if (ok1) ++finite_ok;
  }
  for (int done = 0; done < kSymbolic && r.pass;) {
    // extend_infinite_fn: a finite function plus pair constraints.
    UPSet A = UPSet::from_residues(1 + rng.below(3), {0});
    UPSet B = random_upset(rng, params);
    std::vector<std::pair<Nat, Nat>> base;
    for (Nat k = 0; k < rng.below(4); ++k) {
      Nat a = A.nth(rng.below(10));
      bool dup = false;
      for (auto& [x, y] : base) dup = dup || x == a;
      if (!dup) base.emplace_back(a, B.nth(rng.below(6)));
    }
    PartialFn p = PartialFn::make(base);
    std::vector<GroundSet> pos, neg;
    for (const auto& [a, b] : base) {
      if (rng.chance(1, 2)) pos.push_back(GroundSet::pair(a, b));
    }
    for (Nat k = 0; k < rng.below(3); ++k) {
      Nat a = rng.below(30), b = rng.below(8);
      if (!fn_contains_pair(p, a, b)) neg.push_back(GroundSet::pair(a, b));
    }
    Neighborhood n = Neighborhood::make(Universe::pairs(), pos, neg);
    if (n.inconsistent()) continue;
    FnSpace space = FnSpace::make(A, B, FnSpace::Flavor::All);
    SpaceCheck pc = fn_in_space(p, space);
    if (!pc.ok) continue;  // base pairs fell outside the product; resample
    ++done;
    auto g = witnesses::extend_infinite_fn(p, n, space);
    bool ok2 = g.ok() && g.value().graph_cardinality().is_infinite() &&
               nbhd_member(graph_oracle(g.value()), n) && fn_in_space(g.value(), space).ok;
    if (ok2) {
      for (const auto& [a, b] : p.pairs()) ok2 = ok2 && fn_contains_pair(g.value(), a, b);
    }
    r.require(ok2, "infinite extension instance " + std::to_string(done));
    if (ok2) ++extend_ok;
  }
  for (int done = 0; done < kSymbolic && r.pass;) {
    // density_onto: functional positive pairs inside A x B.
    UPSet A = UPSet::from_residues(1 + rng.below(2), {0});
    UPSet B = rng.chance(1, 2) ? random_upset(rng, params) : range_set(1 + rng.below(4));
    std::vector<GroundSet> pos, neg;
    std::vector<Nat> used;
    Cardinality cb = B.classify();
    Nat value_span = cb.is_finite() ? cb.count() : 5;
    for (Nat k = 0; k < rng.below(3); ++k) {
      Nat a = A.nth(rng.below(10));
      if (std::find(used.begin(), used.end(), a) != used.end()) continue;
      used.push_back(a);
      pos.push_back(GroundSet::pair(a, B.nth(rng.below(value_span))));
    }
    for (Nat k = 0; k < rng.below(3); ++k) {
      Nat a = rng.below(30), b = rng.below(8);
      neg.push_back(GroundSet::pair(a, b));
    }
    Neighborhood n = Neighborhood::make(Universe::pairs(), pos, neg);
    if (n.inconsistent()) continue;
    auto f = witnesses::density_onto(n, A, B);
    if (!f.ok()) continue;  // conflicting constraints; resample
    ++done;
    bool ok3 = nbhd_member(graph_oracle(f.value()), n) &&
               fn_in_space(f.value(), FnSpace::make(A, B, FnSpace::Flavor::Onto)).ok;
    r.require(ok3, "onto construction instance " + std::to_string(done));
    if (ok3) ++onto_ok;
  }

  r.details << checked << " pair sets checked exhaustively (" << separated
            << " certificates), symbolic batteries " << finite_ok << "/" << extend_ok << "/"
            << onto_ok << " valid";
  return r.finish();
}

// --------------------------------------------------------------------------
// c8: almost disjoint families against the pairwise-intersection oracle.
// --------------------------------------------------------------------------

CriterionResult run_ad_families(std::uint64_t seed) {
  Runner r("c8", "almost disjoint families");
  Rng rng(seed);
  const int kInstances = 500;
  int agreed = 0, certified = 0;
  for (int i = 0; i < kInstances && r.pass; ++i) {
    FiniteFamily fam(Universe::nat());
    std::size_t count = 2 + rng.below(5);
    if (rng.chance(1, 2)) {
      // Nearly disjoint residue classes, occasionally perturbed.
      Nat k = 2 + rng.below(4);
      for (std::size_t j = 0; j < count; ++j) {
        UPSet s = UPSet::from_residues(k, {rng.below(k)});
        if (rng.chance(1, 4)) s = set_union(s, UPSet::from_elements({rng.below(10)}));
        fam.add(GroundSet::nat(s));
      }
    } else {
      for (std::size_t j = 0; j < count; ++j) {
        fam.add(GroundSet::nat(random_upset(rng, {6, 4, true})));
      }
    }

    // The oracle: pairwise classification of intersections, plus member size.
    bool oracle_ad = true;
    const auto& ms = fam.members();
    for (const auto& g : ms) {
      if (g.upset().classify().is_finite()) oracle_ad = false;
    }
    for (std::size_t a = 0; a < ms.size() && oracle_ad; ++a) {
      for (std::size_t b = a + 1; b < ms.size(); ++b) {
        if (set_intersection(ms[a].upset(), ms[b].upset()).classify().is_infinite()) {
          oracle_ad = false;
        }
      }
    }

    AdReport rep = is_ad_family(fam, Cardinality::infinite());
    r.require(rep.is_ad == oracle_ad, "oracle agreement on instance " + std::to_string(i));
    if (rep.is_ad == oracle_ad) ++agreed;

    auto cert = witnesses::separate_ad(fam, Cardinality::infinite());
    if (oracle_ad) {
      r.require(!cert.ok() && cert.failure().code == FailCode::NotSeparable,
                "almost disjoint family wrongly separated");
    } else {
      r.require(cert.ok() && cert.value().all_checks_pass(), "violating family separated");
      if (cert.ok()) {
        r.require(nbhd_member(FamilyOracle::materialized(fam), cert.value().nbhd),
                  "certificate contains its point");
        ++certified;
      }
    }
  }

  // The two named extension cases.
  FiniteFamily mult4(Universe::nat());
  mult4.add(GroundSet::nat(UPSet::from_residues(4, {0})));
  auto ext = witnesses::extend_ad(mult4);
  bool ext_ok = ext.ok() && ext.value().is_infinite();
  if (ext_ok) {
    for (const auto& g : mult4.members()) {
      ext_ok = ext_ok &&
               set_intersection(ext.value(), g.upset()).classify().is_finite();
    }
    FiniteFamily grown = mult4;
    grown.add(GroundSet::nat(ext.value()));
    ext_ok = ext_ok && is_ad_family(grown, Cardinality::infinite()).is_ad;
  }
  r.require(ext_ok, "extension of {multiples of 4}");

  FiniteFamily evens_odds(Universe::nat());
  evens_odds.add(GroundSet::nat(UPSet::from_residues(2, {0})));
  evens_odds.add(GroundSet::nat(UPSet::from_residues(2, {1})));
  auto noext = witnesses::extend_ad(evens_odds);
  r.require(!noext.ok() && noext.failure().code == FailCode::NotExtendable,
            "{evens, odds} reported maximal");

  r.details << agreed << "/" << kInstances << " oracle agreements, " << certified
            << " certificates, extension cases as stated";
  return r.finish();
}

std::vector<CriterionResult> run_all(std::uint64_t seed) {
  return {
      run_upset_laws(seed),  run_enumeration(),          run_separation_exhaustive(),
      run_logic_certificates(), run_density(seed),       run_nontopology(seed),
      run_function_spaces(seed), run_ad_families(seed),
  };
}

std::vector<std::string> criterion_ids() {
  return {"c1", "c2", "c3", "c4", "c5", "c6", "c7", "c8"};
}

CriterionResult run_one(const std::string& id, std::uint64_t seed) {
  if (id == "c1") return run_upset_laws(seed);
  if (id == "c2") return run_enumeration();
  if (id == "c3") return run_separation_exhaustive();
  if (id == "c4") return run_logic_certificates();
  if (id == "c5") return run_density(seed);
  if (id == "c6") return run_nontopology(seed);
  if (id == "c7") return run_function_spaces(seed);
  if (id == "c8") return run_ad_families(seed);
  return CriterionResult{};
}

}  // namespace clopen::suite

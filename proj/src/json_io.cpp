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

#include "clopen/json_io.hpp"

namespace clopen::jsonio {

namespace {

std::vector<Nat> nat_list(const json& j, const char* what) {
  if (!j.is_array()) throw ValidationError(std::string(what) + " must be an array");
  std::vector<Nat> out;
  for (const auto& v : j) {
    if (!v.is_number_integer() || (v.is_number_integer() && !v.is_number_unsigned() &&
                                   v.get<long long>() < 0)) {
      throw ValidationError(std::string(what) + " entries must be nonnegative integers");
    }
    out.push_back(v.get<Nat>());
  }
  return out;
}

}  // namespace

json upset_to_json(const UPSet& s) {
  return json{{"T", s.threshold()},
              {"transient", s.transient_elements()},
              {"p", s.period()},
              {"R", s.residues()}};
}

UPSet upset_from_json(const json& j) {
  if (j.is_array()) return UPSet::from_elements(nat_list(j, "set"));
  if (!j.is_object()) throw ValidationError("a set is an object or an element array");
  if (j.contains("elems")) return UPSet::from_elements(nat_list(j.at("elems"), "elems"));
  if (!j.contains("p") || !j.contains("R")) {
    throw ValidationError("a set needs fields p and R (or elems)");
  }
  Nat period = j.at("p").get<Nat>();
  Nat threshold = j.value("T", Nat{0});
  std::vector<Nat> transient;
  if (j.contains("transient")) transient = nat_list(j.at("transient"), "transient");
  return UPSet::from_residues(period, nat_list(j.at("R"), "R"), threshold, transient);
}

json universe_to_json(const Universe& u) {
  switch (u.kind) {
    case UniverseKind::Nat: return "nat";
    case UniverseKind::Pairs: return "pairs";
    case UniverseKind::Finite: return json{{"finite", u.width}};
  }
  return nullptr;
}

Universe universe_from_json(const json& j) {
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s == "nat") return Universe::nat();
    if (s == "pairs") return Universe::pairs();
    throw ValidationError("unknown universe '" + s + "'");
  }
  if (j.is_object() && j.contains("finite")) {
    return Universe::finite(j.at("finite").get<int>());
  }
  throw ValidationError("a universe is \"nat\", \"pairs\" or {\"finite\": n}");
}

json groundset_to_json(const GroundSet& g) {
  switch (g.kind()) {
    case GroundSet::Kind::Nat:
      return upset_to_json(g.upset());
    case GroundSet::Kind::Fin: {
      json arr = json::array();
      for (int i = 0; i < g.width(); ++i) {
        if (g.mask() >> i & 1) arr.push_back(i);
      }
      return arr;
    }
    case GroundSet::Kind::Pair: {
      auto [a, b] = g.pair_value();
      return json{{"pair", {a, b}}};
    }
    case GroundSet::Kind::YSub:
      return json{{"yset", upset_to_json(g.upset())}};
  }
  return nullptr;
}

GroundSet groundset_from_json(const Universe& u, const json& j) {
  switch (u.kind) {
    case UniverseKind::Nat:
      return GroundSet::nat(upset_from_json(j));
    case UniverseKind::Finite: {
      auto elems = nat_list(j, "finite set");
      std::vector<int> ints(elems.begin(), elems.end());
      return GroundSet::finite_elems(u.width, ints);
    }
    case UniverseKind::Pairs: {
      if (j.is_object() && j.contains("pair")) {
        auto ab = nat_list(j.at("pair"), "pair");
        if (ab.size() != 2) throw ValidationError("a pair has exactly two coordinates");
        return GroundSet::pair(ab[0], ab[1]);
      }
      if (j.is_object() && j.contains("yset")) {
        return GroundSet::y_subset(upset_from_json(j.at("yset")));
      }
      throw ValidationError("a pair-universe member is {\"pair\":[a,b]} or {\"yset\":...}");
    }
  }
  throw ValidationError("unknown universe");
}

json family_to_json(const FiniteFamily& f) {
  json sets = json::array();
  for (const auto& m : f.members()) sets.push_back(groundset_to_json(m));
  return json{{"universe", universe_to_json(f.universe())}, {"sets", sets}};
}

FiniteFamily family_from_json(const json& j) {
  if (!j.is_object() || !j.contains("universe") || !j.contains("sets")) {
    throw ValidationError("a family is {\"universe\":...,\"sets\":[...]}");
  }
  Universe u = universe_from_json(j.at("universe"));
  FiniteFamily f(u);
  for (const auto& s : j.at("sets")) f.add(groundset_from_json(u, s));
  return f;
}

json nbhd_to_json(const Neighborhood& n) {
  json pos = json::array(), neg = json::array();
  for (const auto& g : n.pos()) pos.push_back(groundset_to_json(g));
  for (const auto& g : n.neg()) neg.push_back(groundset_to_json(g));
  json out{{"universe", universe_to_json(n.universe())}, {"pos", pos}, {"neg", neg}};
  if (n.inconsistent()) out["inconsistent"] = true;
  return out;
}

Neighborhood nbhd_from_json(const json& j) {
  if (!j.is_object() || !j.contains("universe")) {
    throw ValidationError("a neighborhood is {\"universe\":...,\"pos\":[...],\"neg\":[...]}");
  }
  Universe u = universe_from_json(j.at("universe"));
  std::vector<GroundSet> pos, neg;
  if (j.contains("pos")) {
    for (const auto& s : j.at("pos")) pos.push_back(groundset_from_json(u, s));
  }
  if (j.contains("neg")) {
    for (const auto& s : j.at("neg")) neg.push_back(groundset_from_json(u, s));
  }
  return Neighborhood::make(u, std::move(pos), std::move(neg));
}

json class_report_to_json(const ClassReport& r) {
  json out{{"is_lattice", r.is_lattice},
           {"is_bounded", r.is_bounded},
           {"is_topology", r.is_topology}};
  out["is_t1"] = r.is_t1 ? json(*r.is_t1) : json(nullptr);
  if (r.lattice_witness) {
    out["witness"] = json{{"a", groundset_to_json(r.lattice_witness->a)},
                          {"b", groundset_to_json(r.lattice_witness->b)},
                          {"missing", groundset_to_json(r.lattice_witness->combined)},
                          {"operation", r.lattice_witness->is_union ? "union" : "intersection"}};
  } else if (r.missing_bound) {
    out["witness"] = json{{"missing_bound", groundset_to_json(*r.missing_bound)}};
  }
  return out;
}

json ad_report_to_json(const AdReport& r) {
  json out{{"is_ad", r.is_ad}};
  if (r.violation) {
    json v{{"kind", r.violation->kind == AdViolation::Kind::SmallMember ? "small_member"
                                                                        : "large_intersection"},
           {"first", groundset_to_json(r.violation->first)}};
    if (r.violation->second) v["second"] = groundset_to_json(*r.violation->second);
    out["violation"] = v;
  }
  return out;
}

json map_check_to_json(const MapCheck& m) {
  return json{{"continuous", m.continuous}, {"open", m.open}, {"closed", m.closed}};
}

json counts_to_json(const ClassCounts& c) {
  return json{{"families", c.families},
              {"lattices", c.lattices},
              {"bounded_lattices", c.bounded_lattices},
              {"topologies", c.topologies},
              {"t1_topologies", c.t1_topologies}};
}

json partial_fn_to_json(const PartialFn& f) {
  json map = json::array();
  for (const auto& [a, b] : f.pairs()) map.push_back({a, b});
  json tail = nullptr;
  if (const auto* c = std::get_if<ConstTail>(&f.tail())) {
    tail = json{{"const", {{"domain", upset_to_json(c->domain)}, {"value", c->value}}}};
  } else if (const auto* e = std::get_if<EnumerateTail>(&f.tail())) {
    tail = json{{"enum",
                 {{"domain", upset_to_json(e->domain)}, {"codomain", upset_to_json(e->codomain)}}}};
  }
  return json{{"map", map}, {"tail", tail}};
}

PartialFn partial_fn_from_json(const json& j) {
  if (!j.is_object() || !j.contains("map")) {
    throw ValidationError("a partial function is {\"map\":[[a,b],...],\"tail\":...}");
  }
  std::vector<std::pair<Nat, Nat>> pairs;
  for (const auto& p : j.at("map")) {
    auto ab = nat_list(p, "map entry");
    if (ab.size() != 2) throw ValidationError("map entries are [a,b] pairs");
    pairs.emplace_back(ab[0], ab[1]);
  }
  Tail tail = std::monostate{};
  if (j.contains("tail") && !j.at("tail").is_null()) {
    const json& t = j.at("tail");
    if (t.contains("const")) {
      tail = ConstTail{upset_from_json(t.at("const").at("domain")),
                       t.at("const").at("value").get<Nat>()};
    } else if (t.contains("enum")) {
      tail = EnumerateTail{upset_from_json(t.at("enum").at("domain")),
                           upset_from_json(t.at("enum").at("codomain"))};
    } else {
      throw ValidationError("a tail is null, {\"const\":...} or {\"enum\":...}");
    }
  }
  return PartialFn::make(std::move(pairs), std::move(tail));
}

json fn_space_to_json(const FnSpace& s) {
  return json{{"A", upset_to_json(s.A)}, {"B", upset_to_json(s.B)}, {"flavor", flavor_name(s.flavor)}};
}

FnSpace fn_space_from_json(const json& j) {
  if (!j.is_object() || !j.contains("A") || !j.contains("B")) {
    throw ValidationError("a function space is {\"A\":...,\"B\":...,\"flavor\":...}");
  }
  std::string flavor = j.value("flavor", "all");
  FnSpace::Flavor fl;
  if (flavor == "all") fl = FnSpace::Flavor::All;
  else if (flavor == "injective") fl = FnSpace::Flavor::Injective;
  else if (flavor == "onto") fl = FnSpace::Flavor::Onto;
  else if (flavor == "finite") fl = FnSpace::Flavor::FiniteOnly;
  else throw ValidationError("unknown flavor '" + flavor + "'");
  return FnSpace::make(upset_from_json(j.at("A")), upset_from_json(j.at("B")), fl);
}

json space_check_to_json(const SpaceCheck& c) {
  json out{{"ok", c.ok}};
  if (c.violation) {
    const auto& v = *c.violation;
    const char* kind = nullptr;
    switch (v.kind) {
      case SpaceViolation::Kind::NonPairMember: kind = "non_pair_member"; break;
      case SpaceViolation::Kind::OutsideProduct: kind = "outside_product"; break;
      case SpaceViolation::Kind::Conflict: kind = "conflict"; break;
      case SpaceViolation::Kind::NotInjective: kind = "not_injective"; break;
      case SpaceViolation::Kind::NotOnto: kind = "not_onto"; break;
      case SpaceViolation::Kind::NotFinite: kind = "not_finite"; break;
    }
    json vj{{"kind", kind}, {"a", v.a}, {"b", v.b}, {"a2", v.a2}, {"b2", v.b2}};
    if (v.member) vj["member"] = groundset_to_json(*v.member);
    out["violation"] = vj;
  }
  return out;
}

json endomap_to_json(const EndoMap& f) {
  return json{{"n", f.n}, {"images", f.images}};
}

EndoMap endomap_from_json(const json& j) {
  if (j.is_array()) {
    std::vector<int> images = j.get<std::vector<int>>();
    return EndoMap::make(static_cast<int>(images.size()), std::move(images));
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("images")) {
    throw ValidationError("a map is {\"n\":k,\"images\":[...]} or a bare image array");
  }
  return EndoMap::make(j.at("n").get<int>(), j.at("images").get<std::vector<int>>());
}

json certificate_to_json(const witnesses::SeparationCertificate& c) {
  json checks = json::object();
  for (const auto& [name, ok] : c.checks) checks[name] = ok;
  return json{{"point", c.point},
              {"class", c.class_tag},
              {"neighborhood", nbhd_to_json(c.nbhd)},
              {"rationale", c.rationale},
              {"checks", checks}};
}

json nontopology_to_json(const witnesses::NontopologyLatticeOutput& o) {
  json parts = json::array();
  for (const auto& p : o.parts) parts.push_back(upset_to_json(p));
  json checks = json::object();
  for (const auto& [name, ok] : o.checks) checks[name] = ok;
  return json{{"S", upset_to_json(o.S)},
              {"parts", parts},
              {"residual", upset_to_json(o.residual)},
              {"lattice", family_to_json(o.lattice)},
              {"branch", o.branch},
              {"trimmed_finite_constraints", o.trimmed_finite_constraints},
              {"checks", checks}};
}

json exclusion_to_json(const logic::ExclusionCertificate& c) {
  json assignment = json::object();
  for (const auto& [var, mask] : c.assignment) {
    json elems = json::array();
    for (int i = 0; i < c.n; ++i) {
      if (mask >> i & 1) elems.push_back(i);
    }
    assignment[var] = elems;
  }
  return json{{"sentence", c.sentence},
              {"n", c.n},
              {"family", family_to_json(c.family)},
              {"assignment", assignment},
              {"neighborhood", nbhd_to_json(c.nbhd)}};
}

json collection_report_to_json(const logic::CollectionReport& r) {
  json certs = json::array();
  for (const auto& [idx, cert] : r.certificates) {
    certs.push_back(json{{"sentence_index", idx}, {"certificate", exclusion_to_json(cert)}});
  }
  return json{{"satisfied", r.satisfied}, {"certificates", certs}, {"in_class", r.in_class()}};
}

}  // namespace clopen::jsonio

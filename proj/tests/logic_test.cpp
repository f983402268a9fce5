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

#include <doctest.h>

#include <fstream>
#include <sstream>

#include "clopen/logic.hpp"
#include "clopen/witnesses.hpp"

using namespace clopen;
using namespace clopen::logic;

namespace {

const char* kJoinAxiom = "forall x. forall y. P(x) and P(y) -> P(x | y)";
const char* kMeetAxiom = "forall x. forall y. P(x) and P(y) -> P(x & y)";

std::string strip_ws(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c != ' ' && c != '\t') out.push_back(c);
  }
  return out;
}

std::string corpus_text() {
  std::ifstream in(CLOPEN_CORPUS_PATH);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("parsing the closure axioms") {
  Formula f = parse_sentence(kJoinAxiom);
  CHECK(f.kind == Formula::Kind::Forall);
  CHECK(f.kids[0].kind == Formula::Kind::Forall);
  CHECK(f.kids[0].kids[0].kind == Formula::Kind::Implies);

  Formula bounds = parse_sentence("P(0) and P(1)");
  CHECK(bounds.kind == Formula::Kind::And);
  CHECK(bounds.kids[0].lhs.kind == Term::Kind::Zero);
  CHECK(bounds.kids[1].lhs.kind == Term::Kind::One);
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_sentence("forall x. P(x");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.col() >= 13);
  }
  try {
    parse_sentence("forall x. P(y)");
    FAIL("expected a scoping error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("unbound variable 'y'") != std::string::npos);
    CHECK(e.col() == 13);
  }
  CHECK_THROWS_AS(parse_sentence("P(2)"), ParseError);
  CHECK_THROWS_AS(parse_sentence("forall x. x"), ParseError);
}

TEST_CASE("parenthesized terms versus formulas") {
  CHECK_NOTHROW(parse_sentence("forall x. forall y. (x | y) = 1 -> P(x)"));
  CHECK_NOTHROW(parse_sentence("forall x. (P(x))"));
  Formula spec_style = parse_sentence("forall x. forall y. (P(x) and P(y)) -> P(x | y)");
  Formula minimal = parse_sentence(kJoinAxiom);
  CHECK(spec_style == minimal);
}

TEST_CASE("corpus parses and round-trips through the printer") {
  auto corpus = load_corpus(corpus_text());
  CHECK(corpus.size() == 30);
  for (const auto& [text, formula] : corpus) {
    std::string printed = to_text(formula);
    CHECK(strip_ws(printed) == strip_ws(text));
    CHECK(parse_sentence(printed) == formula);
  }
}

TEST_CASE("universal normal form examples") {
  auto merged = to_universal(parse_sentence("forall x. P(x) and forall y. P(~y)"));
  REQUIRE(merged.ok());
  CHECK(to_text(merged.value()) == "forall x. forall y. P(x) and P(~y)");

  auto blocked = to_universal(parse_sentence("exists x. P(x)"));
  CHECK_FALSE(blocked.ok());
  CHECK(blocked.failure().code == FailCode::NotUniversal);

  auto dual = to_universal(parse_sentence("not (exists x. P(x))"));
  REQUIRE(dual.ok());
  CHECK(to_text(dual.value()) == "forall x. not P(x)");

  // A vacuous existential disappears.
  auto vacuous = to_universal(parse_sentence("exists x. P(0)"));
  REQUIRE(vacuous.ok());
  CHECK(to_text(vacuous.value()) == "P(0)");

  CHECK(is_universal_form(merged.value()));
  CHECK_FALSE(is_universal_form(parse_sentence("forall x. exists y. x <= y")));
}

TEST_CASE("normalization preserves truth over every small structure") {
  auto corpus = load_corpus(corpus_text());
  int converted = 0;
  for (const auto& [text, formula] : corpus) {
    auto uni = to_universal(formula);
    if (!uni.ok()) continue;
    ++converted;
    for (int n = 1; n <= 2; ++n) {
      for (std::uint64_t fb = 0; fb < family_count(n); ++fb) {
        Structure s = Structure::from_bitmap(n, static_cast<FamilyBitmap>(fb));
        CHECK(eval(s, formula) == eval(s, uni.value()));
      }
    }
  }
  CHECK(converted >= 20);
}

TEST_CASE("evaluation") {
  Formula join = parse_sentence(kJoinAxiom);
  // {∅,{0},{1},X}: the only interesting join lands inside.
  Structure closed = Structure::from_bitmap(2, 0b1111);
  CHECK(eval(closed, join));
  Structure open_pair = Structure::from_bitmap(2, 0b0110);
  CHECK_FALSE(eval(open_pair, join));
  Structure empty_only = Structure::from_bitmap(2, 0b0001);
  CHECK(eval(empty_only, parse_sentence("P(0)")));
  CHECK_FALSE(eval(empty_only, parse_sentence("P(1)")));
}

TEST_CASE("defined classes by exhaustion") {
  // Families closed under join and meet, compared against the classifier.
  Formula lattice_axioms = parse_sentence(
      "(forall x. forall y. P(x) and P(y) -> P(x | y)) and "
      "(forall x. forall y. P(x) and P(y) -> P(x & y))");
  auto cls = defined_class_bitmaps(lattice_axioms, 2);
  CHECK(cls.size() == 13);
  for (std::uint64_t fb = 0; fb < family_count(2); ++fb) {
    bool in = std::find(cls.begin(), cls.end(), static_cast<FamilyBitmap>(fb)) != cls.end();
    CHECK(in == bitmap_is_lattice(2, static_cast<FamilyBitmap>(fb)));
  }

  auto bounded = defined_class_bitmaps(parse_sentence("P(0) and P(1)"), 2);
  CHECK(bounded.size() == 4);

  auto none = defined_class_bitmaps(parse_sentence("P(0) and not P(0)"), 2);
  CHECK(none.empty());

  CHECK_THROWS_AS(defined_class_bitmaps(lattice_axioms, 4), ResourceError);
}

TEST_CASE("exclusion certificates") {
  Formula join = parse_sentence(kJoinAxiom);
  Structure s = Structure::from_bitmap(2, 0b0110);  // {{0},{1}}
  auto cert = certify_exclusion(join, s);
  REQUIRE(cert.ok());
  const auto& c = cert.value();
  CHECK(c.assignment.size() == 2);
  CHECK(c.assignment[0].second == 0b01);
  CHECK(c.assignment[1].second == 0b10);
  CHECK(c.nbhd.pos().size() == 2);
  REQUIRE(c.nbhd.neg().size() == 1);
  CHECK(c.nbhd.neg()[0] == GroundSet::finite(2, 0b11));

  // A family with no universe falsifies P(1): pure negative certificate.
  auto cert2 = certify_exclusion(parse_sentence("P(1)"), Structure::from_bitmap(2, 0));
  REQUIRE(cert2.ok());
  CHECK(cert2.value().nbhd.pos().empty());
  CHECK(cert2.value().nbhd.neg()[0] == GroundSet::finite(2, 0b11));

  // Meet axiom on {{0},{1},{0,1}}: the empty meet is missing.
  Formula meet = parse_sentence(kMeetAxiom);
  auto cert3 = certify_exclusion(meet, Structure::from_bitmap(2, 0b1110));
  REQUIRE(cert3.ok());
  CHECK(cert3.value().nbhd.pos().size() == 2);
  CHECK(cert3.value().nbhd.neg()[0] == GroundSet::finite(2, 0b00));

  CHECK_THROWS_AS(certify_exclusion(join, Structure::from_bitmap(2, 0b1111)),
                  PreconditionError);
  auto not_uni = certify_exclusion(parse_sentence("exists x. P(x)"),
                                   Structure::from_bitmap(2, 0));
  CHECK_FALSE(not_uni.ok());
  CHECK(not_uni.failure().code == FailCode::NotUniversal);
}

TEST_CASE("certificates agree with the lattice separator on the class level") {
  Formula join = parse_sentence(kJoinAxiom), meet = parse_sentence(kMeetAxiom);
  for (int n = 2; n <= 3; ++n) {
    std::vector<FiniteFamily> lattices;
    for (std::uint64_t fb = 0; fb < family_count(n); ++fb) {
      if (bitmap_is_lattice(n, static_cast<FamilyBitmap>(fb))) {
        lattices.push_back(family_from_bitmap(n, static_cast<FamilyBitmap>(fb)));
      }
    }
    for (std::uint64_t fb = 0; fb < family_count(n); ++fb) {
      auto bm = static_cast<FamilyBitmap>(fb);
      if (bitmap_is_lattice(n, bm)) continue;
      FiniteFamily theta = family_from_bitmap(n, bm);
      Structure s = Structure::from_bitmap(n, bm);
      Neighborhood from_logic = [&] {
        if (!eval(s, join)) return certify_exclusion(join, s).value().nbhd;
        return certify_exclusion(meet, s).value().nbhd;
      }();
      Neighborhood from_witness = witnesses::separate_lattice(theta).value().nbhd;
      for (const auto& l : lattices) {
        FamilyOracle o = FamilyOracle::materialized(l);
        CHECK_FALSE(nbhd_member(o, from_logic));
        CHECK_FALSE(nbhd_member(o, from_witness));
      }
    }
  }
}

TEST_CASE("checking sentence collections") {
  std::vector<Formula> latb = {parse_sentence(kJoinAxiom), parse_sentence(kMeetAxiom),
                               parse_sentence("P(0) and P(1)")};
  CollectionReport all_good = check_collection(latb, Structure::from_bitmap(2, 0b1111));
  CHECK(all_good.in_class());
  CHECK(all_good.satisfied.size() == 3);

  CollectionReport bad = check_collection(latb, Structure::from_bitmap(2, 0b0010));
  CHECK_FALSE(bad.in_class());
  CHECK(bad.satisfied.size() == 2);  // closure axioms hold vacuously
  CHECK(bad.certificates.size() == 1);
  CHECK(bad.certificates[0].first == 2);

  CollectionReport empty = check_collection({}, Structure::from_bitmap(2, 0b0010));
  CHECK(empty.in_class());

  CHECK_THROWS_AS(check_collection({parse_sentence("exists x. P(x)")},
                                   Structure::from_bitmap(2, 0)),
                  PreconditionError);
}

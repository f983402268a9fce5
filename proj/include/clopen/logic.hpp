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

// First-order language of Boolean algebras with one unary predicate symbol P,
// interpreted over (P(X_n), F) for a finite universe X_n and a family F of
// subsets. Terms denote subsets; P(t) holds when the denoted subset is a
// member of F.
//
// Concrete syntax: variables are lowercase identifiers, constants 0 and 1,
// term operators ~ (complement), & (meet), | (join); atoms  s = t,  s <= t,
// P(t); connectives  not, and, or, ->  and quantifiers  forall x. / exists x.
// Precedence: ~ > & > |  and  not > and > or > ->; a quantifier body extends
// as far right as possible.

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "clopen/families.hpp"

namespace clopen::logic {

struct Term {
  enum class Kind { Var, Zero, One, Meet, Join, Compl };
  Kind kind = Kind::Zero;
  std::string name;        // Var
  std::vector<Term> kids;  // Meet/Join: 2, Compl: 1

  static Term var(std::string n);
  static Term zero();
  static Term one();
  static Term meet(Term a, Term b);
  static Term join(Term a, Term b);
  static Term complement(Term a);

  bool operator==(const Term&) const = default;
};

struct Formula {
  enum class Kind { Eq, Leq, Pred, Not, And, Or, Implies, Forall, Exists };
  Kind kind = Kind::Pred;
  Term lhs, rhs;              // Eq/Leq; Pred uses lhs only
  std::string var;            // quantifiers
  std::vector<Formula> kids;  // Not: 1, binary: 2, quantifier: 1

  static Formula eq(Term a, Term b);
  static Formula leq(Term a, Term b);
  static Formula pred(Term t);
  static Formula negation(Formula f);
  static Formula conj(Formula a, Formula b);
  static Formula disj(Formula a, Formula b);
  static Formula implies(Formula a, Formula b);
  static Formula forall(std::string v, Formula f);
  static Formula exists(std::string v, Formula f);

  bool operator==(const Formula&) const = default;
};

// Parse failure with position; also raised for unbound variables.
class ParseError : public ValidationError {
 public:
  ParseError(const std::string& msg, int line, int col)
      : ValidationError(msg + " at line " + std::to_string(line) + ", column " +
                        std::to_string(col)),
        line_(line),
        col_(col) {}
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_, col_;
};

// Parses one closed sentence.
Formula parse_sentence(const std::string& text);

std::string to_text(const Term& t);
std::string to_text(const Formula& f);

// Equivalent prenex form with only universal quantifiers and a CNF matrix.
// Vacuous quantifiers are dropped; an essential existential quantifier yields
// NotUniversal.
Outcome<Formula> to_universal(const Formula& f);

bool is_universal_form(const Formula& f);

struct Structure {
  int n = 1;
  FiniteFamily family;
  FamilyBitmap bitmap = 0;

  static Structure make(int n, const FiniteFamily& f);
  static Structure from_bitmap(int n, FamilyBitmap fb);
  bool has_member(std::uint32_t mask) const { return bitmap >> mask & 1; }
};

using Assignment = std::vector<std::pair<std::string, std::uint32_t>>;

bool eval(const Structure& s, const Formula& f);
bool eval(const Structure& s, const Formula& f, const Assignment& assignment);

// All families over X_n satisfying the closed formula; n <= 3.
std::vector<FamilyBitmap> defined_class_bitmaps(const Formula& f, int n);
std::vector<FiniteFamily> defined_class(const Formula& f, int n);

// Witness that a structure falsifies a universal sentence: a falsifying
// assignment plus the basic neighborhood carved from the values of the
// P-literals at that assignment. Every family in the neighborhood gives the
// P-literals the same truth values, hence also falsifies the sentence, so the
// neighborhood misses the defined class entirely.
struct ExclusionCertificate {
  std::string sentence;  // canonical text of the universal form
  int n = 1;
  FiniteFamily family;
  Assignment assignment;  // quantifier prefix order
  Neighborhood nbhd;
};

Outcome<ExclusionCertificate> certify_exclusion(const Formula& f, const Structure& s);

struct CollectionReport {
  std::vector<std::size_t> satisfied;
  std::vector<std::pair<std::size_t, ExclusionCertificate>> certificates;
  bool in_class() const { return certificates.empty(); }
};

// Per-sentence evaluation of a collection of universal sentences; a
// certificate for each failure.
CollectionReport check_collection(const std::vector<Formula>& sentences, const Structure& s);

// Sentences one per line; '#' starts a comment.
std::vector<std::pair<std::string, Formula>> load_corpus(const std::string& contents);

}  // namespace clopen::logic

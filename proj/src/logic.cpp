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

#include "clopen/logic.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace clopen::logic {

Term Term::var(std::string n) { return Term{Kind::Var, std::move(n), {}}; }
Term Term::zero() { return Term{Kind::Zero, {}, {}}; }
Term Term::one() { return Term{Kind::One, {}, {}}; }
Term Term::meet(Term a, Term b) { return Term{Kind::Meet, {}, {std::move(a), std::move(b)}}; }
Term Term::join(Term a, Term b) { return Term{Kind::Join, {}, {std::move(a), std::move(b)}}; }
Term Term::complement(Term a) { return Term{Kind::Compl, {}, {std::move(a)}}; }

Formula Formula::eq(Term a, Term b) {
  Formula f;
  f.kind = Kind::Eq;
  f.lhs = std::move(a);
  f.rhs = std::move(b);
  return f;
}
Formula Formula::leq(Term a, Term b) {
  Formula f;
  f.kind = Kind::Leq;
  f.lhs = std::move(a);
  f.rhs = std::move(b);
  return f;
}
Formula Formula::pred(Term t) {
  Formula f;
  f.kind = Kind::Pred;
  f.lhs = std::move(t);
  return f;
}
Formula Formula::negation(Formula a) {
  Formula f;
  f.kind = Kind::Not;
  f.kids.push_back(std::move(a));
  return f;
}
Formula Formula::conj(Formula a, Formula b) {
  Formula f;
  f.kind = Kind::And;
  f.kids = {std::move(a), std::move(b)};
  return f;
}
Formula Formula::disj(Formula a, Formula b) {
  Formula f;
  f.kind = Kind::Or;
  f.kids = {std::move(a), std::move(b)};
  return f;
}
Formula Formula::implies(Formula a, Formula b) {
  Formula f;
  f.kind = Kind::Implies;
  f.kids = {std::move(a), std::move(b)};
  return f;
}
Formula Formula::forall(std::string v, Formula a) {
  Formula f;
  f.kind = Kind::Forall;
  f.var = std::move(v);
  f.kids.push_back(std::move(a));
  return f;
}
Formula Formula::exists(std::string v, Formula a) {
  Formula f;
  f.kind = Kind::Exists;
  f.var = std::move(v);
  f.kids.push_back(std::move(a));
  return f;
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

namespace {

enum class Tok {
  Ident, Forall, Exists, And, Or, Not, Arrow, Amp, Pipe, Tilde,
  LParen, RParen, Dot, Eq, Leq, Zero, One, Pred, End,
};

struct Token {
  Tok kind;
  std::string text;
  int line, col;
};

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto push = [&](Tok k, std::string t) { out.push_back({k, std::move(t), line, col}); };
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      ++col;
      ++i;
      continue;
    }
    int startcol = col;
    auto emit = [&](Tok k, std::size_t len) {
      out.push_back({k, text.substr(i, len), line, startcol});
      i += len;
      col += static_cast<int>(len);
    };
    if (c == '(') { emit(Tok::LParen, 1); continue; }
    if (c == ')') { emit(Tok::RParen, 1); continue; }
    if (c == '.') { emit(Tok::Dot, 1); continue; }
    if (c == '&') { emit(Tok::Amp, 1); continue; }
    if (c == '|') { emit(Tok::Pipe, 1); continue; }
    if (c == '~') { emit(Tok::Tilde, 1); continue; }
    if (c == '=') { emit(Tok::Eq, 1); continue; }
    if (c == '<' && i + 1 < text.size() && text[i + 1] == '=') { emit(Tok::Leq, 2); continue; }
    if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') { emit(Tok::Arrow, 2); continue; }
    if (c == '0') { emit(Tok::Zero, 1); continue; }
    if (c == '1') { emit(Tok::One, 1); continue; }
    if (c == 'P' && !(i + 1 < text.size() && (std::isalnum(static_cast<unsigned char>(text[i + 1])) || text[i + 1] == '_'))) {
      emit(Tok::Pred, 1);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) {
        ++j;
      }
      std::string word = text.substr(i, j - i);
      Tok k = Tok::Ident;
      if (word == "forall") k = Tok::Forall;
      else if (word == "exists") k = Tok::Exists;
      else if (word == "and") k = Tok::And;
      else if (word == "or") k = Tok::Or;
      else if (word == "not") k = Tok::Not;
      emit(k, j - i);
      continue;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line, startcol);
  }
  push(Tok::End, "");
  return out;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : toks_(tokenize(text)) {}

  Formula parse() {
    Formula f = formula();
    expect(Tok::End, "end of sentence");
    return f;
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::vector<std::string> bound_;

  const Token& peek() const { return toks_[pos_]; }
  Token take() { return toks_[pos_++]; }
  bool accept(Tok k) {
    if (peek().kind == k) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(Tok k, const std::string& what) {
    if (!accept(k)) {
      throw ParseError("expected " + what, peek().line, peek().col);
    }
  }

  Formula formula() {
    Formula lhs = disjunction();
    if (accept(Tok::Arrow)) return Formula::implies(std::move(lhs), formula());
    return lhs;
  }

  Formula disjunction() {
    Formula f = conjunction();
    while (accept(Tok::Or)) f = Formula::disj(std::move(f), conjunction());
    return f;
  }

  Formula conjunction() {
    Formula f = unary();
    while (accept(Tok::And)) f = Formula::conj(std::move(f), unary());
    return f;
  }

  Formula unary() {
    if (accept(Tok::Not)) return Formula::negation(unary());
    if (peek().kind == Tok::Forall || peek().kind == Tok::Exists) {
      bool uni = take().kind == Tok::Forall;
      Token v = peek();
      expect(Tok::Ident, "a variable name");
      expect(Tok::Dot, "'.' after the quantified variable");
      bound_.push_back(v.text);
      Formula body = formula();
      bound_.pop_back();
      return uni ? Formula::forall(v.text, std::move(body))
                 : Formula::exists(v.text, std::move(body));
    }
    return atom();
  }

  Formula atom() {
    if (peek().kind == Tok::Pred) {
      take();
      expect(Tok::LParen, "'(' after P");
      Term t = term();
      expect(Tok::RParen, "')' closing P(...)");
      return Formula::pred(std::move(t));
    }
    if (peek().kind == Tok::LParen) {
      // Either a parenthesized formula or a parenthesized term beginning a
      // comparison; try the formula reading first and back off.
      std::size_t save = pos_;
      try {
        take();
        Formula f = formula();
        expect(Tok::RParen, "')'");
        return f;
      } catch (const ParseError&) {
        pos_ = save;
      }
    }
    Term t1 = term();
    if (accept(Tok::Eq)) return Formula::eq(std::move(t1), term());
    if (accept(Tok::Leq)) return Formula::leq(std::move(t1), term());
    throw ParseError("expected '=' or '<=' after a term", peek().line, peek().col);
  }

  Term term() {  // join level
    Term t = meet();
    while (accept(Tok::Pipe)) t = Term::join(std::move(t), meet());
    return t;
  }

  Term meet() {
    Term t = factor();
    while (accept(Tok::Amp)) t = Term::meet(std::move(t), factor());
    return t;
  }

  Term factor() {
    if (accept(Tok::Tilde)) return Term::complement(factor());
    if (accept(Tok::Zero)) return Term::zero();
    if (accept(Tok::One)) return Term::one();
    if (peek().kind == Tok::Ident) {
      Token v = take();
      if (std::find(bound_.begin(), bound_.end(), v.text) == bound_.end()) {
        throw ParseError("unbound variable '" + v.text + "'", v.line, v.col);
      }
      return Term::var(v.text);
    }
    if (accept(Tok::LParen)) {
      Term t = term();
      expect(Tok::RParen, "')'");
      return t;
    }
    throw ParseError("expected a term", peek().line, peek().col);
  }
};

}  // namespace

Formula parse_sentence(const std::string& text) { return Parser(text).parse(); }

// ---------------------------------------------------------------------------
// Printing (minimal parentheses)
// ---------------------------------------------------------------------------

namespace {

int term_prec(Term::Kind k) {
  switch (k) {
    case Term::Kind::Join: return 1;
    case Term::Kind::Meet: return 2;
    case Term::Kind::Compl: return 3;
    default: return 4;
  }
}

void print_term(std::ostream& os, const Term& t, int parent) {
  int p = term_prec(t.kind);
  bool wrap = p < parent;
  if (wrap) os << "(";
  switch (t.kind) {
    case Term::Kind::Var: os << t.name; break;
    case Term::Kind::Zero: os << "0"; break;
    case Term::Kind::One: os << "1"; break;
    case Term::Kind::Join:
      print_term(os, t.kids[0], p);
      os << " | ";
      print_term(os, t.kids[1], p + 1);
      break;
    case Term::Kind::Meet:
      print_term(os, t.kids[0], p);
      os << " & ";
      print_term(os, t.kids[1], p + 1);
      break;
    case Term::Kind::Compl:
      os << "~";
      print_term(os, t.kids[0], p);
      break;
  }
  if (wrap) os << ")";
}

// 0 = top/quantifier body (never wrapped), then -> 1, or 2, and 3, not 4.
int formula_prec(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::Implies: return 1;
    case Formula::Kind::Or: return 2;
    case Formula::Kind::And: return 3;
    case Formula::Kind::Not: return 4;
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: return 0;
    default: return 5;
  }
}

void print_formula(std::ostream& os, const Formula& f, int parent) {
  int p = formula_prec(f.kind);
  bool wrap = p < parent || (p == 0 && parent > 0);
  if (wrap) os << "(";
  switch (f.kind) {
    case Formula::Kind::Eq:
      print_term(os, f.lhs, 0);
      os << " = ";
      print_term(os, f.rhs, 0);
      break;
    case Formula::Kind::Leq:
      print_term(os, f.lhs, 0);
      os << " <= ";
      print_term(os, f.rhs, 0);
      break;
    case Formula::Kind::Pred:
      os << "P(";
      print_term(os, f.lhs, 0);
      os << ")";
      break;
    case Formula::Kind::Not:
      os << "not ";
      print_formula(os, f.kids[0], 4);
      break;
    case Formula::Kind::And:
      print_formula(os, f.kids[0], 3);
      os << " and ";
      print_formula(os, f.kids[1], 4);
      break;
    case Formula::Kind::Or:
      print_formula(os, f.kids[0], 2);
      os << " or ";
      print_formula(os, f.kids[1], 3);
      break;
    case Formula::Kind::Implies:
      print_formula(os, f.kids[0], 2);
      os << " -> ";
      print_formula(os, f.kids[1], 1);
      break;
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
      os << (f.kind == Formula::Kind::Forall ? "forall " : "exists ") << f.var << ". ";
      print_formula(os, f.kids[0], 0);
      break;
  }
  if (wrap) os << ")";
}

}  // namespace

std::string to_text(const Term& t) {
  std::ostringstream os;
  print_term(os, t, 0);
  return os.str();
}

std::string to_text(const Formula& f) {
  std::ostringstream os;
  print_formula(os, f, 0);
  return os.str();
}

// ---------------------------------------------------------------------------
// Universal prenex CNF
// ---------------------------------------------------------------------------

namespace {

Formula elim_implies(const Formula& f) {
  switch (f.kind) {
    case Formula::Kind::Implies:
      return Formula::disj(Formula::negation(elim_implies(f.kids[0])), elim_implies(f.kids[1]));
    case Formula::Kind::Not:
      return Formula::negation(elim_implies(f.kids[0]));
    case Formula::Kind::And:
      return Formula::conj(elim_implies(f.kids[0]), elim_implies(f.kids[1]));
    case Formula::Kind::Or:
      return Formula::disj(elim_implies(f.kids[0]), elim_implies(f.kids[1]));
    case Formula::Kind::Forall:
      return Formula::forall(f.var, elim_implies(f.kids[0]));
    case Formula::Kind::Exists:
      return Formula::exists(f.var, elim_implies(f.kids[0]));
    default:
      return f;
  }
}

Formula nnf(const Formula& f, bool positive) {
  switch (f.kind) {
    case Formula::Kind::Not:
      return nnf(f.kids[0], !positive);
    case Formula::Kind::And: {
      Formula l = nnf(f.kids[0], positive), r = nnf(f.kids[1], positive);
      return positive ? Formula::conj(std::move(l), std::move(r))
                      : Formula::disj(std::move(l), std::move(r));
    }
    case Formula::Kind::Or: {
      Formula l = nnf(f.kids[0], positive), r = nnf(f.kids[1], positive);
      return positive ? Formula::disj(std::move(l), std::move(r))
                      : Formula::conj(std::move(l), std::move(r));
    }
    case Formula::Kind::Forall: {
      Formula b = nnf(f.kids[0], positive);
      return positive ? Formula::forall(f.var, std::move(b))
                      : Formula::exists(f.var, std::move(b));
    }
    case Formula::Kind::Exists: {
      Formula b = nnf(f.kids[0], positive);
      return positive ? Formula::exists(f.var, std::move(b))
                      : Formula::forall(f.var, std::move(b));
    }
    default:
      return positive ? f : Formula::negation(f);
  }
}

void collect_term_vars(const Term& t, std::unordered_set<std::string>& out) {
  if (t.kind == Term::Kind::Var) out.insert(t.name);
  for (const auto& k : t.kids) collect_term_vars(k, out);
}

void collect_free_vars(const Formula& f, std::unordered_set<std::string>& out) {
  switch (f.kind) {
    case Formula::Kind::Eq:
    case Formula::Kind::Leq:
      collect_term_vars(f.lhs, out);
      collect_term_vars(f.rhs, out);
      break;
    case Formula::Kind::Pred:
      collect_term_vars(f.lhs, out);
      break;
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      std::unordered_set<std::string> inner;
      collect_free_vars(f.kids[0], inner);
      inner.erase(f.var);
      out.insert(inner.begin(), inner.end());
      break;
    }
    default:
      for (const auto& k : f.kids) collect_free_vars(k, out);
  }
}

Term subst_term(const Term& t, const std::string& from, const std::string& to) {
  if (t.kind == Term::Kind::Var) return t.name == from ? Term::var(to) : t;
  Term r = t;
  for (auto& k : r.kids) k = subst_term(k, from, to);
  return r;
}

Formula subst_var(const Formula& f, const std::string& from, const std::string& to) {
  switch (f.kind) {
    case Formula::Kind::Eq:
      return Formula::eq(subst_term(f.lhs, from, to), subst_term(f.rhs, from, to));
    case Formula::Kind::Leq:
      return Formula::leq(subst_term(f.lhs, from, to), subst_term(f.rhs, from, to));
    case Formula::Kind::Pred:
      return Formula::pred(subst_term(f.lhs, from, to));
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      if (f.var == from) return f;  // shadowed
      Formula r = f;
      r.kids[0] = subst_var(f.kids[0], from, to);
      return r;
    }
    default: {
      Formula r = f;
      for (auto& k : r.kids) k = subst_var(k, from, to);
      return r;
    }
  }
}

struct QuantifierStep {
  bool universal;
  std::string var;
};

// Renames bound variables apart and pulls quantifiers to the front. Input is
// implication-free NNF, so quantifiers commute out directly.
void pull_quantifiers(const Formula& f, std::vector<QuantifierStep>& prefix, Formula& matrix,
                      std::unordered_set<std::string>& used) {
  switch (f.kind) {
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      std::string name = f.var;
      int suffix = 0;
      while (used.count(name)) name = f.var + "_" + std::to_string(++suffix);
      used.insert(name);
      Formula body = name == f.var ? f.kids[0] : subst_var(f.kids[0], f.var, name);
      prefix.push_back({f.kind == Formula::Kind::Forall, name});
      pull_quantifiers(body, prefix, matrix, used);
      break;
    }
    case Formula::Kind::And:
    case Formula::Kind::Or: {
      Formula l, r;
      pull_quantifiers(f.kids[0], prefix, l, used);
      pull_quantifiers(f.kids[1], prefix, r, used);
      matrix = f.kind == Formula::Kind::And ? Formula::conj(std::move(l), std::move(r))
                                            : Formula::disj(std::move(l), std::move(r));
      break;
    }
    default:
      matrix = f;
  }
}

Formula cnf(const Formula& f) {
  if (f.kind == Formula::Kind::And) {
    return Formula::conj(cnf(f.kids[0]), cnf(f.kids[1]));
  }
  if (f.kind == Formula::Kind::Or) {
    Formula l = cnf(f.kids[0]), r = cnf(f.kids[1]);
    if (l.kind == Formula::Kind::And) {
      return Formula::conj(cnf(Formula::disj(l.kids[0], r)), cnf(Formula::disj(l.kids[1], r)));
    }
    if (r.kind == Formula::Kind::And) {
      return Formula::conj(cnf(Formula::disj(l, r.kids[0])), cnf(Formula::disj(l, r.kids[1])));
    }
    return Formula::disj(std::move(l), std::move(r));
  }
  return f;
}

}  // namespace

bool is_universal_form(const Formula& f) {
  const Formula* cur = &f;
  while (cur->kind == Formula::Kind::Forall) cur = &cur->kids[0];
  // quantifier-free matrix
  std::vector<const Formula*> stack{cur};
  while (!stack.empty()) {
    const Formula* g = stack.back();
    stack.pop_back();
    if (g->kind == Formula::Kind::Forall || g->kind == Formula::Kind::Exists) return false;
    for (const auto& k : g->kids) stack.push_back(&k);
  }
  return true;
}

Outcome<Formula> to_universal(const Formula& f) {
  Formula base = nnf(elim_implies(f), true);
  std::vector<QuantifierStep> prefix;
  Formula matrix;
  std::unordered_set<std::string> used;
  pull_quantifiers(base, prefix, matrix, used);

  std::unordered_set<std::string> free;
  collect_free_vars(matrix, free);
  for (const auto& step : prefix) {
    if (!free.count(step.var)) continue;  // vacuous quantifiers drop out
    if (!step.universal) {
      return fail(FailCode::NotUniversal,
                  "essential existential quantifier over '" + step.var + "'");
    }
  }
  Formula out = cnf(matrix);
  for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) {
    if (free.count(it->var)) out = Formula::forall(it->var, std::move(out));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

Structure Structure::make(int n, const FiniteFamily& f) {
  if (n < 1 || n > 4) throw ValidationError("structure universe size must be in [1,4]");
  if (f.universe() != Universe::finite(n)) {
    throw ValidationError("family universe does not match the structure size");
  }
  Structure s;
  s.n = n;
  s.family = f;
  s.bitmap = bitmap_from_family(f);
  return s;
}

Structure Structure::from_bitmap(int n, FamilyBitmap fb) {
  Structure s;
  s.n = n;
  s.family = family_from_bitmap(n, fb);
  s.bitmap = fb;
  return s;
}

namespace {

std::uint32_t term_value(const Term& t, int n, const Assignment& env) {
  switch (t.kind) {
    case Term::Kind::Var:
      for (auto it = env.rbegin(); it != env.rend(); ++it) {
        if (it->first == t.name) return it->second;
      }
      throw ValidationError("assignment does not cover variable '" + t.name + "'");
    case Term::Kind::Zero:
      return 0;
    case Term::Kind::One:
      return (std::uint32_t{1} << n) - 1;
    case Term::Kind::Meet:
      return term_value(t.kids[0], n, env) & term_value(t.kids[1], n, env);
    case Term::Kind::Join:
      return term_value(t.kids[0], n, env) | term_value(t.kids[1], n, env);
    case Term::Kind::Compl:
      return ((std::uint32_t{1} << n) - 1) & ~term_value(t.kids[0], n, env);
  }
  return 0;
}

bool eval_rec(const Structure& s, const Formula& f, Assignment& env) {
  switch (f.kind) {
    case Formula::Kind::Eq:
      return term_value(f.lhs, s.n, env) == term_value(f.rhs, s.n, env);
    case Formula::Kind::Leq: {
      std::uint32_t a = term_value(f.lhs, s.n, env), b = term_value(f.rhs, s.n, env);
      return (a & b) == a;
    }
    case Formula::Kind::Pred:
      return s.has_member(term_value(f.lhs, s.n, env));
    case Formula::Kind::Not:
      return !eval_rec(s, f.kids[0], env);
    case Formula::Kind::And:
      return eval_rec(s, f.kids[0], env) && eval_rec(s, f.kids[1], env);
    case Formula::Kind::Or:
      return eval_rec(s, f.kids[0], env) || eval_rec(s, f.kids[1], env);
    case Formula::Kind::Implies:
      return !eval_rec(s, f.kids[0], env) || eval_rec(s, f.kids[1], env);
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      bool uni = f.kind == Formula::Kind::Forall;
      std::uint32_t subsets = std::uint32_t{1} << s.n;
      env.emplace_back(f.var, 0);
      for (std::uint32_t m = 0; m < subsets; ++m) {
        env.back().second = m;
        bool v = eval_rec(s, f.kids[0], env);
        if (uni && !v) {
          env.pop_back();
          return false;
        }
        if (!uni && v) {
          env.pop_back();
          return true;
        }
      }
      env.pop_back();
      return uni;
    }
  }
  return false;
}

}  // namespace

bool eval(const Structure& s, const Formula& f) {
  Assignment env;
  return eval_rec(s, f, env);
}

bool eval(const Structure& s, const Formula& f, const Assignment& assignment) {
  Assignment env = assignment;
  return eval_rec(s, f, env);
}

std::vector<FamilyBitmap> defined_class_bitmaps(const Formula& f, int n) {
  if (n < 1 || n > 3) throw ResourceError("class enumeration is limited to n in [1,3]");
  std::vector<FamilyBitmap> out;
  std::uint64_t total = family_count(n);
  for (std::uint64_t fb = 0; fb < total; ++fb) {
    Structure s = Structure::from_bitmap(n, static_cast<FamilyBitmap>(fb));
    if (eval(s, f)) out.push_back(static_cast<FamilyBitmap>(fb));
  }
  return out;
}

std::vector<FiniteFamily> defined_class(const Formula& f, int n) {
  std::vector<FiniteFamily> out;
  for (FamilyBitmap fb : defined_class_bitmaps(f, n)) out.push_back(family_from_bitmap(n, fb));
  return out;
}

// ---------------------------------------------------------------------------
// Certificates
// ---------------------------------------------------------------------------

namespace {

void collect_pred_values(const Formula& matrix, int n, const Assignment& env,
                         std::vector<std::uint32_t>& out) {
  switch (matrix.kind) {
    case Formula::Kind::Pred: {
      std::uint32_t v = term_value(matrix.lhs, n, env);
      if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
      break;
    }
    case Formula::Kind::Eq:
    case Formula::Kind::Leq:
      break;  // truth independent of the family
    default:
      for (const auto& k : matrix.kids) collect_pred_values(k, n, env, out);
  }
}

}  // namespace

Outcome<ExclusionCertificate> certify_exclusion(const Formula& f, const Structure& s) {
  Outcome<Formula> uni = to_universal(f);
  if (!uni.ok()) return uni.failure();
  const Formula& phi = uni.value();
  if (eval(s, phi)) {
    throw PreconditionError("the sentence holds in the structure; nothing to certify");
  }

  std::vector<std::string> vars;
  const Formula* matrix = &phi;
  while (matrix->kind == Formula::Kind::Forall) {
    vars.push_back(matrix->var);
    matrix = &matrix->kids[0];
  }

  std::uint32_t subsets = std::uint32_t{1} << s.n;
  std::uint64_t combos = 1;
  for (std::size_t i = 0; i < vars.size(); ++i) combos *= subsets;

  Assignment env;
  bool found = false;
  // First variable is the most significant digit, so the last one cycles
  // fastest.
  for (std::uint64_t idx = 0; idx < combos && !found; ++idx) {
    env.clear();
    std::uint64_t rest = idx;
    for (std::size_t i = vars.size(); i-- > 0;) {
      env.emplace_back(vars[i], static_cast<std::uint32_t>(rest % subsets));
      rest /= subsets;
    }
    std::reverse(env.begin(), env.end());
    if (!eval(s, *matrix, env)) found = true;
  }
  if (!found) {
    throw PreconditionError("no falsifying assignment found");  // unreachable given eval false
  }

  std::vector<std::uint32_t> values;
  collect_pred_values(*matrix, s.n, env, values);
  std::vector<GroundSet> pos, neg;
  for (std::uint32_t v : values) {
    (s.has_member(v) ? pos : neg).push_back(GroundSet::finite(s.n, v));
  }
  ExclusionCertificate cert;
  cert.sentence = to_text(phi);
  cert.n = s.n;
  cert.family = s.family;
  cert.assignment = env;
  cert.nbhd = Neighborhood::make(Universe::finite(s.n), std::move(pos), std::move(neg));
  return cert;
}

CollectionReport check_collection(const std::vector<Formula>& sentences, const Structure& s) {
  CollectionReport rep;
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    Outcome<Formula> uni = to_universal(sentences[i]);
    if (!uni.ok()) {
      throw PreconditionError("sentence " + std::to_string(i) + " is not universal");
    }
    if (eval(s, uni.value())) {
      rep.satisfied.push_back(i);
    } else {
      Outcome<ExclusionCertificate> cert = certify_exclusion(sentences[i], s);
      rep.certificates.emplace_back(i, cert.value());
    }
  }
  return rep;
}

std::vector<std::pair<std::string, Formula>> load_corpus(const std::string& contents) {
  std::vector<std::pair<std::string, Formula>> out;
  std::istringstream in(contents);
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line = line.substr(0, hash);
    std::size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    std::size_t e = line.find_last_not_of(" \t\r");
    std::string text = line.substr(b, e - b + 1);
    out.emplace_back(text, parse_sentence(text));
  }
  return out;
}

}  // namespace clopen::logic

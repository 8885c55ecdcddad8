// Copyright 2026 The negtreat Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// First-order formulas in a small TPTP-flavoured syntax:
//
//   formula := quant | binary | unary | atom | "(" formula ")"
//   quant   := ("?" | "!") "[" Var ("," Var)* "]" ":" formula
//   unary   := "~" formula
//   binary  := "(" formula (("&" | "|") formula)+ ")"
//            | "(" formula "=>" formula ")"
//   atom    := ident "(" term ("," term)* ")"
//
// Variables start with an upper-case letter, constants with anything else.
// Besides parsing and printing, this header holds the negation rewrites:
// double-negation removal, negation-site enumeration, scope narrowing and
// replacement of a negated atom by its inverse.

#ifndef NEGTREAT_FOL_HPP_
#define NEGTREAT_FOL_HPP_

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace negtreat::fol {

struct Term {
  enum class Kind { kVariable, kConstant };

  Kind kind = Kind::kConstant;
  std::string name;

  static Term Variable(std::string name) {
    return {Kind::kVariable, std::move(name)};
  }
  static Term Constant(std::string name) {
    return {Kind::kConstant, std::move(name)};
  }
  bool is_variable() const { return kind == Kind::kVariable; }

  friend bool operator==(const Term&, const Term&) = default;
};

enum class Connective { kAtom, kNot, kAnd, kOr, kExists, kForall, kImplies };

// A formula node. Which fields are meaningful depends on `op`:
//   kAtom            predicate, args
//   kNot             children[0]
//   kAnd, kOr        children (two or more)
//   kExists, kForall vars, children[0]
//   kImplies         children[0] => children[1]
struct Formula {
  Connective op = Connective::kAtom;
  std::string predicate;
  std::vector<Term> args;
  std::vector<std::string> vars;
  std::vector<Formula> children;

  static Formula Atom(std::string predicate, std::vector<Term> args) {
    Formula f;
    f.op = Connective::kAtom;
    f.predicate = std::move(predicate);
    f.args = std::move(args);
    return f;
  }
  static Formula Not(Formula body) {
    Formula f;
    f.op = Connective::kNot;
    f.children.push_back(std::move(body));
    return f;
  }
  static Formula And(std::vector<Formula> conjuncts) {
    Formula f;
    f.op = Connective::kAnd;
    f.children = std::move(conjuncts);
    return f;
  }
  static Formula Or(std::vector<Formula> disjuncts) {
    Formula f;
    f.op = Connective::kOr;
    f.children = std::move(disjuncts);
    return f;
  }
  static Formula Exists(std::vector<std::string> vars, Formula body) {
    Formula f;
    f.op = Connective::kExists;
    f.vars = std::move(vars);
    f.children.push_back(std::move(body));
    return f;
  }
  static Formula Forall(std::vector<std::string> vars, Formula body) {
    Formula f;
    f.op = Connective::kForall;
    f.vars = std::move(vars);
    f.children.push_back(std::move(body));
    return f;
  }
  static Formula Implies(Formula antecedent, Formula consequent) {
    Formula f;
    f.op = Connective::kImplies;
    f.children.push_back(std::move(antecedent));
    f.children.push_back(std::move(consequent));
    return f;
  }

  bool is_atom() const { return op == Connective::kAtom; }
  bool is_not() const { return op == Connective::kNot; }
  bool is_quantifier() const {
    return op == Connective::kExists || op == Connective::kForall;
  }
  const Formula& body() const { return children.front(); }

  friend bool operator==(const Formula&, const Formula&) = default;
};

// Child indices from the root down to a node.
using Path = std::vector<std::size_t>;

inline const Formula& At(const Formula& root, const Path& path) {
  const Formula* node = &root;
  for (std::size_t i : path) {
    if (i >= node->children.size()) {
      throw std::out_of_range("formula path does not resolve");
    }
    node = &node->children[i];
  }
  return *node;
}

inline Formula& At(Formula& root, const Path& path) {
  return const_cast<Formula&>(At(static_cast<const Formula&>(root), path));
}

inline Path Extend(Path path, std::size_t child) {
  path.push_back(child);
  return path;
}

// Number of nodes with connective `op` in `f`.
inline std::size_t Count(const Formula& f, Connective op) {
  std::size_t n = f.op == op ? 1 : 0;
  for (const Formula& c : f.children) n += Count(c, op);
  return n;
}

// Atoms in document order.
inline void CollectAtoms(const Formula& f, std::vector<Formula>& out) {
  if (f.is_atom()) {
    out.push_back(f);
    return;
  }
  for (const Formula& c : f.children) CollectAtoms(c, out);
}

inline std::vector<Formula> Atoms(const Formula& f) {
  std::vector<Formula> out;
  CollectAtoms(f, out);
  return out;
}

// ---------------------------------------------------------------------------
// Printing.

inline std::string Print(const Term& t) { return t.name; }

inline std::string Print(const Formula& f) {
  switch (f.op) {
    case Connective::kAtom: {
      std::string s = f.predicate + "(";
      for (std::size_t i = 0; i < f.args.size(); ++i) {
        if (i) s += ",";
        s += f.args[i].name;
      }
      return s + ")";
    }
    case Connective::kNot:
      return "~ " + Print(f.body());
    case Connective::kAnd:
    case Connective::kOr: {
      const char* sep = f.op == Connective::kAnd ? " & " : " | ";
      std::string s = "(";
      for (std::size_t i = 0; i < f.children.size(); ++i) {
        if (i) s += sep;
        s += Print(f.children[i]);
      }
      return s + ")";
    }
    case Connective::kImplies:
      return "(" + Print(f.children[0]) + " => " + Print(f.children[1]) + ")";
    case Connective::kExists:
    case Connective::kForall: {
      std::string s = f.op == Connective::kExists ? "? [" : "! [";
      for (std::size_t i = 0; i < f.vars.size(); ++i) {
        if (i) s += ",";
        s += f.vars[i];
      }
      s += "] : ";
      const Formula& b = f.body();
      bool bracketed = b.op == Connective::kAnd || b.op == Connective::kOr ||
                       b.op == Connective::kImplies;
      return bracketed ? s + Print(b) : s + "(" + Print(b) + ")";
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// Parsing.

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column,
             std::vector<std::string> expected, const std::string& found)
      : std::runtime_error(Describe(line, column, expected, found)),
        line_(line),
        column_(column),
        expected_(std::move(expected)) {}

  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  static std::string Describe(std::size_t line, std::size_t column,
                              const std::vector<std::string>& expected,
                              const std::string& found) {
    std::string s = "line " + std::to_string(line) + ", column " +
                    std::to_string(column) + ": expected ";
    if (expected.size() > 1) s += "one of ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i) s += ", ";
      s += expected[i];
    }
    return s + " but found " + found;
  }

  std::size_t line_;
  std::size_t column_;
  std::vector<std::string> expected_;
};

class UnboundVariableError : public ParseError {
 public:
  UnboundVariableError(std::size_t line, std::size_t column,
                       const std::string& name)
      : ParseError(line, column, "unbound variable " + name),
        name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

struct ParseOptions {
  // Allow free variables, as in clause templates like "math(X) => subj(X)".
  bool open_clause = false;
};

namespace detail {

class Parser {
 public:
  Parser(std::string_view text, ParseOptions options)
      : text_(text), options_(options) {}

  Formula ParseAll() {
    Formula f = ParseFormula();
    SkipSpace();
    if (pos_ < text_.size()) Fail({"end of input"});
    return f;
  }

 private:
  struct Token {
    enum Kind { kEnd, kIdent, kPunct } kind;
    std::string text;
    std::size_t line, column;
  };

  void SkipSpace() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      Advance();
    }
  }

  void Advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  static bool IsIdentChar(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  Token Peek() {
    SkipSpace();
    Token t{Token::kEnd, "", line_, column_};
    if (pos_ >= text_.size()) return t;
    char c = text_[pos_];
    if (IsIdentChar(c)) {
      std::size_t end = pos_;
      while (end < text_.size() && IsIdentChar(text_[end])) ++end;
      t.kind = Token::kIdent;
      t.text = std::string(text_.substr(pos_, end - pos_));
      return t;
    }
    t.kind = Token::kPunct;
    if (text_.substr(pos_, 2) == "=>") {
      t.text = "=>";
    } else {
      t.text = std::string(1, c);
    }
    return t;
  }

  Token Next() {
    Token t = Peek();
    for (std::size_t i = 0; i < t.text.size(); ++i) Advance();
    return t;
  }

  static std::string Show(const Token& t) {
    return t.kind == Token::kEnd ? "end of input" : "'" + t.text + "'";
  }

  [[noreturn]] void Fail(std::vector<std::string> expected) {
    Token t = Peek();
    throw ParseError(t.line, t.column, std::move(expected), Show(t));
  }

  void Expect(const std::string& punct) {
    Token t = Peek();
    if (t.kind != Token::kPunct || t.text != punct) Fail({"'" + punct + "'"});
    Next();
  }

  static bool IsVariableName(const std::string& s) {
    return !s.empty() && std::isupper(static_cast<unsigned char>(s[0]));
  }

  Formula ParseFormula() {
    Token t = Peek();
    if (t.kind == Token::kPunct) {
      if (t.text == "?" || t.text == "!") return ParseQuantifier();
      if (t.text == "~") {
        Next();
        return Formula::Not(ParseFormula());
      }
      if (t.text == "(") return ParseParenthesized();
    } else if (t.kind == Token::kIdent) {
      return ParseAtom();
    }
    Fail({"'?'", "'!'", "'~'", "'('", "identifier"});
  }

  Formula ParseQuantifier() {
    Token q = Next();
    Expect("[");
    std::vector<std::string> vars;
    for (;;) {
      Token v = Peek();
      if (v.kind != Token::kIdent || !IsVariableName(v.text)) {
        Fail({"variable"});
      }
      Next();
      vars.push_back(v.text);
      if (Peek().text == ",") {
        Next();
        continue;
      }
      break;
    }
    Expect("]");
    Expect(":");
    bound_.push_back(vars);
    Formula body = ParseFormula();
    bound_.pop_back();
    return q.text == "?" ? Formula::Exists(std::move(vars), std::move(body))
                         : Formula::Forall(std::move(vars), std::move(body));
  }

  Formula ParseParenthesized() {
    Expect("(");
    std::vector<Formula> parts;
    parts.push_back(ParseFormula());
    Token t = Peek();
    if (t.kind == Token::kPunct && t.text == ")") {
      Next();
      return std::move(parts.front());
    }
    if (t.kind == Token::kPunct && t.text == "=>") {
      Next();
      Formula rhs = ParseFormula();
      Expect(")");
      return Formula::Implies(std::move(parts.front()), std::move(rhs));
    }
    if (t.kind != Token::kPunct || (t.text != "&" && t.text != "|")) {
      Fail({"'&'", "'|'", "'=>'", "')'"});
    }
    const std::string op = t.text;
    while (Peek().text == op && Peek().kind == Token::kPunct) {
      Next();
      parts.push_back(ParseFormula());
    }
    Token close = Peek();
    if (close.kind != Token::kPunct || close.text != ")") {
      Fail({"'" + op + "'", "')'"});
    }
    Next();
    return op == "&" ? Formula::And(std::move(parts))
                     : Formula::Or(std::move(parts));
  }

  Formula ParseAtom() {
    Token name = Next();
    Expect("(");
    std::vector<Term> args;
    for (;;) {
      Token a = Peek();
      if (a.kind != Token::kIdent) Fail({"term"});
      Next();
      if (Peek().text == "(") {
        Token p = Peek();
        throw ParseError(p.line, p.column,
                         "function symbols are not supported");
      }
      if (IsVariableName(a.text)) {
        if (!options_.open_clause && !IsBound(a.text)) {
          throw UnboundVariableError(a.line, a.column, a.text);
        }
        args.push_back(Term::Variable(a.text));
      } else {
        args.push_back(Term::Constant(a.text));
      }
      Token sep = Peek();
      if (sep.kind == Token::kPunct && sep.text == ",") {
        Next();
        continue;
      }
      if (sep.kind == Token::kPunct && sep.text == ")") {
        Next();
        break;
      }
      Fail({"','", "')'"});
    }
    std::string predicate = name.text;
    std::transform(predicate.begin(), predicate.end(), predicate.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return Formula::Atom(std::move(predicate), std::move(args));
  }

  bool IsBound(const std::string& v) const {
    for (const auto& scope : bound_) {
      if (std::find(scope.begin(), scope.end(), v) != scope.end()) return true;
    }
    return false;
  }

  std::string_view text_;
  ParseOptions options_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
  std::vector<std::vector<std::string>> bound_;
};

}  // namespace detail

inline Formula Parse(std::string_view text, ParseOptions options = {}) {
  return detail::Parser(text, options).ParseAll();
}

// ---------------------------------------------------------------------------
// Negation rewrites.

inline Formula RemoveDoubleNegation(const Formula& f) {
  Formula out = f;
  for (Formula& c : out.children) c = RemoveDoubleNegation(c);
  if (out.is_not() && out.body().is_not()) {
    Formula inner = out.body().body();
    return inner;
  }
  return out;
}

// Lemma form of a predicate name: lower-cased, and for underscore compounds
// the last component ("school_subject" -> "subject").
inline std::string PredicateLemma(std::string_view predicate) {
  std::string s(predicate);
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  while (!s.empty() && s.back() == '_') s.pop_back();
  std::size_t cut = s.rfind('_');
  return cut == std::string::npos ? s : s.substr(cut + 1);
}

inline const std::set<std::string>& DefaultRolePredicates() {
  static const std::set<std::string> roles = {
      "actor", "theme", "topic", "manner", "agent", "patient", "recipient",
      "of"};
  return roles;
}

struct ScopeOptions {
  // Predicates that only carry thematic roles; never part of a scope set.
  std::set<std::string> excluded_roles = DefaultRolePredicates();
  // When true, atoms under a nested negation also count for the outer one.
  bool include_nested = false;
};

struct NegationSite {
  std::size_t site_id = 0;  // 1-based, pre-order
  Path path;                // to the Not node
  std::set<std::string> scope_lemmas;
  std::vector<Path> scope_atoms;  // absolute paths, document order

  friend bool operator==(const NegationSite&, const NegationSite&) = default;
};

namespace detail {

inline void ScopeAtoms(const Formula& f, const Path& at,
                       const ScopeOptions& options, std::vector<Path>& out) {
  if (f.is_atom()) {
    if (!options.excluded_roles.count(f.predicate)) out.push_back(at);
    return;
  }
  if (f.is_not() && !options.include_nested) return;
  for (std::size_t i = 0; i < f.children.size(); ++i) {
    ScopeAtoms(f.children[i], Extend(at, i), options, out);
  }
}

// Atoms in the scope of the Not node at `not_path`.
inline std::vector<Path> ScopeOf(const Formula& root, const Path& not_path,
                                 const ScopeOptions& options) {
  std::vector<Path> out;
  ScopeAtoms(At(root, not_path).body(), Extend(not_path, 0), options, out);
  return out;
}

inline void CollectSites(const Formula& root, const Formula& f,
                         const Path& at, const ScopeOptions& options,
                         std::vector<NegationSite>& out) {
  if (f.is_not()) {
    NegationSite site;
    site.site_id = out.size() + 1;
    site.path = at;
    site.scope_atoms = ScopeOf(root, at, options);
    for (const Path& p : site.scope_atoms) {
      site.scope_lemmas.insert(PredicateLemma(At(root, p).predicate));
    }
    out.push_back(std::move(site));
  }
  for (std::size_t i = 0; i < f.children.size(); ++i) {
    CollectSites(root, f.children[i], Extend(at, i), options, out);
  }
}

inline bool MatchesLemma(const Formula& atom, std::string_view lemma) {
  return PredicateLemma(atom.predicate) == lemma || atom.predicate == lemma;
}

}  // namespace detail

// One site per Not node, in pre-order. Expects double negations removed.
inline std::vector<NegationSite> CollectNegations(
    const Formula& f, const ScopeOptions& options = {}) {
  std::vector<NegationSite> sites;
  detail::CollectSites(f, f, {}, options, sites);
  return sites;
}

enum class NarrowStatus {
  kNarrowed,        // scope moved onto a single atom
  kAlreadyMinimal,  // the Not already wrapped exactly that atom
  kNoMatchingAtom,  // formula passed through unchanged
};

struct NarrowResult {
  Formula formula;
  NarrowStatus status = NarrowStatus::kNoMatchingAtom;
  Path negated;  // path of the Not that now wraps the negatus atom
};

// Moves the negation at `site.path` onto the first atom of its scope whose
// predicate lemma is `negatus_lemma`. Everything else in the former scope is
// kept as is, now unnegated. The scope is recomputed on `f`, so a site taken
// from an earlier version of the formula stays usable as long as its path
// still addresses the same Not node.
inline NarrowResult NarrowScope(const Formula& f, const NegationSite& site,
                                std::string_view negatus_lemma,
                                const ScopeOptions& options = {}) {
  NarrowResult result{f, NarrowStatus::kNoMatchingAtom, {}};
  const Formula& target = At(f, site.path);
  if (!target.is_not()) {
    throw std::invalid_argument("negation site path does not address a Not");
  }
  std::optional<Path> hit;
  for (const Path& p : detail::ScopeOf(f, site.path, options)) {
    if (detail::MatchesLemma(At(f, p), negatus_lemma)) {
      hit = p;
      break;
    }
  }
  if (!hit) return result;
  if (target.body().is_atom()) {
    result.status = NarrowStatus::kAlreadyMinimal;
    result.negated = site.path;
    return result;
  }
  // Relative path of the atom below the Not's body.
  Path rel(hit->begin() + static_cast<std::ptrdiff_t>(site.path.size()) + 1,
           hit->end());
  Formula body = target.body();
  Formula& atom = At(body, rel);
  atom = Formula::Not(atom);
  At(result.formula, site.path) = std::move(body);
  result.status = NarrowStatus::kNarrowed;
  result.negated = site.path;
  result.negated.insert(result.negated.end(), rel.begin(), rel.end());
  return result;
}

class ScopeNotAtomicError : public std::runtime_error {
 public:
  ScopeNotAtomicError()
      : std::runtime_error("negation scope is not a single atom") {}
};

// ~p(args) at `not_path` becomes inverse(args).
inline Formula ReplaceNegatedAtom(const Formula& f, const Path& not_path,
                                  const std::string& inverse) {
  const Formula& target = At(f, not_path);
  if (!target.is_not() || !target.body().is_atom()) {
    throw ScopeNotAtomicError();
  }
  Formula out = f;
  At(out, not_path) = Formula::Atom(inverse, target.body().args);
  return out;
}

inline Formula ReplaceNegatedAtom(const Formula& f, const NegationSite& site,
                                  const std::string& inverse) {
  return ReplaceNegatedAtom(f, site.path, inverse);
}

}  // namespace negtreat::fol

#endif  // NEGTREAT_FOL_HPP_

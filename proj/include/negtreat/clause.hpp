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

// Clause normal form in implication notation, the way a hypertableau prover
// reads its input: each clause is "body atoms -> head atoms", a clause with
// an empty head can only close branches, and a clause with an empty body and
// a single head atom is a unit fact.

#ifndef NEGTREAT_CLAUSE_HPP_
#define NEGTREAT_CLAUSE_HPP_

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "negtreat/fol.hpp"

namespace negtreat::fol {

// Terms after Skolemization may be functional: sk2(X).
struct ClauseTerm {
  std::string name;
  bool variable = false;
  std::vector<ClauseTerm> args;

  friend bool operator==(const ClauseTerm&, const ClauseTerm&) = default;
};

struct ClauseAtom {
  std::string predicate;
  std::vector<ClauseTerm> args;

  friend bool operator==(const ClauseAtom&, const ClauseAtom&) = default;
};

struct Clause {
  std::vector<ClauseAtom> body;  // conjunction
  std::vector<ClauseAtom> head;  // disjunction; empty means false

  bool is_unit() const { return body.empty() && head.size() == 1; }
  bool is_negative() const { return head.empty(); }

  friend bool operator==(const Clause&, const Clause&) = default;
};

class UnsupportedConstructError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string Print(const ClauseTerm& t) {
  std::string s = t.name;
  if (!t.args.empty()) {
    s += "(";
    for (std::size_t i = 0; i < t.args.size(); ++i) {
      if (i) s += ",";
      s += Print(t.args[i]);
    }
    s += ")";
  }
  return s;
}

inline std::string Print(const ClauseAtom& a) {
  std::string s = a.predicate + "(";
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (i) s += ",";
    s += Print(a.args[i]);
  }
  return s + ")";
}

// "a1, a2 -> h1 | h2"; an empty body prints as "true", an empty head as
// "false".
inline std::string Print(const Clause& c) {
  std::string s;
  if (c.body.empty()) s = "true";
  for (std::size_t i = 0; i < c.body.size(); ++i) {
    if (i) s += ", ";
    s += Print(c.body[i]);
  }
  s += " -> ";
  if (c.head.empty()) s += "false";
  for (std::size_t i = 0; i < c.head.size(); ++i) {
    if (i) s += " | ";
    s += Print(c.head[i]);
  }
  return s;
}

struct ClausifyOptions {
  // Conversion stops with UnsupportedConstructError beyond this many
  // clauses; distribution of | over & is exponential in the worst case.
  std::size_t max_clauses = 100000;
};

namespace detail {

struct Literal {
  bool positive = true;
  ClauseAtom atom;
};

class Clausifier {
 public:
  explicit Clausifier(ClausifyOptions options) : options_(options) {}

  std::vector<Clause> Run(const Formula& f) {
    Formula nnf = ToNnf(f, true);
    std::vector<std::vector<Literal>> cnf = Cnf(nnf, {}, {});
    std::vector<Clause> out;
    for (auto& disjunction : cnf) {
      Clause c;
      for (Literal& l : disjunction) {
        auto& side = l.positive ? c.head : c.body;
        bool seen = false;
        for (const ClauseAtom& a : side) seen = seen || a == l.atom;
        if (!seen) side.push_back(std::move(l.atom));
      }
      out.push_back(std::move(c));
    }
    return out;
  }

 private:
  // Negation normal form with implications eliminated.
  static Formula ToNnf(const Formula& f, bool positive) {
    switch (f.op) {
      case Connective::kAtom:
        return positive ? f : Formula::Not(f);
      case Connective::kNot:
        return ToNnf(f.body(), !positive);
      case Connective::kAnd:
      case Connective::kOr: {
        std::vector<Formula> parts;
        for (const Formula& c : f.children) parts.push_back(ToNnf(c, positive));
        bool conj = (f.op == Connective::kAnd) == positive;
        return conj ? Formula::And(std::move(parts))
                    : Formula::Or(std::move(parts));
      }
      case Connective::kImplies: {
        std::vector<Formula> parts;
        parts.push_back(ToNnf(f.children[0], !positive));
        parts.push_back(ToNnf(f.children[1], positive));
        return positive ? Formula::Or(std::move(parts))
                        : Formula::And(std::move(parts));
      }
      case Connective::kExists:
      case Connective::kForall: {
        bool exists = (f.op == Connective::kExists) == positive;
        Formula body = ToNnf(f.body(), positive);
        return exists ? Formula::Exists(f.vars, std::move(body))
                      : Formula::Forall(f.vars, std::move(body));
      }
    }
    throw UnsupportedConstructError("unknown connective");
  }

  using Bindings = std::map<std::string, ClauseTerm>;

  // `universals` are the universally bound variables in scope, in binding
  // order; they become the arguments of Skolem functions.
  std::vector<std::vector<Literal>> Cnf(const Formula& f, Bindings bindings,
                                        std::vector<ClauseTerm> universals) {
    switch (f.op) {
      case Connective::kAtom:
        return {{Literal{true, Ground(f, bindings)}}};
      case Connective::kNot:
        if (!f.body().is_atom()) {
          throw UnsupportedConstructError("negation above a non-atom in NNF");
        }
        return {{Literal{false, Ground(f.body(), bindings)}}};
      case Connective::kAnd: {
        std::vector<std::vector<Literal>> out;
        for (const Formula& c : f.children) {
          auto part = Cnf(c, bindings, universals);
          for (auto& d : part) out.push_back(std::move(d));
          Check(out.size());
        }
        return out;
      }
      case Connective::kOr: {
        std::vector<std::vector<Literal>> acc = {{}};
        for (const Formula& c : f.children) {
          auto part = Cnf(c, bindings, universals);
          std::vector<std::vector<Literal>> next;
          Check(acc.size() * part.size());
          for (const auto& a : acc) {
            for (const auto& b : part) {
              std::vector<Literal> d = a;
              d.insert(d.end(), b.begin(), b.end());
              next.push_back(std::move(d));
            }
          }
          acc = std::move(next);
        }
        return acc;
      }
      case Connective::kExists: {
        for (const std::string& v : f.vars) {
          ClauseTerm sk{"sk" + std::to_string(++skolem_count_), false,
                        universals};
          bindings[v] = std::move(sk);
        }
        return Cnf(f.body(), std::move(bindings), std::move(universals));
      }
      case Connective::kForall: {
        for (const std::string& v : f.vars) {
          ClauseTerm var{FreshName(v), true, {}};
          bindings[v] = var;
          universals.push_back(std::move(var));
        }
        return Cnf(f.body(), std::move(bindings), std::move(universals));
      }
      case Connective::kImplies:
        break;
    }
    throw UnsupportedConstructError("implication left after NNF conversion");
  }

  // Variables keep their names; a second binder for an already used name
  // gets a numeric suffix.
  std::string FreshName(const std::string& v) {
    std::size_t n = used_[v]++;
    return n == 0 ? v : v + "_" + std::to_string(n);
  }

  static ClauseAtom Ground(const Formula& atom, const Bindings& bindings) {
    ClauseAtom a{atom.predicate, {}};
    for (const Term& t : atom.args) {
      auto it = t.is_variable() ? bindings.find(t.name) : bindings.end();
      if (it != bindings.end()) {
        a.args.push_back(it->second);
      } else {
        // Free variables of open clause templates stay variables.
        a.args.push_back(ClauseTerm{t.name, t.is_variable(), {}});
      }
    }
    return a;
  }

  void Check(std::size_t n) const {
    if (n > options_.max_clauses) {
      throw UnsupportedConstructError("clause set exceeds " +
                                      std::to_string(options_.max_clauses) +
                                      " clauses");
    }
  }

  ClausifyOptions options_;
  std::size_t skolem_count_ = 0;
  std::map<std::string, std::size_t> used_;
};

}  // namespace detail

// Skolem constants sk1, sk2, ... are numbered left to right over the
// existential binders; existentials under a universal get Skolem functions
// over the universals in scope.
inline std::vector<Clause> Clausify(const Formula& f,
                                    ClausifyOptions options = {}) {
  return detail::Clausifier(options).Run(f);
}

inline bool AllUnit(const std::vector<Clause>& clauses) {
  for (const Clause& c : clauses) {
    if (!c.is_unit()) return false;
  }
  return true;
}

}  // namespace negtreat::fol

#endif  // NEGTREAT_CLAUSE_HPP_

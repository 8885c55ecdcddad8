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

// Generators, reference implementations and worked-example inputs shared by
// the unit tests and the acceptance binary.

#ifndef NEGTREAT_TESTS_TEST_SUPPORT_HPP_
#define NEGTREAT_TESTS_TEST_SUPPORT_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "negtreat/negtreat.hpp"

namespace negtreat::testing {

// ---------------------------------------------------------------------------
// Worked examples.

inline constexpr const char* kMathSentence =
    "I then realized that I was not good at math.";

inline constexpr const char* kMathFormula =
    "? [A,B,C,D,E] : (person(A) & person(B) & then(C) & manner(D,C) & "
    "topic(D,E) & actor(D,B) & realize(D) & "
    "~ ? [F,G] : (at(G,F) & math(F) & theme(G,A) & good(G)))";

// The same formula with the negation moved onto good(G).
inline constexpr const char* kMathNarrowed =
    "? [A,B,C,D,E] : (person(A) & person(B) & then(C) & manner(D,C) & "
    "topic(D,E) & actor(D,B) & realize(D) & "
    "? [F,G] : (at(G,F) & math(F) & theme(G,A) & ~ good(G)))";

inline constexpr const char* kMathBackground =
    "! [X] : (math(X) => school_subject(X))";

inline constexpr const char* kCookiesSentence =
    "I don't like the cookies with raisins but I can't eat the ones with "
    "chocolate either.";

inline constexpr const char* kCookiesFormula =
    "? [A,B,C,D] : (one(A) & person(C) & cookie(B) & person(D) & "
    "~ ? [E,F,G,H,I] : (either(G) & manner(I,G) & with(I,H) & chocolate(H) & "
    "theme(I,A) & actor(I,C) & eat(I) & topic(F,E) & actor(F,C) & can(F) & "
    "~ ? [J,K] : (theme(J,B) & actor(J,D) & like(J) & with(B,K) & "
    "raisin(K))))";

inline std::string FixtureWordnet() { return NEGTREAT_FIXTURE_WORDNET; }
inline std::string SourceDir() { return NEGTREAT_SOURCE_DIR; }

// ---------------------------------------------------------------------------
// Random formulas.

struct FormulaGenerator {
  std::mt19937_64 rng;
  std::vector<std::string> predicates = {"p", "q", "r", "good", "math",
                                         "like", "with", "eat", "can",
                                         "school_subject"};
  std::vector<std::string> constants = {"a", "b", "c", "d1"};
  std::vector<std::string> variables = {"X", "Y", "Z", "W", "V1"};
  bool quantifiers = true;

  explicit FormulaGenerator(std::uint64_t seed) : rng(seed) {}

  std::size_t Pick(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
  }

  fol::Formula Atom(const std::vector<std::string>& bound) {
    std::size_t arity = 1 + Pick(3);
    std::vector<fol::Term> args;
    for (std::size_t i = 0; i < arity; ++i) {
      if (!bound.empty() && Pick(2) == 0) {
        args.push_back(fol::Term::Variable(bound[Pick(bound.size())]));
      } else {
        args.push_back(fol::Term::Constant(constants[Pick(constants.size())]));
      }
    }
    return fol::Formula::Atom(predicates[Pick(predicates.size())],
                              std::move(args));
  }

  fol::Formula Make(std::size_t depth, std::vector<std::string> bound = {}) {
    if (depth == 0 || Pick(4) == 0) return Atom(bound);
    std::size_t kinds = quantifiers ? 6 : 4;
    switch (Pick(kinds)) {
      case 0:
        return fol::Formula::Not(Make(depth - 1, bound));
      case 1:
      case 2: {
        std::vector<fol::Formula> parts;
        std::size_t n = 2 + Pick(3);
        for (std::size_t i = 0; i < n; ++i) {
          parts.push_back(Make(depth - 1, bound));
        }
        return Pick(2) ? fol::Formula::And(std::move(parts))
                       : fol::Formula::Or(std::move(parts));
      }
      case 3:
        return fol::Formula::Implies(Make(depth - 1, bound),
                                     Make(depth - 1, bound));
      default: {
        std::vector<std::string> vars;
        std::size_t n = 1 + Pick(2);
        for (std::size_t i = 0; i < n; ++i) {
          const std::string& v = variables[Pick(variables.size())];
          if (std::find(vars.begin(), vars.end(), v) == vars.end()) {
            vars.push_back(v);
          }
        }
        bound.insert(bound.end(), vars.begin(), vars.end());
        fol::Formula body = Make(depth - 1, bound);
        return Pick(2) ? fol::Formula::Exists(std::move(vars), std::move(body))
                       : fol::Formula::Forall(std::move(vars),
                                              std::move(body));
      }
    }
  }
};

// Truth value of a quantifier-free formula; atoms are looked up by their
// printed form.
inline bool Evaluate(const fol::Formula& f,
                     const std::map<std::string, bool>& world) {
  using fol::Connective;
  switch (f.op) {
    case Connective::kAtom:
      return world.at(fol::Print(f));
    case Connective::kNot:
      return !Evaluate(f.children[0], world);
    case Connective::kAnd:
      for (const fol::Formula& c : f.children) {
        if (!Evaluate(c, world)) return false;
      }
      return true;
    case Connective::kOr:
      for (const fol::Formula& c : f.children) {
        if (Evaluate(c, world)) return true;
      }
      return false;
    case Connective::kImplies:
      return !Evaluate(f.children[0], world) || Evaluate(f.children[1], world);
    default:
      throw std::logic_error("quantifier in propositional formula");
  }
}

inline void AtomKeys(const fol::Formula& f, std::set<std::string>& out) {
  if (f.is_atom()) {
    out.insert(fol::Print(f));
    return;
  }
  for (const fol::Formula& c : f.children) AtomKeys(c, out);
}

inline std::multiset<std::string> AtomMultiset(const fol::Formula& f) {
  std::multiset<std::string> out;
  for (const fol::Formula& a : fol::Atoms(f)) out.insert(fol::Print(a));
  return out;
}

// No Not node directly under another Not node.
inline bool FreeOfDoubleNegation(const fol::Formula& f) {
  if (f.is_not() && f.body().is_not()) return false;
  for (const fol::Formula& c : f.children) {
    if (!FreeOfDoubleNegation(c)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Mutual-argmax reference: every (cue, site) pair is tested against the
// whole row and the whole column, ties resolved towards the lower index.

struct OraclePair {
  std::size_t cue = 0;   // 0-based
  std::size_t site = 0;  // 0-based
  friend bool operator==(const OraclePair&, const OraclePair&) = default;
};

inline std::vector<OraclePair> MutualArgmaxOracle(
    const std::vector<std::set<std::string>>& cues,
    const std::vector<std::set<std::string>>& sites) {
  auto overlap = [&](std::size_t i, std::size_t j) {
    std::size_t n = 0;
    for (const std::string& w : cues[i]) n += sites[j].count(w);
    return n;
  };
  std::vector<OraclePair> out;
  for (std::size_t i = 0; i < cues.size(); ++i) {
    for (std::size_t j = 0; j < sites.size(); ++j) {
      std::size_t s = overlap(i, j);
      if (s == 0) continue;
      bool row_best = true, column_best = true;
      for (std::size_t l = 0; l < sites.size(); ++l) {
        std::size_t t = overlap(i, l);
        if (t > s || (t == s && l < j)) row_best = false;
      }
      for (std::size_t l = 0; l < cues.size(); ++l) {
        std::size_t t = overlap(l, j);
        if (t > s || (t == s && l < i)) column_best = false;
      }
      if (row_best && column_best) out.push_back({i, j});
    }
  }
  return out;
}

struct AlignmentInstance {
  std::vector<std::set<std::string>> cues;
  std::vector<std::set<std::string>> sites;
};

inline AlignmentInstance RandomAlignmentInstance(std::mt19937_64& rng) {
  static const std::vector<std::string> vocabulary = {
      "like", "eat", "good", "math", "can", "raisin", "cookie", "stop",
      "go", "bad"};
  auto pick = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  auto random_set = [&](std::size_t max_size) {
    std::set<std::string> s;
    std::size_t n = pick(0, max_size);
    while (s.size() < n) s.insert(vocabulary[pick(0, vocabulary.size() - 1)]);
    return s;
  };
  AlignmentInstance inst;
  std::size_t n = pick(0, 6), m = pick(0, 6);
  for (std::size_t i = 0; i < n; ++i) inst.cues.push_back(random_set(3));
  for (std::size_t j = 0; j < m; ++j) inst.sites.push_back(random_set(6));
  return inst;
}

inline std::vector<OraclePair> RunAssign(const AlignmentInstance& inst) {
  std::vector<text::WordWindow> windows;
  for (std::size_t i = 0; i < inst.cues.size(); ++i) {
    text::WordWindow w;
    w.cue_id = i + 1;
    w.lemma_set = inst.cues[i];
    windows.push_back(std::move(w));
  }
  std::vector<fol::NegationSite> sites;
  for (std::size_t j = 0; j < inst.sites.size(); ++j) {
    fol::NegationSite s;
    s.site_id = j + 1;
    s.scope_lemmas = inst.sites[j];
    sites.push_back(std::move(s));
  }
  std::vector<OraclePair> out;
  for (const align::Assignment& a : align::Assign(windows, sites)) {
    out.push_back({a.cue_id - 1, a.site_id - 1});
  }
  return out;
}

}  // namespace negtreat::testing

#endif  // NEGTREAT_TESTS_TEST_SUPPORT_HPP_

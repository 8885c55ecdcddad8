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

#include "negtreat/fol.hpp"

#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "test_support.hpp"

namespace negtreat::fol {
namespace {

using testing::kCookiesFormula;
using testing::kMathBackground;
using testing::kMathFormula;
using testing::kMathNarrowed;

Term V(const std::string& name) { return Term::Variable(name); }

std::set<std::string> PredicatesAt(const Formula& f,
                                   const std::vector<Path>& paths) {
  std::set<std::string> out;
  for (const Path& p : paths) out.insert(At(f, p).predicate);
  return out;
}

TEST(ParseTest, SmallestFormula) {
  EXPECT_EQ(Parse("? [A] : (math(A))"),
            Formula::Exists({"A"}, Formula::Atom("math", {V("A")})));
}

TEST(ParseTest, BackgroundRule) {
  Formula f = Parse(kMathBackground);
  Formula expected = Formula::Forall(
      {"X"}, Formula::Implies(Formula::Atom("math", {V("X")}),
                              Formula::Atom("school_subject", {V("X")})));
  EXPECT_EQ(f, expected);
}

TEST(ParseTest, SentenceFormulaHasOneNegation) {
  Formula f = Parse(kMathFormula);
  EXPECT_EQ(Count(f, Connective::kNot), 1u);
  EXPECT_EQ(Atoms(f).size(), 11u);
}

TEST(ParseTest, ConstantsAndLowercasedPredicates) {
  Formula f = Parse("Likes(a, b1)");
  EXPECT_EQ(f, Formula::Atom("likes", {Term::Constant("a"),
                                       Term::Constant("b1")}));
}

TEST(ParseTest, WhitespaceInsignificant) {
  EXPECT_EQ(Parse("?[A]:(math(A))"), Parse("  ? [ A ] :\n ( math ( A ) ) "));
}

TEST(ParseTest, SyntaxErrorReportsLocationAndExpectation) {
  try {
    Parse("? [A] : (p(A) & )");
    FAIL() << "no error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
    EXPECT_EQ(e.column(), 17u);
    EXPECT_FALSE(e.expected().empty());
  }
  try {
    Parse("? [A] :\n  (p(A) q(A))");
    FAIL() << "no error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 9u);
  }
}

TEST(ParseTest, RejectsMixedConnectivesAndTrailingInput) {
  EXPECT_THROW(Parse("? [A] : (p(A) & q(A) | r(A))"), ParseError);
  EXPECT_THROW(Parse("p(a) q(a)"), ParseError);
  EXPECT_THROW(Parse("p()"), ParseError);
  EXPECT_THROW(Parse("p(f(a))"), ParseError);
  EXPECT_THROW(Parse("? [a] : (p(a))"), ParseError);
  EXPECT_THROW(Parse(""), ParseError);
}

TEST(ParseTest, UnboundVariablesNeedOpenMode) {
  EXPECT_THROW(Parse("(math(X) => school_subject(X))"), UnboundVariableError);
  Formula f = Parse("(math(X) => school_subject(X))", {true});
  EXPECT_EQ(f.op, Connective::kImplies);
}

TEST(PrintTest, SmallestFormula) {
  EXPECT_EQ(Print(Formula::Exists({"A"}, Formula::Atom("math", {V("A")}))),
            "? [A] : (math(A))");
}

TEST(PrintTest, NarrowedFormulaHasOnlyNegatedGood) {
  Formula f = Parse(kMathNarrowed);
  std::string text = Print(f);
  EXPECT_NE(text.find("~ good(G)"), std::string::npos);
  EXPECT_EQ(std::count(text.begin(), text.end(), '~'), 1);
}

TEST(PrintTest, WorkedFormulasRoundTrip) {
  for (const char* text :
       {kMathFormula, kMathNarrowed, kCookiesFormula, kMathBackground}) {
    Formula f = Parse(text);
    EXPECT_EQ(Parse(Print(f)), f) << text;
    EXPECT_EQ(Print(Parse(Print(f))), Print(f));
  }
}

TEST(PrintTest, GeneratedFormulasRoundTrip) {
  testing::FormulaGenerator gen(20260101);
  for (int i = 0; i < 10000; ++i) {
    Formula f = gen.Make(5);
    std::string text = Print(f);
    ASSERT_EQ(Parse(text), f) << text;
    ASSERT_EQ(Print(Parse(text)), text);
  }
}

TEST(DoubleNegationTest, Definitions) {
  Formula p = Formula::Atom("p", {V("X")});
  EXPECT_EQ(RemoveDoubleNegation(Formula::Not(Formula::Not(p))), p);
  EXPECT_EQ(RemoveDoubleNegation(Formula::Not(Formula::Not(Formula::Not(p)))),
            Formula::Not(p));
  Formula nested = Formula::And({Formula::Not(Formula::Not(p)), p});
  EXPECT_EQ(RemoveDoubleNegation(nested), Formula::And({p, p}));
}

TEST(DoubleNegationTest, NotAcrossQuantifierIsKept) {
  Formula f = Parse("~ ? [X] : (~ p(X))");
  EXPECT_EQ(RemoveDoubleNegation(f), f);
}

TEST(DoubleNegationTest, PreservesTruthAndIsIdempotent) {
  testing::FormulaGenerator gen(7);
  gen.quantifiers = false;
  gen.predicates = {"p", "q", "r", "s"};
  gen.constants = {"a"};
  std::mt19937_64 coin(11);
  for (int i = 0; i < 2000; ++i) {
    Formula f = gen.Make(6);
    Formula g = RemoveDoubleNegation(f);
    ASSERT_TRUE(testing::FreeOfDoubleNegation(g)) << Print(g);
    ASSERT_EQ(RemoveDoubleNegation(g), g);
    std::set<std::string> keys;
    testing::AtomKeys(f, keys);
    for (int w = 0; w < 100; ++w) {
      std::map<std::string, bool> world;
      for (const std::string& k : keys) world[k] = coin() & 1;
      ASSERT_EQ(testing::Evaluate(f, world), testing::Evaluate(g, world))
          << Print(f);
    }
  }
}

TEST(CollectNegationsTest, MathScope) {
  Formula f = Parse(kMathFormula);
  ScopeOptions all;
  all.excluded_roles.clear();
  std::vector<NegationSite> sites = CollectNegations(f, all);
  ASSERT_EQ(sites.size(), 1u);
  EXPECT_EQ(sites[0].site_id, 1u);
  EXPECT_TRUE(At(f, sites[0].path).is_not());
  EXPECT_EQ(sites[0].scope_lemmas,
            (std::set<std::string>{"at", "math", "theme", "good"}));
  EXPECT_EQ(PredicatesAt(f, sites[0].scope_atoms),
            (std::set<std::string>{"at", "math", "theme", "good"}));

  std::vector<NegationSite> content = CollectNegations(f);
  ASSERT_EQ(content.size(), 1u);
  EXPECT_EQ(content[0].scope_lemmas,
            (std::set<std::string>{"at", "math", "good"}));
}

TEST(CollectNegationsTest, CookiesScopes) {
  Formula f = Parse(kCookiesFormula);
  std::vector<NegationSite> sites = CollectNegations(f);
  ASSERT_EQ(sites.size(), 2u);
  EXPECT_EQ(sites[0].scope_lemmas,
            (std::set<std::string>{"either", "with", "chocolate", "eat",
                                   "can"}));
  EXPECT_EQ(sites[1].scope_lemmas, (std::set<std::string>{"like", "with",
                                                          "raisin"}));
  EXPECT_LT(sites[0].path.size(), sites[1].path.size());

  ScopeOptions nested;
  nested.include_nested = true;
  std::vector<NegationSite> wide = CollectNegations(f, nested);
  EXPECT_TRUE(wide[0].scope_lemmas.count("like"));
  EXPECT_TRUE(wide[0].scope_lemmas.count("raisin"));
}

TEST(CollectNegationsTest, NoNegation) {
  EXPECT_TRUE(CollectNegations(Parse(kMathBackground)).empty());
}

TEST(CollectNegationsTest, CompoundPredicatesUseLastPart) {
  EXPECT_EQ(PredicateLemma("school_subject"), "subject");
  EXPECT_EQ(PredicateLemma("Good"), "good");
  Formula f = Parse("~ ? [X] : (school_subject(X))");
  EXPECT_EQ(CollectNegations(f)[0].scope_lemmas,
            (std::set<std::string>{"subject"}));
}

TEST(CollectNegationsTest, PreOrderNumbering) {
  testing::FormulaGenerator gen(3);
  for (int i = 0; i < 500; ++i) {
    Formula f = RemoveDoubleNegation(gen.Make(5));
    std::vector<NegationSite> sites = CollectNegations(f);
    ASSERT_EQ(sites.size(), Count(f, Connective::kNot));
    for (std::size_t s = 0; s < sites.size(); ++s) {
      ASSERT_EQ(sites[s].site_id, s + 1);
      ASSERT_TRUE(At(f, sites[s].path).is_not());
      if (s > 0) {
        ASSERT_LT(sites[s - 1].path, sites[s].path);
      }
    }
  }
}

TEST(NarrowScopeTest, MathExampleGivesNarrowedFormula) {
  Formula f = Parse(kMathFormula);
  NegationSite site = CollectNegations(f)[0];
  NarrowResult r = NarrowScope(f, site, "good");
  EXPECT_EQ(r.status, NarrowStatus::kNarrowed);
  EXPECT_EQ(r.formula, Parse(kMathNarrowed));
  EXPECT_EQ(At(r.formula, r.negated), Formula::Not(Formula::Atom(
                                          "good", {V("G")})));
}

TEST(NarrowScopeTest, AlreadyMinimal) {
  Formula f = Parse("? [X] : (~ p(X))");
  NarrowResult r = NarrowScope(f, CollectNegations(f)[0], "p");
  EXPECT_EQ(r.status, NarrowStatus::kAlreadyMinimal);
  EXPECT_EQ(r.formula, f);
}

TEST(NarrowScopeTest, NoMatchingAtom) {
  Formula f = Parse(kMathFormula);
  NarrowResult r = NarrowScope(f, CollectNegations(f)[0], "sleep");
  EXPECT_EQ(r.status, NarrowStatus::kNoMatchingAtom);
  EXPECT_EQ(r.formula, f);
}

TEST(NarrowScopeTest, FirstMatchWins) {
  Formula f = Parse("? [X,Y] : (~ (p(X) & q(X) & q(Y)))");
  NarrowResult r = NarrowScope(f, CollectNegations(f)[0], "q");
  EXPECT_EQ(r.formula, Parse("? [X,Y] : (p(X) & ~ q(X) & q(Y))"));
}

TEST(NarrowScopeTest, PreservesAtomMultiset) {
  testing::FormulaGenerator gen(99);
  std::mt19937_64 rng(5);
  int narrowed = 0;
  for (int i = 0; i < 3000; ++i) {
    Formula f = RemoveDoubleNegation(gen.Make(5));
    for (const NegationSite& site : CollectNegations(f)) {
      if (site.scope_atoms.empty()) continue;
      const Path& target =
          site.scope_atoms[rng() % site.scope_atoms.size()];
      NarrowResult r =
          NarrowScope(f, site, PredicateLemma(At(f, target).predicate));
      ASSERT_NE(r.status, NarrowStatus::kNoMatchingAtom);
      ASSERT_EQ(testing::AtomMultiset(r.formula), testing::AtomMultiset(f));
      ASSERT_LE(Count(r.formula, Connective::kNot), Count(f, Connective::kNot));
      ASSERT_EQ(Count(r.formula, Connective::kExists),
                Count(f, Connective::kExists));
      ASSERT_EQ(Count(r.formula, Connective::kForall),
                Count(f, Connective::kForall));
      const Formula& negated = At(r.formula, r.negated);
      ASSERT_TRUE(negated.is_not());
      ASSERT_TRUE(negated.body().is_atom());
      ++narrowed;
    }
  }
  EXPECT_GT(narrowed, 1000);
}

TEST(ReplaceNegatedAtomTest, Examples) {
  struct Case {
    const char* before;
    const char* inverse;
    const char* after;
  };
  for (const Case& c : {Case{"? [G] : (~ good(G))", "bad", "? [G] : (bad(G))"},
                        Case{"? [J] : (~ like(J))", "dislike",
                             "? [J] : (dislike(J))"},
                        Case{"? [F] : (~ can(F))", "unable",
                             "? [F] : (unable(F))"}}) {
    Formula f = Parse(c.before);
    Formula g = ReplaceNegatedAtom(f, CollectNegations(f)[0], c.inverse);
    EXPECT_EQ(g, Parse(c.after));
    EXPECT_EQ(Count(g, Connective::kNot) + 1, Count(f, Connective::kNot));
  }
}

TEST(ReplaceNegatedAtomTest, WideScopeIsRejected) {
  Formula f = Parse(kMathFormula);
  EXPECT_THROW(ReplaceNegatedAtom(f, CollectNegations(f)[0], "bad"),
               ScopeNotAtomicError);
}

TEST(ReplaceNegatedAtomTest, MathPipeline) {
  Formula f = Parse(kMathFormula);
  NarrowResult r = NarrowScope(f, CollectNegations(f)[0], "good");
  Formula g = ReplaceNegatedAtom(r.formula, r.negated, "bad");
  EXPECT_EQ(Count(g, Connective::kNot), 0u);
  EXPECT_NE(Print(g).find("bad(G)"), std::string::npos);
}

}  // namespace
}  // namespace negtreat::fol

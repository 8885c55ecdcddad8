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

// Negation treatment: pair textual cues with logical negations, choose the
// negated word (the negatus) for each pair, and rewrite the formula so the
// negation covers only the negatus, or disappears when an antonym exists.

#ifndef NEGTREAT_ALIGN_HPP_
#define NEGTREAT_ALIGN_HPP_

#include <algorithm>
#include <array>
#include <cstddef>
#include <iterator>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "negtreat/fol.hpp"
#include "negtreat/textprep.hpp"
#include "negtreat/wordnet.hpp"

namespace negtreat::align {

enum class Strategy { kBaseline, kFns, kFv, kFvFns, kComb };

inline constexpr std::array<Strategy, 5> kAllStrategies = {
    Strategy::kBaseline, Strategy::kFns, Strategy::kFv, Strategy::kFvFns,
    Strategy::kComb};

inline std::string_view StrategyName(Strategy s) {
  switch (s) {
    case Strategy::kBaseline: return "baseline";
    case Strategy::kFns: return "fns";
    case Strategy::kFv: return "fv";
    case Strategy::kFvFns: return "fv-fns";
    case Strategy::kComb: return "comb";
  }
  return "";
}

inline std::optional<Strategy> ParseStrategy(std::string_view name) {
  for (Strategy s : kAllStrategies) {
    if (StrategyName(s) == name) return s;
  }
  return std::nullopt;
}

inline text::WindowShape WindowShapeFor(Strategy s) {
  return s == Strategy::kComb ? text::WindowShape::kLeftAnchored
                              : text::WindowShape::kFollowing;
}

inline text::WordWindow BuildWindow(const std::vector<text::Token>& tokens,
                                    const text::Cue& cue, std::size_t k,
                                    Strategy strategy) {
  return text::BuildWindow(tokens, cue, k, WindowShapeFor(strategy));
}

// ---------------------------------------------------------------------------
// Cue <-> negation assignment.

struct Assignment {
  std::size_t cue_id = 0;
  std::size_t site_id = 0;
  std::set<std::string> overlap;
  std::size_t overlap_size = 0;

  friend bool operator==(const Assignment&, const Assignment&) = default;
};

inline std::set<std::string> Intersect(const std::set<std::string>& a,
                                       const std::set<std::string>& b) {
  std::set<std::string> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::inserter(out, out.end()));
  return out;
}

// Mutual argmax: cue i and site j are paired when j maximizes the overlap
// for i, i maximizes the overlap for j, and the overlap is non-empty. Ties
// go to the smaller index on both sides.
inline std::vector<Assignment> Assign(
    const std::vector<text::WordWindow>& windows,
    const std::vector<fol::NegationSite>& sites) {
  std::vector<Assignment> out;
  if (sites.empty()) return out;
  const std::size_t n = windows.size(), m = sites.size();
  std::vector<std::vector<std::size_t>> size(n, std::vector<std::size_t>(m));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      size[i][j] =
          Intersect(windows[i].lemma_set, sites[j].scope_lemmas).size();
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t j = 0;
    for (std::size_t l = 1; l < m; ++l) {
      if (size[i][l] > size[i][j]) j = l;
    }
    std::size_t back = 0;
    for (std::size_t l = 1; l < n; ++l) {
      if (size[l][j] > size[back][j]) back = l;
    }
    if (back != i || size[i][j] == 0) continue;
    Assignment a;
    a.cue_id = windows[i].cue_id;
    a.site_id = sites[j].site_id;
    a.overlap = Intersect(windows[i].lemma_set, sites[j].scope_lemmas);
    a.overlap_size = a.overlap.size();
    out.push_back(std::move(a));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Negatus selection.

struct NegatusChoice {
  std::vector<text::Token> words;
  std::string lemma;

  friend bool operator==(const NegatusChoice&, const NegatusChoice&) = default;
};

// Modal verb negated by `canonical`, if any.
inline std::optional<std::string> NegatedModal(std::string_view canonical) {
  static const std::map<std::string_view, std::string_view> modals = {
      {"can't", "can"},         {"cannot", "can"},     {"can not", "can"},
      {"couldn't", "could"},    {"could not", "could"},
      {"shouldn't", "should"},  {"should not", "should"}};
  auto it = modals.find(canonical);
  if (it == modals.end()) return std::nullopt;
  return std::string(it->second);
}

namespace detail {

inline bool CopulaRow(std::string_view canonical) {
  static const std::set<std::string_view> row = {
      "nothing", "isn't",    "is not",  "aren't",  "are not",
      "wasn't",  "was not",  "weren't", "were not"};
  return row.count(canonical) > 0;
}

inline bool IsVerb(const text::Token& t) { return t.pos.starts_with("VB"); }
inline bool IsNoun(const text::Token& t) { return t.pos.starts_with("NN"); }

inline NegatusChoice FromToken(const text::Token& t) {
  return NegatusChoice{{t}, t.lemma};
}

inline std::optional<NegatusChoice> FirstWhere(
    const text::WordWindow& window, bool (*pred)(const text::Token&)) {
  for (const text::Token& t : window.member_tokens) {
    if (pred(t)) return FromToken(t);
  }
  return std::nullopt;
}

inline std::optional<NegatusChoice> FirstMember(
    const text::WordWindow& window) {
  if (window.member_tokens.empty()) return std::nullopt;
  return FromToken(window.member_tokens.front());
}

// First member after the cue; the left-anchored member only when nothing
// follows.
inline std::optional<NegatusChoice> FirstFollowing(
    const text::WordWindow& window, const text::Cue& cue) {
  for (const text::Token& t : window.member_tokens) {
    if (t.index > cue.token_indices.back()) return FromToken(t);
  }
  return FirstMember(window);
}

inline std::optional<NegatusChoice> ModalChoice(const text::Cue& cue,
                                                const std::vector<text::Token>*
                                                    tokens) {
  auto modal = NegatedModal(cue.canonical);
  if (!modal) return std::nullopt;
  NegatusChoice c;
  c.lemma = *modal;
  if (tokens) {
    c.words.push_back((*tokens)[cue.token_indices.front()]);
  } else {
    text::Token t;
    t.index = cue.token_indices.front();
    t.surface = *modal;
    t.lemma = *modal;
    c.words.push_back(std::move(t));
  }
  return c;
}

inline std::optional<NegatusChoice> Combination(
    const text::WordWindow& window, const text::Cue& cue,
    const std::vector<text::Token>* tokens) {
  if (auto m = ModalChoice(cue, tokens)) return m;
  std::optional<NegatusChoice> pick;
  if (CopulaRow(cue.canonical)) {
    pick = FirstFollowing(window, cue);
  } else if (cue.canonical == "no") {
    for (const text::Token& t : window.member_tokens) {
      if (t.index > cue.token_indices.back() && IsNoun(t)) {
        pick = FromToken(t);
        break;
      }
    }
  } else {
    pick = FirstWhere(window, IsVerb);
  }
  if (pick) return pick;
  return FirstFollowing(window, cue);
}

}  // namespace detail

// Negatus for one cue under `strategy`; nullopt when no rule applies (an
// empty window with a non-modal cue, or no verb under FV). `tokens`, when
// given, supplies the cue's own token for modal negati.
inline std::optional<NegatusChoice> PickNegatus(
    const text::WordWindow& window, const text::Cue& cue, Strategy strategy,
    const std::vector<text::Token>* tokens = nullptr) {
  switch (strategy) {
    case Strategy::kBaseline:
      if (auto m = detail::ModalChoice(cue, tokens)) return m;
      return detail::FirstMember(window);
    case Strategy::kFns:
      return detail::FirstMember(window);
    case Strategy::kFv:
      return detail::FirstWhere(window, detail::IsVerb);
    case Strategy::kFvFns:
      if (auto v = detail::FirstWhere(window, detail::IsVerb)) return v;
      return detail::FirstMember(window);
    case Strategy::kComb:
      return detail::Combination(window, cue, tokens);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Inverse lookup.

struct InverseOptions {
  const wordnet::Lexicon* lexicon = nullptr;
  const wordnet::AntonymOverrides* overrides = nullptr;
};

// Override table first, then the first WordNet antonym. With a trusted POS
// tag its class is tried first; otherwise verb, adjective, noun, adverb.
inline std::optional<std::string> FindInverse(std::string_view lemma,
                                              std::string_view penn_tag,
                                              bool trusted_tag,
                                              const InverseOptions& options) {
  if (options.overrides) {
    if (auto o = options.overrides->Find(lemma)) return o;
  }
  if (!options.lexicon) return std::nullopt;
  using wordnet::PosClass;
  std::vector<PosClass> order = {PosClass::kVerb, PosClass::kAdjective,
                                 PosClass::kNoun, PosClass::kAdverb};
  if (trusted_tag) {
    if (auto p = wordnet::PosFromPenn(penn_tag)) {
      order.erase(std::find(order.begin(), order.end(), *p));
      order.insert(order.begin(), *p);
    }
  }
  for (PosClass p : order) {
    auto result = options.lexicon->Antonyms(lemma, p);
    if (!result.antonyms.empty()) return result.antonyms.front();
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// End to end.

struct Negatus {
  Assignment assignment;
  std::vector<text::Token> words;
  std::string lemma;
  std::optional<fol::Path> matched_atom;  // in the double-negation-free input
  std::optional<std::string> inverse;
  fol::NarrowStatus narrow_status = fol::NarrowStatus::kNoMatchingAtom;

  friend bool operator==(const Negatus&, const Negatus&) = default;
};

struct Substitution {
  fol::Formula atom;  // the atom as it stood before the rewrite
  std::string inverse;

  friend bool operator==(const Substitution&, const Substitution&) = default;
};

struct TreatOptions {
  std::size_t k = 3;
  Strategy strategy = Strategy::kComb;
  fol::ScopeOptions scope;
  const wordnet::Lexicon* lexicon = nullptr;
  // Defaults (can/could -> unable) when null.
  const wordnet::AntonymOverrides* overrides = nullptr;
};

struct TreatmentResult {
  std::vector<text::Cue> cues;
  std::vector<text::WordWindow> windows;
  std::vector<fol::NegationSite> sites;
  std::vector<Assignment> assignments;
  std::vector<Negatus> negati;              // cue order
  std::vector<std::size_t> no_negatus;      // assigned cues without negatus
  fol::Formula rewritten;
  std::vector<std::size_t> unmatched_cues;
  std::vector<std::size_t> unmatched_sites;
  std::vector<Substitution> substitutions;  // rewrite order

  friend bool operator==(const TreatmentResult&,
                         const TreatmentResult&) = default;
};

inline TreatmentResult Treat(const text::TaskText& input,
                             const fol::Formula& formula,
                             const TreatOptions& options) {
  static const wordnet::AntonymOverrides default_overrides =
      wordnet::AntonymOverrides::Defaults();
  if (options.k == 0) throw std::invalid_argument("k must be at least 1");
  InverseOptions inverse_options{
      options.lexicon,
      options.overrides ? options.overrides : &default_overrides};

  TreatmentResult r;
  const fol::Formula base = fol::RemoveDoubleNegation(formula);
  std::vector<text::Token> tokens = input.tokens;
  r.cues = text::DetectCues(tokens);
  text::MarkCues(tokens, r.cues);
  for (const text::Cue& c : r.cues) {
    r.windows.push_back(BuildWindow(tokens, c, options.k, options.strategy));
  }
  r.sites = fol::CollectNegations(base, options.scope);
  r.assignments = Assign(r.windows, r.sites);

  std::set<std::size_t> cue_done, site_done;
  for (const Assignment& a : r.assignments) {
    cue_done.insert(a.cue_id);
    site_done.insert(a.site_id);
    const text::Cue& cue = r.cues[a.cue_id - 1];
    const text::WordWindow& window = r.windows[a.cue_id - 1];
    auto choice = PickNegatus(window, cue, options.strategy, &tokens);
    if (!choice) {
      r.no_negatus.push_back(a.cue_id);
      continue;
    }
    Negatus n;
    n.assignment = a;
    n.words = std::move(choice->words);
    n.lemma = std::move(choice->lemma);
    const fol::NegationSite& site = r.sites[a.site_id - 1];
    for (const fol::Path& p : site.scope_atoms) {
      if (fol::PredicateLemma(fol::At(base, p).predicate) == n.lemma ||
          fol::At(base, p).predicate == n.lemma) {
        n.matched_atom = p;
        break;
      }
    }
    std::string key =
        n.matched_atom ? fol::At(base, *n.matched_atom).predicate : n.lemma;
    const text::Token& head = n.words.front();
    n.inverse = FindInverse(key, head.pos, input.gold_annotations,
                            inverse_options);
    r.negati.push_back(std::move(n));
  }
  for (const text::Cue& c : r.cues) {
    if (!cue_done.count(c.cue_id)) r.unmatched_cues.push_back(c.cue_id);
  }
  for (const fol::NegationSite& s : r.sites) {
    if (!site_done.count(s.site_id)) r.unmatched_sites.push_back(s.site_id);
  }

  // Later sites in pre-order first: rewriting a site never moves the Not
  // nodes of sites before it.
  std::vector<Negatus*> order;
  for (Negatus& n : r.negati) order.push_back(&n);
  std::sort(order.begin(), order.end(), [](const Negatus* x, const Negatus* y) {
    return x->assignment.site_id > y->assignment.site_id;
  });
  fol::Formula current = base;
  for (Negatus* n : order) {
    if (!n->matched_atom) continue;
    const fol::NegationSite& site = r.sites[n->assignment.site_id - 1];
    fol::NarrowResult narrowed =
        fol::NarrowScope(current, site, n->lemma, options.scope);
    n->narrow_status = narrowed.status;
    if (narrowed.status == fol::NarrowStatus::kNoMatchingAtom) continue;
    current = std::move(narrowed.formula);
    if (n->inverse) {
      const fol::Formula& negated = fol::At(current, narrowed.negated);
      r.substitutions.push_back({negated.body(), *n->inverse});
      current = fol::ReplaceNegatedAtom(current, narrowed.negated, *n->inverse);
    }
  }
  r.rewritten = std::move(current);
  return r;
}

}  // namespace negtreat::align

#endif  // NEGTREAT_ALIGN_HPP_

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

// Glue between the file formats and the treatment: runs tasks and turns the
// results into scorable prediction/gold pairs.

#ifndef NEGTREAT_PIPELINE_HPP_
#define NEGTREAT_PIPELINE_HPP_

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "negtreat/align.hpp"
#include "negtreat/corpus.hpp"
#include "negtreat/eval.hpp"
#include "negtreat/textprep.hpp"

namespace negtreat::pipeline {

struct Resources {
  const text::StopwordList* stopwords = nullptr;
  const wordnet::Lexicon* lexicon = nullptr;
  const wordnet::AntonymOverrides* overrides = nullptr;
  fol::ScopeOptions scope;
};

inline align::TreatOptions MakeTreatOptions(const Resources& res,
                                            std::size_t k,
                                            align::Strategy strategy) {
  align::TreatOptions o;
  o.k = k;
  o.strategy = strategy;
  o.scope = res.scope;
  o.lexicon = res.lexicon;
  o.overrides = res.overrides;
  return o;
}

// Treats one parsed task record.
inline align::TreatmentResult TreatRecord(const corpus::TaskRecord& record,
                                          const Resources& res,
                                          std::size_t k,
                                          align::Strategy strategy) {
  text::TaskText t = text::Prepare(record.text, {res.stopwords, res.lexicon});
  return align::Treat(t, *record.formula, MakeTreatOptions(res, k, strategy));
}

// Negatus of the cue covering `token`, or of the first cue with one.
inline const align::Negatus* SelectNegatus(
    const align::TreatmentResult& r, std::optional<std::size_t> token) {
  for (const align::Negatus& n : r.negati) {
    if (!token) return &n;
    const text::Cue& cue = r.cues[n.assignment.cue_id - 1];
    if (std::find(cue.token_indices.begin(), cue.token_indices.end(),
                  *token) != cue.token_indices.end()) {
      return &n;
    }
  }
  return nullptr;
}

inline std::vector<std::string> Lemmas(const align::Negatus* n) {
  if (!n) return {};
  return {n->lemma};
}

struct ScoringInput {
  std::vector<eval::Labeled> predictions;
  std::vector<eval::Labeled> gold;
  std::vector<std::string> problems;  // records that could not be used
};

// Self-contained task files: gold comes from each record's "gold" field
// (absent counts as no negatus).
inline ScoringInput FromTasks(const std::vector<corpus::TaskRecord>& tasks,
                              const Resources& res, std::size_t k,
                              align::Strategy strategy) {
  ScoringInput in;
  for (const corpus::TaskRecord& t : tasks) {
    if (!t.formula) {
      in.problems.push_back(t.id + ": " + t.error.value_or("no formula"));
      continue;
    }
    align::TreatmentResult r = TreatRecord(t, res, k, strategy);
    in.predictions.push_back({t.id, Lemmas(SelectNegatus(r, t.cue_token))});
    in.gold.push_back({t.id, t.gold.value_or(std::vector<std::string>{})});
  }
  return in;
}

// CD-SCO sentences with formulas from a task file keyed "<chapter>_<n>".
// Every gold negation becomes one item "<id>#<k>" (k from 1) predicted by
// the negatus of the cue that overlaps the gold cue; a sentence without
// negation becomes "<id>#0" with empty gold.
inline ScoringInput FromCorpus(const std::vector<corpus::CorpusSentence>& corpus,
                               const std::vector<corpus::TaskRecord>& tasks,
                               const Resources& res, std::size_t k,
                               align::Strategy strategy) {
  ScoringInput in;
  std::map<std::string, const corpus::TaskRecord*> by_id;
  for (const corpus::TaskRecord& t : tasks) by_id[t.id] = &t;
  std::map<std::string, bool> used;
  for (const corpus::CorpusSentence& s : corpus) {
    auto it = by_id.find(s.id());
    if (it == by_id.end()) {
      in.problems.push_back(s.id() + ": no formula in task file");
      continue;
    }
    used[s.id()] = true;
    const corpus::TaskRecord& t = *it->second;
    if (!t.formula) {
      in.problems.push_back(t.id + ": " + t.error.value_or("no formula"));
      continue;
    }
    text::TaskText txt = corpus::ToTaskText(s, res.stopwords);
    align::TreatmentResult r =
        align::Treat(txt, *t.formula, MakeTreatOptions(res, k, strategy));
    if (s.negations.empty()) {
      in.predictions.push_back({s.id() + "#0", Lemmas(SelectNegatus(r, {}))});
      in.gold.push_back({s.id() + "#0", {}});
      continue;
    }
    for (std::size_t g = 0; g < s.negations.size(); ++g) {
      const corpus::GoldNegation& neg = s.negations[g];
      const align::Negatus* hit = nullptr;
      for (const auto& [index, cue_text] : neg.cue) {
        std::size_t pos = 0;
        while (pos < s.tokens.size() && s.tokens[pos].index != index) ++pos;
        if ((hit = SelectNegatus(r, pos))) break;
      }
      std::string id = s.id() + "#" + std::to_string(g + 1);
      in.predictions.push_back({id, Lemmas(hit)});
      in.gold.push_back({id, corpus::GoldNegatus(s, neg)});
    }
  }
  for (const corpus::TaskRecord& t : tasks) {
    if (!used.count(t.id)) {
      in.problems.push_back(t.id + ": no such sentence in corpus");
    }
  }
  return in;
}

}  // namespace negtreat::pipeline

#endif  // NEGTREAT_PIPELINE_HPP_

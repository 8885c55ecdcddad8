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

// Negatus scoring with *SEM 2012 measure B (precision over all system
// predictions) and the report tables.

#ifndef NEGTREAT_EVAL_HPP_
#define NEGTREAT_EVAL_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "negtreat/textprep.hpp"

namespace negtreat::eval {

// Lemmas for one task; empty means "no negatus".
struct Labeled {
  std::string id;
  std::vector<std::string> lemmas;
};

struct ScoredRun {
  std::string strategy;
  std::string split;
  std::size_t true_positives = 0;
  std::size_t predictions = 0;
  std::size_t gold_count = 0;
  double precision = 0;  // percent
  double recall = 0;
  double f1 = 0;

  friend bool operator==(const ScoredRun&, const ScoredRun&) = default;
};

class IdMismatchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ScoreOptions {
  // Leave out predictions on tasks whose gold has no negatus.
  bool filtered = false;
};

inline std::set<std::string> NormalizedSet(
    const std::vector<std::string>& lemmas) {
  std::set<std::string> out;
  for (const std::string& l : lemmas) out.insert(text::Lower(l));
  return out;
}

// The single true-positive rule: the predicted lemma set equals the gold
// lemma set exactly.
inline bool Matches(const std::vector<std::string>& predicted,
                    const std::vector<std::string>& gold) {
  return !predicted.empty() && !gold.empty() &&
         NormalizedSet(predicted) == NormalizedSet(gold);
}

inline void Finish(ScoredRun& run) {
  run.precision = run.predictions == 0
                      ? 0.0
                      : 100.0 * run.true_positives / run.predictions;
  run.recall =
      run.gold_count == 0 ? 0.0 : 100.0 * run.true_positives / run.gold_count;
  run.f1 = run.precision + run.recall == 0
               ? 0.0
               : 2 * run.precision * run.recall / (run.precision + run.recall);
}

inline ScoredRun Score(const std::vector<Labeled>& predictions,
                       const std::vector<Labeled>& gold,
                       ScoreOptions options = {}) {
  std::map<std::string, const Labeled*> by_id;
  for (const Labeled& g : gold) {
    if (!by_id.emplace(g.id, &g).second) {
      throw IdMismatchError("duplicate gold id " + g.id);
    }
  }
  if (predictions.size() != gold.size()) {
    throw IdMismatchError("prediction and gold task counts differ");
  }
  ScoredRun run;
  std::set<std::string> seen;
  for (const Labeled& p : predictions) {
    auto it = by_id.find(p.id);
    if (it == by_id.end() || !seen.insert(p.id).second) {
      throw IdMismatchError("prediction id without unique gold: " + p.id);
    }
    const Labeled& g = *it->second;
    bool has_gold = !g.lemmas.empty();
    if (has_gold) ++run.gold_count;
    if (p.lemmas.empty()) continue;
    if (options.filtered && !has_gold) continue;
    ++run.predictions;
    if (Matches(p.lemmas, g.lemmas)) ++run.true_positives;
  }
  Finish(run);
  return run;
}

// Half-up rounding to two decimals.
inline std::string Percent(double v) {
  double r = std::floor(v * 100.0 + 0.5 + 1e-9) / 100.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", r);
  return buf;
}

struct Report {
  std::string text;
  std::string csv;
};

inline constexpr const char* kCsvHeader =
    "strategy,split,tp,pred,gold,precision,recall,f1";

// Strategies as rows, splits as column groups of P/R/F1, both in order of
// first appearance.
inline Report MakeReport(const std::vector<ScoredRun>& runs) {
  std::vector<std::string> strategies, splits;
  auto note = [](std::vector<std::string>& list, const std::string& s) {
    if (std::find(list.begin(), list.end(), s) == list.end()) list.push_back(s);
  };
  std::map<std::pair<std::string, std::string>, const ScoredRun*> cell;
  for (const ScoredRun& r : runs) {
    note(strategies, r.strategy);
    note(splits, r.split);
    cell[{r.strategy, r.split}] = &r;
  }

  Report report;
  report.csv = std::string(kCsvHeader) + "\n";
  for (const ScoredRun& r : runs) {
    report.csv += r.strategy + "," + r.split + "," +
                  std::to_string(r.true_positives) + "," +
                  std::to_string(r.predictions) + "," +
                  std::to_string(r.gold_count) + "," + Percent(r.precision) +
                  "," + Percent(r.recall) + "," + Percent(r.f1) + "\n";
  }

  std::size_t label = 8;
  for (const std::string& s : strategies) label = std::max(label, s.size());
  auto pad = [](std::string s, std::size_t w, bool right) {
    if (s.size() >= w) return s;
    std::string fill(w - s.size(), ' ');
    return right ? fill + s : s + fill;
  };
  constexpr std::size_t kCol = 7;
  const std::size_t group = 3 * kCol + 2;
  std::string line1 = pad("", label, false);
  std::string line2 = pad("strategy", label, false);
  for (const std::string& sp : splits) {
    line1 += " | " + pad(sp, group, false);
    line2 += " | " + pad("P", kCol, true) + " " + pad("R", kCol, true) + " " +
             pad("F1", kCol, true);
  }
  report.text = line1 + "\n" + line2 + "\n";
  for (const std::string& st : strategies) {
    std::string row = pad(st, label, false);
    for (const std::string& sp : splits) {
      auto it = cell.find({st, sp});
      if (it == cell.end()) {
        row += " | " + pad("-", kCol, true) + " " + pad("-", kCol, true) +
               " " + pad("-", kCol, true);
      } else {
        const ScoredRun& r = *it->second;
        row += " | " + pad(Percent(r.precision), kCol, true) + " " +
               pad(Percent(r.recall), kCol, true) + " " +
               pad(Percent(r.f1), kCol, true);
      }
    }
    report.text += row + "\n";
  }
  return report;
}

}  // namespace negtreat::eval

#endif  // NEGTREAT_EVAL_HPP_

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

// File formats: the *SEM 2012 CD-SCO negation corpus (CoNLL-style columns),
// JSON-lines task files pairing sentences with formulas, and JSON-lines
// prediction files.

#ifndef NEGTREAT_CORPUS_HPP_
#define NEGTREAT_CORPUS_HPP_

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "negtreat/align.hpp"
#include "negtreat/fol.hpp"
#include "negtreat/textprep.hpp"

namespace negtreat::corpus {

class CorpusError : public std::runtime_error {
 public:
  CorpusError(const std::string& source, std::size_t line,
              const std::string& what)
      : std::runtime_error(source + ":" + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// ---------------------------------------------------------------------------
// CD-SCO.
//
// One token per row: chapter, sentence number, token number, word, lemma,
// POS, parse bit, then either "***" or three columns (cue, scope, event) per
// negation, "_" where a token takes no part. Sentences are separated by a
// blank line.

struct CorpusToken {
  std::size_t index = 0;
  std::string word;
  std::string lemma;
  std::string pos;
  std::string parse;

  friend bool operator==(const CorpusToken&, const CorpusToken&) = default;
};

struct GoldNegation {
  std::vector<std::pair<std::size_t, std::string>> cue;
  std::vector<std::size_t> scope;
  std::vector<std::pair<std::size_t, std::string>> event;

  bool has_negatus() const { return !event.empty(); }

  friend bool operator==(const GoldNegation&, const GoldNegation&) = default;
};

struct CorpusSentence {
  std::string chapter;
  std::size_t sentence = 0;
  std::vector<CorpusToken> tokens;
  std::vector<GoldNegation> negations;

  std::string id() const { return chapter + "_" + std::to_string(sentence); }

  friend bool operator==(const CorpusSentence&,
                         const CorpusSentence&) = default;
};

namespace detail {

inline std::vector<std::string> SplitColumns(const std::string& line) {
  std::vector<std::string> out;
  if (line.find('\t') != std::string::npos) {
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, '\t')) out.push_back(field);
    while (!out.empty() && out.back().empty()) out.pop_back();
  } else {
    std::istringstream ss(line);
    std::string field;
    while (ss >> field) out.push_back(field);
  }
  return out;
}

inline std::size_t ParseIndex(const std::string& s, const std::string& source,
                              std::size_t line, const char* what) {
  std::size_t used = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (s.empty() || used != s.size()) {
    throw CorpusError(source, line,
                      std::string("non-integer ") + what + " '" + s + "'");
  }
  return v;
}

}  // namespace detail

inline std::vector<CorpusSentence> ReadCdsco(std::istream& in,
                                             const std::string& source) {
  std::vector<CorpusSentence> out;
  CorpusSentence current;
  std::size_t negations = 0;
  std::size_t n = 0;
  std::size_t first_line = 0;
  auto flush = [&] {
    if (current.tokens.empty()) return;
    for (const GoldNegation& g : current.negations) {
      if (g.cue.empty()) {
        throw CorpusError(source, first_line, "negation without cue tokens");
      }
    }
    out.push_back(std::move(current));
    current = CorpusSentence{};
  };
  std::string line;
  while (std::getline(in, line)) {
    ++n;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::vector<std::string> cols = detail::SplitColumns(line);
    if (cols.empty()) {
      flush();
      continue;
    }
    std::size_t count;
    if (cols.size() == 8 && cols[7] == "***") {
      count = 0;
    } else if (cols.size() >= 10 && (cols.size() - 7) % 3 == 0) {
      count = (cols.size() - 7) / 3;
    } else {
      throw CorpusError(source, n,
                        "unexpected column count " +
                            std::to_string(cols.size()));
    }
    std::size_t sentence = detail::ParseIndex(cols[1], source, n,
                                              "sentence number");
    std::size_t index = detail::ParseIndex(cols[2], source, n, "token index");
    if (current.tokens.empty()) {
      first_line = n;
      current.chapter = cols[0];
      current.sentence = sentence;
      negations = count;
      current.negations.resize(count);
    } else if (count != negations) {
      throw CorpusError(source, n,
                        "negation column count differs within sentence");
    }
    current.tokens.push_back({index, cols[3], cols[4], cols[5], cols[6]});
    for (std::size_t k = 0; k < count; ++k) {
      const std::string& cue = cols[7 + 3 * k];
      const std::string& scope = cols[8 + 3 * k];
      const std::string& event = cols[9 + 3 * k];
      GoldNegation& g = current.negations[k];
      if (cue != "_") g.cue.emplace_back(index, cue);
      if (scope != "_") g.scope.push_back(index);
      if (event != "_") g.event.emplace_back(index, event);
    }
  }
  flush();
  return out;
}

inline std::vector<CorpusSentence> ReadCdsco(
    const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  return ReadCdsco(in, path.string());
}

// Inverse of ReadCdsco for every modelled field. Scope columns repeat the
// token's word.
inline void WriteCdsco(const std::vector<CorpusSentence>& sentences,
                       std::ostream& out) {
  for (const CorpusSentence& s : sentences) {
    for (const CorpusToken& t : s.tokens) {
      out << s.chapter << '\t' << s.sentence << '\t' << t.index << '\t'
          << t.word << '\t' << t.lemma << '\t' << t.pos << '\t' << t.parse;
      if (s.negations.empty()) out << "\t***";
      for (const GoldNegation& g : s.negations) {
        auto find = [&](const auto& list) -> std::string {
          for (const auto& [i, text] : list) {
            if (i == t.index) return text;
          }
          return "_";
        };
        bool in_scope = false;
        for (std::size_t i : g.scope) in_scope = in_scope || i == t.index;
        out << '\t' << find(g.cue) << '\t' << (in_scope ? t.word : "_")
            << '\t' << find(g.event);
      }
      out << '\n';
    }
    out << '\n';
  }
}

struct CorpusStats {
  std::size_t sentences = 0;
  std::size_t entries = 0;       // one per negation, one per plain sentence
  std::size_t negations = 0;
  std::size_t with_negatus = 0;  // negations whose event column is filled

  friend bool operator==(const CorpusStats&, const CorpusStats&) = default;
};

inline CorpusStats Stats(const std::vector<CorpusSentence>& sentences) {
  CorpusStats s;
  s.sentences = sentences.size();
  for (const CorpusSentence& c : sentences) {
    s.entries += c.negations.empty() ? 1 : c.negations.size();
    s.negations += c.negations.size();
    for (const GoldNegation& g : c.negations) {
      if (g.has_negatus()) ++s.with_negatus;
    }
  }
  return s;
}

inline text::TaskText ToTaskText(const CorpusSentence& s,
                                 const text::StopwordList* stopwords = nullptr) {
  std::vector<text::AnnotatedWord> words;
  for (const CorpusToken& t : s.tokens) {
    words.push_back({t.word, t.lemma, t.pos});
  }
  return text::FromAnnotated(words, stopwords);
}

// Gold negatus lemmas of one negation: the lemma column when the event
// spans the whole word, otherwise the annotated substring.
inline std::vector<std::string> GoldNegatus(const CorpusSentence& s,
                                            const GoldNegation& g) {
  std::vector<std::string> out;
  for (const auto& [index, text] : g.event) {
    std::string lemma = text;
    for (const CorpusToken& t : s.tokens) {
      if (t.index == index && t.word == text) lemma = t.lemma;
    }
    out.push_back(text::Lower(lemma));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Task files: one JSON object per line,
//   {"id": str, "text": str, "formula": str, "gold": [str]?, "cue_token": int?}

struct TaskRecord {
  std::string id;
  std::string text;
  std::string formula_text;
  std::optional<std::vector<std::string>> gold;
  // 0-based token index of the annotated cue, for sentences with several.
  std::optional<std::size_t> cue_token;
  std::size_t line = 0;
  std::optional<fol::Formula> formula;  // set when formula_text parses
  std::optional<std::string> error;     // set when it does not
};

class MalformedRecordsError : public std::runtime_error {
 public:
  MalformedRecordsError(const std::string& source,
                        std::vector<std::size_t> lines,
                        const std::string& first)
      : std::runtime_error(Describe(source, lines, first)),
        lines_(std::move(lines)) {}
  const std::vector<std::size_t>& lines() const { return lines_; }

 private:
  static std::string Describe(const std::string& source,
                              const std::vector<std::size_t>& lines,
                              const std::string& first) {
    std::string s = source + ": malformed task records on line";
    if (lines.size() > 1) s += "s";
    for (std::size_t i = 0; i < lines.size(); ++i) {
      s += (i ? ", " : " ") + std::to_string(lines[i]);
    }
    return s + " (" + first + ")";
  }
  std::vector<std::size_t> lines_;
};

inline std::vector<TaskRecord> ReadTasks(std::istream& in,
                                         const std::string& source) {
  std::vector<TaskRecord> out;
  std::vector<std::size_t> bad;
  std::string first_problem;
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    TaskRecord r;
    r.line = n;
    try {
      nlohmann::json j = nlohmann::json::parse(line);
      r.id = j.at("id").get<std::string>();
      r.text = j.at("text").get<std::string>();
      r.formula_text = j.at("formula").get<std::string>();
      if (j.contains("gold") && !j["gold"].is_null()) {
        r.gold = j["gold"].get<std::vector<std::string>>();
      }
      if (j.contains("cue_token") && !j["cue_token"].is_null()) {
        r.cue_token = j["cue_token"].get<std::size_t>();
      }
    } catch (const nlohmann::json::exception& e) {
      bad.push_back(n);
      if (first_problem.empty()) first_problem = e.what();
      continue;
    }
    try {
      r.formula = fol::Parse(r.formula_text);
    } catch (const fol::ParseError& e) {
      r.error = e.what();
    }
    out.push_back(std::move(r));
  }
  if (!bad.empty()) throw MalformedRecordsError(source, bad, first_problem);
  return out;
}

inline std::vector<TaskRecord> ReadTasks(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  return ReadTasks(in, path.string());
}

// ---------------------------------------------------------------------------
// Prediction files: one JSON object per line,
//   {"id", "assignments": [{"cue", "site", "overlap"}], "negatus": [str],
//    "inverse": [str|null], "formula": str}

struct PredictedAssignment {
  std::size_t cue = 0;
  std::size_t site = 0;
  std::vector<std::string> overlap;

  friend bool operator==(const PredictedAssignment&,
                         const PredictedAssignment&) = default;
};

struct PredictionRecord {
  std::string id;
  std::vector<PredictedAssignment> assignments;
  std::vector<std::string> negatus;
  std::vector<std::optional<std::string>> inverse;
  std::string formula;

  friend bool operator==(const PredictionRecord&,
                         const PredictionRecord&) = default;
};

inline PredictionRecord MakePrediction(const std::string& id,
                                       const align::TreatmentResult& r) {
  PredictionRecord p;
  p.id = id;
  for (const align::Assignment& a : r.assignments) {
    p.assignments.push_back(
        {a.cue_id, a.site_id, {a.overlap.begin(), a.overlap.end()}});
  }
  for (const align::Negatus& n : r.negati) {
    p.negatus.push_back(n.lemma);
    p.inverse.push_back(n.inverse);
  }
  p.formula = fol::Print(r.rewritten);
  return p;
}

inline nlohmann::ordered_json ToJson(const PredictionRecord& p) {
  nlohmann::ordered_json j;
  j["id"] = p.id;
  j["assignments"] = nlohmann::ordered_json::array();
  for (const PredictedAssignment& a : p.assignments) {
    nlohmann::ordered_json aj;
    aj["cue"] = a.cue;
    aj["site"] = a.site;
    aj["overlap"] = a.overlap;
    j["assignments"].push_back(std::move(aj));
  }
  j["negatus"] = p.negatus;
  j["inverse"] = nlohmann::ordered_json::array();
  for (const auto& inv : p.inverse) {
    j["inverse"].push_back(inv ? nlohmann::ordered_json(*inv)
                               : nlohmann::ordered_json(nullptr));
  }
  j["formula"] = p.formula;
  return j;
}

inline void WritePredictions(const std::vector<PredictionRecord>& records,
                             std::ostream& out) {
  for (const PredictionRecord& p : records) out << ToJson(p).dump() << '\n';
}

inline void WritePredictions(const std::vector<PredictionRecord>& records,
                             const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  WritePredictions(records, out);
  if (!out) throw std::runtime_error("error writing " + path.string());
}

inline std::vector<PredictionRecord> ReadPredictions(std::istream& in) {
  std::vector<PredictionRecord> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    nlohmann::json j = nlohmann::json::parse(line);
    PredictionRecord p;
    p.id = j.at("id").get<std::string>();
    for (const auto& a : j.at("assignments")) {
      p.assignments.push_back({a.at("cue").get<std::size_t>(),
                               a.at("site").get<std::size_t>(),
                               a.at("overlap").get<std::vector<std::string>>()});
    }
    p.negatus = j.at("negatus").get<std::vector<std::string>>();
    for (const auto& inv : j.at("inverse")) {
      p.inverse.push_back(inv.is_null()
                              ? std::nullopt
                              : std::optional<std::string>(
                                    inv.get<std::string>()));
    }
    p.formula = j.at("formula").get<std::string>();
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace negtreat::corpus

#endif  // NEGTREAT_CORPUS_HPP_

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

// Sentence preprocessing: tokenization with clitic splitting, stopword
// flags, lemmas and coarse POS guesses, negation cue detection and the word
// windows used to align cues with logical negations.

#ifndef NEGTREAT_TEXTPREP_HPP_
#define NEGTREAT_TEXTPREP_HPP_

#include <algorithm>
#include <array>
#include <cctype>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "negtreat/wordnet.hpp"

namespace negtreat::text {

struct Token {
  std::size_t index = 0;
  std::string surface;
  std::string lemma;
  std::string pos;  // Penn Treebank tag, or empty when unknown
  bool is_stopword = false;
  bool is_cue_part = false;

  friend bool operator==(const Token&, const Token&) = default;
};

struct TaskText {
  std::string raw;
  std::vector<Token> tokens;
  // Lemma and POS columns came from an annotated corpus rather than from
  // the built-in guesses.
  bool gold_annotations = false;

  friend bool operator==(const TaskText&, const TaskText&) = default;
};

struct Cue {
  std::size_t cue_id = 0;                  // 1-based
  std::vector<std::size_t> token_indices;  // contiguous
  std::string canonical;                   // "not", "don't", "can not", ...

  friend bool operator==(const Cue&, const Cue&) = default;
};

struct WordWindow {
  std::size_t cue_id = 0;
  std::vector<Token> member_tokens;  // sentence order
  std::set<std::string> lemma_set;

  friend bool operator==(const WordWindow&, const WordWindow&) = default;
};

inline std::string Lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

// ---------------------------------------------------------------------------
// Tokenization.

namespace detail {

inline bool IsWordByte(char c) {
  auto u = static_cast<unsigned char>(c);
  return std::isalnum(u) || u >= 0x80;
}

inline bool HasWordByte(std::string_view s) {
  return std::any_of(s.begin(), s.end(), IsWordByte);
}

inline std::string NormalizeQuotes(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    // U+2019 RIGHT SINGLE QUOTATION MARK
    if (raw.substr(i, 3) == "\xE2\x80\x99") {
      out += '\'';
      i += 2;
    } else {
      out += raw[i];
    }
  }
  return out;
}

inline void PushPunct(std::string_view s, std::vector<std::string>& out) {
  std::size_t i = 0;
  while (i < s.size()) {
    std::size_t j = i;
    while (j < s.size() && s[j] == s[i]) ++j;
    out.emplace_back(s.substr(i, j - i));
    i = j;
  }
}

inline void SplitWord(const std::string& w, std::vector<std::string>& out) {
  std::string low = Lower(w);
  if (low.size() > 3 && low.ends_with("n't")) {
    out.push_back(w.substr(0, w.size() - 3));
    out.push_back(w.substr(w.size() - 3));
    return;
  }
  static constexpr std::array<std::string_view, 6> clitics = {
      "'s", "'re", "'ve", "'ll", "'d", "'m"};
  for (std::string_view c : clitics) {
    if (low.size() > c.size() && low.ends_with(c)) {
      out.push_back(w.substr(0, w.size() - c.size()));
      out.push_back(w.substr(w.size() - c.size() + 1));
      return;
    }
  }
  out.push_back(w);
}

}  // namespace detail

// Whitespace and punctuation splitting; "don't" -> do + n't and
// "he's" -> he + s.
inline std::vector<Token> Tokenize(std::string_view raw) {
  std::string text = detail::NormalizeQuotes(raw);
  std::vector<std::string> pieces;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() &&
           std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
    }
    std::size_t j = i;
    while (j < text.size() &&
           !std::isspace(static_cast<unsigned char>(text[j]))) {
      ++j;
    }
    if (j == i) break;
    std::string_view chunk = std::string_view(text).substr(i, j - i);
    i = j;
    std::size_t b = 0, e = chunk.size();
    while (b < e && !detail::IsWordByte(chunk[b])) ++b;
    while (e > b && !detail::IsWordByte(chunk[e - 1])) --e;
    detail::PushPunct(chunk.substr(0, b), pieces);
    if (e > b) {
      detail::SplitWord(std::string(chunk.substr(b, e - b)), pieces);
    }
    detail::PushPunct(chunk.substr(e), pieces);
  }
  std::vector<Token> tokens;
  for (std::string& p : pieces) {
    Token t;
    t.index = tokens.size();
    t.lemma = Lower(p);
    t.surface = std::move(p);
    tokens.push_back(std::move(t));
  }
  return tokens;
}

// ---------------------------------------------------------------------------
// Stopwords.

// The NLTK English list minus modal and auxiliary verbs and negation cues.
inline const std::vector<std::string_view>& DefaultStopwordList() {
  static const std::vector<std::string_view> words = {
      "a", "about", "above", "after", "again", "against", "ain", "all", "am",
      "an", "and", "any", "are", "as", "at", "because", "been", "before",
      "being", "below", "between", "both", "but", "by", "d", "did", "do",
      "does", "doing", "down", "during", "each", "few", "for", "from",
      "further", "having", "he", "her", "here", "hers", "herself", "him",
      "himself", "his", "how", "i", "if", "in", "into", "it", "it's", "its",
      "itself", "just", "ll", "m", "ma", "me", "more", "most", "my", "myself",
      "now", "o", "of", "off", "on", "once", "only", "or", "other", "our",
      "ours", "ourselves", "out", "over", "own", "re", "s", "same", "shan",
      "she", "she's", "should've", "so", "some", "such", "than", "that",
      "that'll", "the", "their", "theirs", "them", "themselves", "then",
      "there", "these", "they", "this", "those", "through", "to", "too",
      "under", "until", "up", "ve", "very", "we", "what", "when", "where",
      "which", "while", "who", "whom", "why", "will", "with", "won", "y",
      "you", "you'd", "you'll", "you're", "you've", "your", "yours",
      "yourself", "yourselves"};
  return words;
}

class StopwordList {
 public:
  StopwordList() = default;

  static StopwordList Defaults() {
    StopwordList s;
    for (std::string_view w : DefaultStopwordList()) s.words_.emplace(w);
    return s;
  }

  // One word per line; blank lines are skipped.
  static StopwordList Load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    StopwordList s;
    std::string line;
    while (std::getline(in, line)) {
      while (!line.empty() &&
             std::isspace(static_cast<unsigned char>(line.back()))) {
        line.pop_back();
      }
      if (!line.empty()) s.words_.insert(Lower(line));
    }
    return s;
  }

  bool Contains(std::string_view word) const {
    return words_.count(Lower(word)) > 0;
  }
  std::size_t size() const { return words_.size(); }

 private:
  std::unordered_set<std::string> words_;
};

// Punctuation-only tokens count as stopwords as well.
inline void MarkStopwords(std::vector<Token>& tokens,
                          const StopwordList& stopwords) {
  for (Token& t : tokens) {
    t.is_stopword =
        stopwords.Contains(t.surface) || !detail::HasWordByte(t.surface);
  }
}

// ---------------------------------------------------------------------------
// Lemmas and POS guesses.

namespace detail {

// Surface forms produced by clitic splitting.
inline std::optional<std::string> CliticLemma(std::string_view low) {
  if (low == "n't") return "not";
  if (low == "ca") return "can";
  if (low == "wo") return "will";
  if (low == "sha") return "shall";
  return std::nullopt;
}

inline constexpr std::array<wordnet::PosClass, 4> kGuessOrder = {
    wordnet::PosClass::kVerb, wordnet::PosClass::kNoun,
    wordnet::PosClass::kAdjective, wordnet::PosClass::kAdverb};

inline std::optional<std::string> MorphyFirst(const wordnet::Lexicon& lexicon,
                                              std::string_view word,
                                              std::optional<wordnet::PosClass>
                                                  pos) {
  if (pos) {
    auto forms = lexicon.Morphy(word, *pos);
    if (!forms.empty()) return forms.front();
  }
  for (wordnet::PosClass p : kGuessOrder) {
    auto forms = lexicon.Morphy(word, p);
    if (!forms.empty()) return forms.front();
  }
  return std::nullopt;
}

}  // namespace detail

// Base form of a token: morphy under the token's POS class when it has one,
// else under verb, noun, adjective, adverb in that order; the lower-cased
// surface when nothing matches or no lexicon is given. Repeated until
// stable, which makes the result a fixpoint.
inline std::string Lemmatize(const Token& token,
                             const wordnet::Lexicon* lexicon) {
  std::string low = Lower(token.surface);
  if (auto c = detail::CliticLemma(low)) return *c;
  if (!lexicon) return low;
  auto pos = wordnet::PosFromPenn(token.pos);
  std::string current = low;
  for (int step = 0; step < 4; ++step) {
    auto next = detail::MorphyFirst(*lexicon, current, pos);
    if (!next || *next == current) break;
    current = *next;
  }
  return current;
}

// Coarse Penn tag for plain text: the first WordNet class, in the order verb,
// noun, adjective, adverb, that has a base form for the word.
inline std::string GuessPos(std::string_view surface,
                            const wordnet::Lexicon& lexicon) {
  static constexpr std::array<std::string_view, 4> tags = {"VB", "NN", "JJ",
                                                           "RB"};
  for (std::size_t i = 0; i < detail::kGuessOrder.size(); ++i) {
    if (!lexicon.Morphy(surface, detail::kGuessOrder[i]).empty()) {
      return std::string(tags[i]);
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// Negation cues.

namespace detail {

inline bool IsSingleCue(std::string_view low) {
  static const std::set<std::string_view> cues = {
      "not", "no", "never", "nor", "nothing", "cannot", "n't"};
  return cues.count(low) > 0;
}

inline bool TakesNot(std::string_view low) {
  static const std::set<std::string_view> heads = {
      "can", "could", "should", "is", "are", "was", "were", "will"};
  return heads.count(low) > 0;
}

}  // namespace detail

// Syntactic negation cues, left to right. "<aux> n't" and the "<aux> not"
// forms are matched before single-word cues.
inline std::vector<Cue> DetectCues(const std::vector<Token>& tokens) {
  std::vector<Cue> cues;
  std::size_t i = 0;
  while (i < tokens.size()) {
    std::string low = Lower(tokens[i].surface);
    std::string next =
        i + 1 < tokens.size() ? Lower(tokens[i + 1].surface) : std::string();
    Cue cue;
    if (next == "n't" && low != "n't" && detail::HasWordByte(low)) {
      cue.token_indices = {i, i + 1};
      cue.canonical = low + "n't";
    } else if (next == "not" && detail::TakesNot(low)) {
      cue.token_indices = {i, i + 1};
      cue.canonical = low + " not";
    } else if (detail::IsSingleCue(low)) {
      cue.token_indices = {i};
      cue.canonical = low;
    } else {
      ++i;
      continue;
    }
    i = cue.token_indices.back() + 1;
    cue.cue_id = cues.size() + 1;
    cues.push_back(std::move(cue));
  }
  return cues;
}

inline void MarkCues(std::vector<Token>& tokens, const std::vector<Cue>& cues) {
  for (const Cue& c : cues) {
    for (std::size_t i : c.token_indices) tokens[i].is_cue_part = true;
  }
}

// ---------------------------------------------------------------------------
// Word windows.

enum class WindowShape {
  kFollowing,     // first k non-stopwords after the cue
  kLeftAnchored,  // starts at the first non-stopword left of the cue
};

inline bool IsCandidate(const Token& t) {
  return !t.is_stopword && !t.is_cue_part;
}

inline WordWindow BuildWindow(const std::vector<Token>& tokens, const Cue& cue,
                              std::size_t k, WindowShape shape) {
  if (k == 0) throw std::invalid_argument("window size must be at least 1");
  WordWindow w;
  w.cue_id = cue.cue_id;
  std::size_t right_budget = k;
  if (shape == WindowShape::kLeftAnchored) {
    for (std::size_t i = cue.token_indices.front(); i-- > 0;) {
      if (IsCandidate(tokens[i])) {
        w.member_tokens.push_back(tokens[i]);
        --right_budget;
        break;
      }
    }
  }
  for (std::size_t i = cue.token_indices.back() + 1;
       i < tokens.size() && right_budget > 0; ++i) {
    if (IsCandidate(tokens[i])) {
      w.member_tokens.push_back(tokens[i]);
      --right_budget;
    }
  }
  for (const Token& t : w.member_tokens) w.lemma_set.insert(t.lemma);
  return w;
}

// ---------------------------------------------------------------------------
// Pipelines.

struct PrepareOptions {
  const StopwordList* stopwords = nullptr;  // defaults when null
  const wordnet::Lexicon* lexicon = nullptr;
};

// Plain text: tokenize, flag stopwords, lemmatize, guess POS.
inline TaskText Prepare(std::string_view raw, const PrepareOptions& options) {
  static const StopwordList defaults = StopwordList::Defaults();
  const StopwordList& stop = options.stopwords ? *options.stopwords : defaults;
  TaskText text;
  text.raw = std::string(raw);
  text.tokens = Tokenize(raw);
  MarkStopwords(text.tokens, stop);
  for (Token& t : text.tokens) {
    if (options.lexicon && !t.is_stopword) {
      t.pos = GuessPos(t.surface, *options.lexicon);
    }
    t.lemma = Lemmatize(t, options.lexicon);
  }
  return text;
}

// Pre-annotated tokens (one word, lemma and Penn tag each); the given lemma
// and tag win over the built-in guesses.
struct AnnotatedWord {
  std::string word;
  std::string lemma;
  std::string pos;
};

inline TaskText FromAnnotated(const std::vector<AnnotatedWord>& words,
                              const StopwordList* stopwords = nullptr) {
  static const StopwordList defaults = StopwordList::Defaults();
  const StopwordList& stop = stopwords ? *stopwords : defaults;
  TaskText text;
  text.gold_annotations = true;
  for (const AnnotatedWord& w : words) {
    if (!text.raw.empty()) text.raw += ' ';
    text.raw += w.word;
    Token t;
    t.index = text.tokens.size();
    t.surface = w.word;
    t.lemma = w.lemma.empty() ? Lower(w.word) : Lower(w.lemma);
    t.pos = w.pos;
    text.tokens.push_back(std::move(t));
  }
  MarkStopwords(text.tokens, stop);
  return text;
}

}  // namespace negtreat::text

#endif  // NEGTREAT_TEXTPREP_HPP_

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

// Reader for the WordNet 3.x database files (index.*, data.*, *.exc) with
// morphy-style base form lookup and antonym queries.

#ifndef NEGTREAT_WORDNET_HPP_
#define NEGTREAT_WORDNET_HPP_

#include <algorithm>
#include <array>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace negtreat::wordnet {

enum class PosClass { kNoun = 0, kVerb = 1, kAdjective = 2, kAdverb = 3 };

inline constexpr std::array<PosClass, 4> kAllPos = {
    PosClass::kNoun, PosClass::kVerb, PosClass::kAdjective, PosClass::kAdverb};

// File suffix used by the database: noun, verb, adj, adv.
inline std::string_view FileSuffix(PosClass pos) {
  static constexpr std::array<std::string_view, 4> names = {"noun", "verb",
                                                            "adj", "adv"};
  return names[static_cast<std::size_t>(pos)];
}

// Accepts "noun"/"n", "verb"/"v", "adj"/"adjective"/"a"/"s", "adv"/"adverb"/"r".
inline std::optional<PosClass> ParsePos(std::string_view s) {
  if (s == "n" || s == "noun") return PosClass::kNoun;
  if (s == "v" || s == "verb") return PosClass::kVerb;
  if (s == "a" || s == "s" || s == "adj" || s == "adjective") {
    return PosClass::kAdjective;
  }
  if (s == "r" || s == "adv" || s == "adverb") return PosClass::kAdverb;
  return std::nullopt;
}

// Penn Treebank tag to WordNet class.
inline std::optional<PosClass> PosFromPenn(std::string_view tag) {
  if (tag.starts_with("NN")) return PosClass::kNoun;
  if (tag.starts_with("VB") || tag == "MD") return PosClass::kVerb;
  if (tag.starts_with("JJ")) return PosClass::kAdjective;
  if (tag.starts_with("RB")) return PosClass::kAdverb;
  return std::nullopt;
}

struct Pointer {
  std::string symbol;
  std::uint32_t target = 0;
  PosClass pos = PosClass::kNoun;
  int source_word = 0;  // 1-based, 0 for semantic pointers
  int target_word = 0;

  friend bool operator==(const Pointer&, const Pointer&) = default;
};

struct Synset {
  std::uint32_t offset = 0;
  std::vector<std::string> words;  // lower case, underscores kept
  std::vector<Pointer> pointers;

  friend bool operator==(const Synset&, const Synset&) = default;
};

struct AntonymResult {
  std::string lemma;
  PosClass pos = PosClass::kNoun;
  std::vector<std::string> antonyms;
};

class LexiconError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MissingFileError : public LexiconError {
 public:
  explicit MissingFileError(const std::filesystem::path& path)
      : LexiconError("missing WordNet file: " + path.string()),
        path_(path) {}
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

class MalformedLineError : public LexiconError {
 public:
  MalformedLineError(const std::filesystem::path& path, std::size_t line,
                     const std::string& what)
      : LexiconError(path.string() + ":" + std::to_string(line) + ": " + what),
        path_(path),
        line_(line) {}
  const std::filesystem::path& path() const { return path_; }
  std::size_t line() const { return line_; }

 private:
  std::filesystem::path path_;
  std::size_t line_;
};

struct LoadStats {
  std::array<std::size_t, 4> index_lines{};
  std::array<std::size_t, 4> data_lines{};
  std::array<std::size_t, 4> exception_lines{};

  friend bool operator==(const LoadStats&, const LoadStats&) = default;
};

class Lexicon {
 public:
  static Lexicon Load(const std::filesystem::path& dir) {
    Lexicon lex;
    for (PosClass pos : kAllPos) {
      std::string suffix(FileSuffix(pos));
      lex.LoadData(pos, dir / ("data." + suffix));
      lex.LoadIndex(pos, dir / ("index." + suffix));
      lex.LoadExceptions(pos, dir / (suffix + ".exc"));
    }
    lex.CheckPointers(dir);
    return lex;
  }

  const LoadStats& stats() const { return stats_; }

  bool Contains(std::string_view lemma, PosClass pos) const {
    return index_[Slot(pos)].count(std::string(lemma)) > 0;
  }

  bool ContainsAnyPos(std::string_view lemma) const {
    for (PosClass pos : kAllPos) {
      if (Contains(lemma, pos)) return true;
    }
    return false;
  }

  // Synset offsets for `lemma`, in sense order.
  const std::vector<std::uint32_t>& Senses(std::string_view lemma,
                                           PosClass pos) const {
    static const std::vector<std::uint32_t> none;
    auto it = index_[Slot(pos)].find(std::string(lemma));
    return it == index_[Slot(pos)].end() ? none : it->second;
  }

  const Synset* Find(std::uint32_t offset, PosClass pos) const {
    auto it = synsets_[Slot(pos)].find(offset);
    return it == synsets_[Slot(pos)].end() ? nullptr : &it->second;
  }

  // Base forms of `surface` for one part of speech: the word itself and any
  // exception-list entries when it has them, otherwise the word itself and
  // the suffix-detachment candidates; only forms present in the index
  // survive.
  std::vector<std::string> Morphy(std::string_view surface,
                                  PosClass pos) const {
    std::string form = Normalize(surface);
    std::vector<std::string> candidates = {form};
    const auto& exc = exceptions_[Slot(pos)];
    if (auto it = exc.find(form); it != exc.end()) {
      candidates.insert(candidates.end(), it->second.begin(),
                        it->second.end());
    } else {
      for (const auto& [suffix, ending] : DetachmentRules(pos)) {
        if (form.size() > suffix.size() && form.ends_with(suffix)) {
          candidates.push_back(form.substr(0, form.size() - suffix.size()) +
                               std::string(ending));
        }
      }
    }
    std::vector<std::string> out;
    for (std::string& c : candidates) {
      if (Contains(c, pos) &&
          std::find(out.begin(), out.end(), c) == out.end()) {
        out.push_back(std::move(c));
      }
    }
    return out;
  }

  // Direct antonyms of every sense of `lemma` (sense order), followed by the
  // antonyms of the other members of those synsets.
  AntonymResult Antonyms(std::string_view lemma, PosClass pos) const {
    AntonymResult result{Normalize(lemma), pos, {}};
    auto add = [&](const std::string& w) {
      if (w != result.lemma && std::find(result.antonyms.begin(),
                                         result.antonyms.end(),
                                         w) == result.antonyms.end()) {
        result.antonyms.push_back(w);
      }
    };
    const auto& senses = Senses(result.lemma, pos);
    for (int pass = 0; pass < 2; ++pass) {
      for (std::uint32_t offset : senses) {
        const Synset* synset = Find(offset, pos);
        if (!synset) continue;
        for (const Pointer& p : synset->pointers) {
          if (p.symbol != "!") continue;
          bool own = p.source_word == 0 ||
                     synset->words[p.source_word - 1] == result.lemma;
          if (own != (pass == 0)) continue;
          const Synset* target = Find(p.target, p.pos);
          if (!target) continue;
          if (p.target_word == 0) {
            for (const std::string& w : target->words) add(w);
          } else {
            add(target->words[p.target_word - 1]);
          }
        }
      }
    }
    return result;
  }

  friend bool operator==(const Lexicon&, const Lexicon&) = default;

 private:
  static std::size_t Slot(PosClass pos) { return static_cast<std::size_t>(pos); }

  static std::string Normalize(std::string_view s) {
    std::string out;
    for (char c : s) {
      out += c == ' ' ? '_'
                      : static_cast<char>(
                            std::tolower(static_cast<unsigned char>(c)));
    }
    return out;
  }

  using Rules = std::vector<std::pair<std::string_view, std::string_view>>;

  static const Rules& DetachmentRules(PosClass pos) {
    static const std::array<Rules, 4> rules = {
        Rules{{"s", ""}, {"ses", "s"}, {"xes", "x"}, {"zes", "z"},
              {"ches", "ch"}, {"shes", "sh"}, {"men", "man"}, {"ies", "y"}},
        Rules{{"s", ""}, {"ies", "y"}, {"es", "e"}, {"es", ""},
              {"ed", "e"}, {"ed", ""}, {"ing", "e"}, {"ing", ""}},
        Rules{{"er", ""}, {"est", ""}, {"er", "e"}, {"est", "e"}},
        Rules{}};
    return rules[Slot(pos)];
  }

  static std::ifstream Open(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw MissingFileError(path);
    return in;
  }

  static std::vector<std::string> Fields(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream ss(line);
    std::string f;
    while (ss >> f) out.push_back(std::move(f));
    return out;
  }

  template <typename T>
  static T Number(const std::string& s, int base,
                  const std::filesystem::path& path, std::size_t line) {
    if (s.empty()) throw MalformedLineError(path, line, "empty number");
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(s, &used, base);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != s.size()) {
      throw MalformedLineError(path, line, "bad number '" + s + "'");
    }
    return static_cast<T>(v);
  }

  static std::string StripMarker(std::string word) {
    // Adjectives in data.adj may carry (a), (p) or (ip).
    if (auto p = word.find('('); p != std::string::npos) word.erase(p);
    return Normalize(word);
  }

  void LoadData(PosClass pos, const std::filesystem::path& path) {
    std::ifstream in = Open(path);
    std::string line;
    std::size_t n = 0;
    auto& table = synsets_[Slot(pos)];
    while (std::getline(in, line)) {
      ++n;
      if (line.empty() || line[0] == ' ') continue;  // license header
      std::string body = line.substr(0, line.find('|'));
      std::vector<std::string> f = Fields(body);
      auto need = [&](std::size_t i) {
        if (i >= f.size()) {
          throw MalformedLineError(path, n, "truncated synset record");
        }
      };
      need(3);
      Synset s;
      s.offset = Number<std::uint32_t>(f[0], 10, path, n);
      auto ss_type = ParsePos(f[2]);
      if (!ss_type || *ss_type != pos) {
        throw MalformedLineError(path, n, "unexpected synset type " + f[2]);
      }
      std::size_t words = Number<std::size_t>(f[3], 16, path, n);
      std::size_t i = 4;
      for (std::size_t w = 0; w < words; ++w, i += 2) {
        need(i + 1);
        s.words.push_back(StripMarker(f[i]));
      }
      need(i);
      std::size_t pointers = Number<std::size_t>(f[i++], 10, path, n);
      for (std::size_t p = 0; p < pointers; ++p, i += 4) {
        need(i + 3);
        Pointer ptr;
        ptr.symbol = f[i];
        ptr.target = Number<std::uint32_t>(f[i + 1], 10, path, n);
        auto target_pos = ParsePos(f[i + 2]);
        if (!target_pos) {
          throw MalformedLineError(path, n, "bad pointer pos " + f[i + 2]);
        }
        ptr.pos = *target_pos;
        if (f[i + 3].size() != 4) {
          throw MalformedLineError(path, n, "bad source/target " + f[i + 3]);
        }
        ptr.source_word = Number<int>(f[i + 3].substr(0, 2), 16, path, n);
        ptr.target_word = Number<int>(f[i + 3].substr(2, 2), 16, path, n);
        if (ptr.source_word > static_cast<int>(s.words.size())) {
          throw MalformedLineError(path, n, "pointer source out of range");
        }
        s.pointers.push_back(std::move(ptr));
      }
      if (line.find('|') == std::string::npos) {
        throw MalformedLineError(path, n, "missing gloss separator");
      }
      if (!table.emplace(s.offset, s).second) {
        throw MalformedLineError(path, n, "duplicate synset offset");
      }
      ++stats_.data_lines[Slot(pos)];
    }
  }

  void LoadIndex(PosClass pos, const std::filesystem::path& path) {
    std::ifstream in = Open(path);
    std::string line;
    std::size_t n = 0;
    auto& table = index_[Slot(pos)];
    while (std::getline(in, line)) {
      ++n;
      if (line.empty() || line[0] == ' ') continue;
      std::vector<std::string> f = Fields(line);
      if (f.size() < 6) throw MalformedLineError(path, n, "truncated entry");
      std::size_t synsets = Number<std::size_t>(f[2], 10, path, n);
      std::size_t pointers = Number<std::size_t>(f[3], 10, path, n);
      std::size_t first = 4 + pointers + 2;
      if (f.size() != first + synsets) {
        throw MalformedLineError(path, n, "synset count mismatch");
      }
      std::vector<std::uint32_t> offsets;
      for (std::size_t i = first; i < f.size(); ++i) {
        std::uint32_t off = Number<std::uint32_t>(f[i], 10, path, n);
        if (!synsets_[Slot(pos)].count(off)) {
          throw MalformedLineError(path, n,
                                   "unknown synset offset " + f[i]);
        }
        offsets.push_back(off);
      }
      table[Normalize(f[0])] = std::move(offsets);
      ++stats_.index_lines[Slot(pos)];
    }
  }

  void LoadExceptions(PosClass pos, const std::filesystem::path& path) {
    std::ifstream in = Open(path);
    std::string line;
    std::size_t n = 0;
    auto& table = exceptions_[Slot(pos)];
    while (std::getline(in, line)) {
      ++n;
      std::vector<std::string> f = Fields(line);
      if (f.empty()) continue;
      if (f.size() < 2) throw MalformedLineError(path, n, "no base form");
      auto& bases = table[Normalize(f[0])];
      for (std::size_t i = 1; i < f.size(); ++i) {
        bases.push_back(Normalize(f[i]));
      }
      ++stats_.exception_lines[Slot(pos)];
    }
  }

  void CheckPointers(const std::filesystem::path& dir) const {
    for (PosClass pos : kAllPos) {
      for (const auto& [offset, synset] : synsets_[Slot(pos)]) {
        for (const Pointer& p : synset.pointers) {
          const Synset* target = Find(p.target, p.pos);
          if (!target ||
              p.target_word > static_cast<int>(target->words.size())) {
            throw LexiconError(
                (dir / ("data." + std::string(FileSuffix(pos)))).string() +
                ": synset " + std::to_string(offset) +
                " points to missing synset " + std::to_string(p.target));
          }
        }
      }
    }
  }

  std::array<std::unordered_map<std::string, std::vector<std::uint32_t>>, 4>
      index_;
  std::array<std::unordered_map<std::uint32_t, Synset>, 4> synsets_;
  std::array<std::unordered_map<std::string, std::vector<std::string>>, 4>
      exceptions_;
  LoadStats stats_;
};

// Supplementary "lemma antonym" table consulted before WordNet. It covers the
// modal negation cues, which have no usable antonym pointers.
class AntonymOverrides {
 public:
  AntonymOverrides() = default;

  static AntonymOverrides Defaults() {
    AntonymOverrides o;
    o.table_ = {{"can", "unable"}, {"could", "unable"}};
    return o;
  }

  static AntonymOverrides Parse(std::istream& in, const std::string& name) {
    AntonymOverrides o;
    std::string line;
    std::size_t n = 0;
    while (std::getline(in, line)) {
      ++n;
      std::istringstream ss(line);
      std::string lemma, antonym, extra;
      if (!(ss >> lemma)) continue;
      if (lemma[0] == '#') continue;
      if (!(ss >> antonym) || (ss >> extra)) {
        throw std::runtime_error(name + ":" + std::to_string(n) +
                                 ": expected two columns");
      }
      o.table_[lemma] = antonym;
    }
    return o;
  }

  static AntonymOverrides Load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw MissingFileError(path);
    return Parse(in, path.string());
  }

  std::optional<std::string> Find(std::string_view lemma) const {
    auto it = table_.find(std::string(lemma));
    if (it == table_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t size() const { return table_.size(); }

 private:
  std::map<std::string, std::string> table_;
};

}  // namespace negtreat::wordnet

#endif  // NEGTREAT_WORDNET_HPP_

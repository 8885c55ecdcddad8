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

// Command-line front end. Exit codes: 0 success, 1 usage error, 2 data
// error. Data goes to stdout (or --out), diagnostics to stderr.

#ifndef NEGTREAT_CLI_HPP_
#define NEGTREAT_CLI_HPP_

#include <cstddef>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "negtreat/align.hpp"
#include "negtreat/clause.hpp"
#include "negtreat/corpus.hpp"
#include "negtreat/eval.hpp"
#include "negtreat/fol.hpp"
#include "negtreat/pipeline.hpp"
#include "negtreat/textprep.hpp"
#include "negtreat/wordnet.hpp"

namespace negtreat::cli {

inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kDataError = 2;

// Environment variable naming the WordNet dict directory when --wordnet is
// not given; the one the WordNet tools themselves read.
inline constexpr const char* kWordnetEnv = "WNSEARCHDIR";

struct RunConfig {
  std::string command;
  std::vector<std::string> inputs;
  std::vector<std::string> cdsco;
  std::size_t k = 3;
  std::string strategy;  // empty: comb for treat, all five for eval
  std::string wordnet;
  std::string stopwords;
  std::string exclude_roles;
  std::string antonyms;
  bool filtered = false;
  bool clausify = false;
  bool open = false;
  std::string out;
  std::string csv;
  std::string lemma;
  std::string pos;
};

namespace detail {

class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Loaded {
  std::optional<text::StopwordList> stopwords;
  std::optional<wordnet::Lexicon> lexicon;
  std::optional<wordnet::AntonymOverrides> overrides;
  pipeline::Resources resources;
};

inline std::string WordnetDir(const RunConfig& c) {
  if (!c.wordnet.empty()) return c.wordnet;
  const char* env = std::getenv(kWordnetEnv);
  return env ? env : "";
}

inline std::unique_ptr<Loaded> LoadResources(const RunConfig& c,
                                             std::ostream& err) {
  auto l = std::make_unique<Loaded>();
  try {
    if (!c.stopwords.empty()) {
      l->stopwords = text::StopwordList::Load(c.stopwords);
      l->resources.stopwords = &*l->stopwords;
    }
    if (std::string dir = WordnetDir(c); !dir.empty()) {
      l->lexicon = wordnet::Lexicon::Load(dir);
      l->resources.lexicon = &*l->lexicon;
      const auto& s = l->lexicon->stats();
      err << "wordnet: " << dir << " (";
      for (wordnet::PosClass p : wordnet::kAllPos) {
        auto i = static_cast<std::size_t>(p);
        err << (i ? ", " : "") << wordnet::FileSuffix(p) << " "
            << s.index_lines[i] << "/" << s.data_lines[i] << "/"
            << s.exception_lines[i];
      }
      err << " index/data/exc lines)\n";
    }
    l->overrides = c.antonyms.empty()
                       ? wordnet::AntonymOverrides::Defaults()
                       : wordnet::AntonymOverrides::Load(c.antonyms);
    l->resources.overrides = &*l->overrides;
    if (!c.exclude_roles.empty()) {
      std::ifstream in(c.exclude_roles);
      if (!in) throw DataError("cannot read " + c.exclude_roles);
      l->resources.scope.excluded_roles.clear();
      std::string word;
      while (in >> word) l->resources.scope.excluded_roles.insert(word);
    }
  } catch (const DataError&) {
    throw;
  } catch (const std::exception& e) {
    throw DataError(e.what());
  }
  return l;
}

class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) {
    if (path.empty()) {
      stream_ = &fallback;
    } else {
      file_.open(path, std::ios::binary);
      if (!file_) throw DataError("cannot write " + path);
      stream_ = &file_;
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_ = nullptr;
};

inline std::string Join(const std::vector<std::string>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i];
  return s.empty() ? "-" : s;
}

}  // namespace detail

inline int CmdTreat(const RunConfig& c, std::ostream& out, std::ostream& err) {
  auto strategy = align::ParseStrategy(c.strategy.empty() ? "comb"
                                                          : c.strategy);
  auto res = detail::LoadResources(c, err);
  std::vector<corpus::TaskRecord> tasks;
  try {
    tasks = corpus::ReadTasks(c.inputs.at(0));
  } catch (const std::exception& e) {
    throw detail::DataError(e.what());
  }
  int code = kOk;
  std::vector<corpus::PredictionRecord> predictions;
  for (const corpus::TaskRecord& t : tasks) {
    if (!t.formula) {
      err << t.id << ": formula error: " << *t.error << "\n";
      code = kDataError;
      continue;
    }
    align::TreatmentResult r =
        pipeline::TreatRecord(t, res->resources, c.k, *strategy);
    corpus::PredictionRecord p = corpus::MakePrediction(t.id, r);
    std::vector<std::string> inverses;
    for (const auto& inv : p.inverse) inverses.push_back(inv.value_or("-"));
    err << t.id << ": cues=" << r.cues.size()
        << " assignments=" << r.assignments.size()
        << " negatus=" << detail::Join(p.negatus)
        << " inverse=" << detail::Join(inverses) << "\n";
    predictions.push_back(std::move(p));
  }
  detail::Output o(c.out, out);
  corpus::WritePredictions(predictions, o.get());
  return code;
}

inline int CmdEval(const RunConfig& c, std::ostream& out, std::ostream& err) {
  std::vector<align::Strategy> strategies;
  if (c.strategy.empty()) {
    strategies.assign(align::kAllStrategies.begin(),
                      align::kAllStrategies.end());
  } else {
    strategies.push_back(*align::ParseStrategy(c.strategy));
  }
  auto res = detail::LoadResources(c, err);
  int code = kOk;
  std::vector<eval::ScoredRun> runs;
  for (std::size_t i = 0; i < c.inputs.size(); ++i) {
    std::string split = std::filesystem::path(c.inputs[i]).stem().string();
    std::vector<corpus::TaskRecord> tasks;
    std::vector<corpus::CorpusSentence> sentences;
    try {
      tasks = corpus::ReadTasks(c.inputs[i]);
      if (!c.cdsco.empty()) sentences = corpus::ReadCdsco(c.cdsco[i]);
    } catch (const std::exception& e) {
      err << "split " << split << " unreadable: " << e.what() << "\n";
      code = kDataError;
      continue;
    }
    for (align::Strategy s : strategies) {
      pipeline::ScoringInput in =
          c.cdsco.empty()
              ? pipeline::FromTasks(tasks, res->resources, c.k, s)
              : pipeline::FromCorpus(sentences, tasks, res->resources, c.k, s);
      if (s == strategies.front()) {
        for (const std::string& p : in.problems) {
          err << split << ": " << p << "\n";
        }
        bool any_gold = false;
        for (const auto& g : in.gold) any_gold = any_gold || !g.lemmas.empty();
        if (!any_gold) {
          err << "warning: split " << split
              << " has no gold negatus; recall reported as 0\n";
        }
      }
      eval::ScoredRun run = eval::Score(in.predictions, in.gold,
                                        {c.filtered});
      run.strategy = std::string(align::StrategyName(s));
      run.split = split;
      runs.push_back(std::move(run));
    }
  }
  eval::Report report = eval::MakeReport(runs);
  detail::Output o(c.out, out);
  o.get() << report.text;
  if (!c.csv.empty()) {
    detail::Output csv(c.csv, out);
    csv.get() << report.csv;
  }
  return code;
}

// One formula per line; blank lines and lines starting with '%' are skipped.
inline int CmdParse(const RunConfig& c, std::ostream& out, std::ostream& err) {
  std::ifstream in(c.inputs.at(0));
  if (!in) throw detail::DataError("cannot read " + c.inputs.at(0));
  int code = kOk;
  std::string line;
  std::size_t n = 0;
  detail::Output o(c.out, out);
  while (std::getline(in, line)) {
    ++n;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '%') continue;
    try {
      fol::Formula f = fol::Parse(line, {c.open});
      if (c.clausify) {
        for (const fol::Clause& cl : fol::Clausify(f)) {
          o.get() << fol::Print(cl) << "\n";
        }
      } else {
        o.get() << fol::Print(f) << "\n";
      }
    } catch (const fol::ParseError& e) {
      err << c.inputs[0] << ":" << n << ": " << e.what() << "\n";
      code = kDataError;
    } catch (const fol::UnsupportedConstructError& e) {
      err << c.inputs[0] << ":" << n << ": " << e.what() << "\n";
      code = kDataError;
    }
  }
  return code;
}

inline int CmdAntonym(const RunConfig& c, std::ostream& out,
                      std::ostream& err) {
  std::string dir = detail::WordnetDir(c);
  if (dir.empty()) {
    err << "antonym: no WordNet directory (--wordnet or " << kWordnetEnv
        << ")\n";
    return kUsage;
  }
  auto pos = wordnet::ParsePos(c.pos);
  if (!pos) {
    err << "antonym: unknown part of speech '" << c.pos << "'\n";
    return kUsage;
  }
  wordnet::Lexicon lex;
  try {
    lex = wordnet::Lexicon::Load(dir);
  } catch (const std::exception& e) {
    throw detail::DataError(e.what());
  }
  for (const std::string& a : lex.Antonyms(c.lemma, *pos).antonyms) {
    out << a << "\n";
  }
  return kOk;
}

inline int CmdStats(const RunConfig& c, std::ostream& out, std::ostream&) {
  for (const std::string& path : c.inputs) {
    std::vector<corpus::CorpusSentence> s;
    try {
      s = corpus::ReadCdsco(path);
    } catch (const std::exception& e) {
      throw detail::DataError(e.what());
    }
    corpus::CorpusStats st = corpus::Stats(s);
    out << path << ": sentences=" << st.sentences << " entries=" << st.entries
        << " negations=" << st.negations
        << " with_negatus=" << st.with_negatus << "\n";
  }
  return kOk;
}

inline int Run(int argc, const char* const* argv, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"negtreat: negation scope narrowing for first-order formulas"};
  app.require_subcommand(1);
  RunConfig c;

  auto strategy_check = CLI::IsMember({"baseline", "fns", "fv", "fv-fns",
                                       "comb"});
  auto common = [&](CLI::App* sub) {
    sub->add_option("--k", c.k, "word window size")
        ->check(CLI::PositiveNumber);
    sub->add_option("--strategy", c.strategy, "negatus strategy")
        ->check(strategy_check);
    sub->add_option("--wordnet", c.wordnet,
                    std::string("WordNet dict directory (default $") +
                        kWordnetEnv + ")");
    sub->add_option("--stopwords", c.stopwords, "stopword list, one per line");
    sub->add_option("--exclude-roles", c.exclude_roles,
                    "role predicates left out of negation scopes");
    sub->add_option("--antonyms", c.antonyms,
                    "antonym override table (lemma antonym)");
    sub->add_option("--out", c.out, "output file (default stdout)");
  };

  CLI::App* treat = app.add_subcommand("treat", "treat negations in tasks");
  treat->add_option("tasks", c.inputs, "task file (JSON lines)")
      ->required()
      ->expected(1);
  common(treat);

  CLI::App* ev = app.add_subcommand("eval", "score negatus predictions");
  ev->add_option("tasks", c.inputs, "task files, one per split")->required();
  ev->add_option("--cdsco", c.cdsco,
                 "CD-SCO files paired with the task files in order");
  ev->add_flag("--filtered", c.filtered,
               "leave out predictions where gold has no negatus");
  ev->add_option("--csv", c.csv, "also write comma-separated values here");
  common(ev);

  CLI::App* parse = app.add_subcommand("parse", "parse and print formulas");
  parse->add_option("file", c.inputs, "formula file")->required()->expected(1);
  parse->add_flag("--clausify", c.clausify, "print clause normal form");
  parse->add_flag("--open", c.open, "allow free variables");
  parse->add_option("--out", c.out, "output file (default stdout)");

  CLI::App* ant = app.add_subcommand("antonym", "look up WordNet antonyms");
  ant->add_option("lemma", c.lemma)->required();
  ant->add_option("pos", c.pos, "noun, verb, adj or adv")->required();
  ant->add_option("--wordnet", c.wordnet, "WordNet dict directory");

  CLI::App* stats = app.add_subcommand("stats", "CD-SCO corpus statistics");
  stats->add_option("files", c.inputs)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kUsage;
  }
  if (ev->parsed() && !c.cdsco.empty() && c.cdsco.size() != c.inputs.size()) {
    err << "eval: --cdsco given " << c.cdsco.size() << " times for "
        << c.inputs.size() << " task files\n";
    return kUsage;
  }

  try {
    if (treat->parsed()) return CmdTreat(c, out, err);
    if (ev->parsed()) return CmdEval(c, out, err);
    if (parse->parsed()) return CmdParse(c, out, err);
    if (ant->parsed()) return CmdAntonym(c, out, err);
    if (stats->parsed()) return CmdStats(c, out, err);
  } catch (const detail::DataError& e) {
    err << e.what() << "\n";
    return kDataError;
  }
  return kUsage;
}

}  // namespace negtreat::cli

#endif  // NEGTREAT_CLI_HPP_

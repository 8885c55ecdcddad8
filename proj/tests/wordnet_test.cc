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

#include "negtreat/wordnet.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "gtest/gtest.h"
#include "test_support.hpp"

namespace negtreat::wordnet {
namespace {

namespace fs = std::filesystem;

bool Has(const std::vector<std::string>& v, const std::string& w) {
  return std::find(v.begin(), v.end(), w) != v.end();
}

class ScratchDir {
 public:
  explicit ScratchDir(const std::string& name)
      : path_(fs::temp_directory_path() /
              ("negtreat_" + name + "_" + std::to_string(::getpid()))) {
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~ScratchDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

class WordnetTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    lexicon_ = new Lexicon(Lexicon::Load(testing::FixtureWordnet()));
  }
  static void TearDownTestSuite() {
    delete lexicon_;
    lexicon_ = nullptr;
  }
  static Lexicon* lexicon_;
};

Lexicon* WordnetTest::lexicon_ = nullptr;

TEST(PosTest, Names) {
  EXPECT_EQ(ParsePos("noun"), PosClass::kNoun);
  EXPECT_EQ(ParsePos("v"), PosClass::kVerb);
  EXPECT_EQ(ParsePos("adj"), PosClass::kAdjective);
  EXPECT_EQ(ParsePos("s"), PosClass::kAdjective);
  EXPECT_EQ(ParsePos("adv"), PosClass::kAdverb);
  EXPECT_FALSE(ParsePos("preposition"));
  EXPECT_EQ(PosFromPenn("NNS"), PosClass::kNoun);
  EXPECT_EQ(PosFromPenn("VBD"), PosClass::kVerb);
  EXPECT_EQ(PosFromPenn("MD"), PosClass::kVerb);
  EXPECT_EQ(PosFromPenn("JJR"), PosClass::kAdjective);
  EXPECT_EQ(PosFromPenn("RB"), PosClass::kAdverb);
  EXPECT_FALSE(PosFromPenn("IN"));
  EXPECT_FALSE(PosFromPenn(""));
}

TEST_F(WordnetTest, Entries) {
  EXPECT_TRUE(lexicon_->Contains("good", PosClass::kAdjective));
  EXPECT_TRUE(lexicon_->Contains("subject", PosClass::kNoun));
  EXPECT_FALSE(lexicon_->Contains("school_subject", PosClass::kNoun));
  EXPECT_FALSE(lexicon_->Contains("xyzzy", PosClass::kNoun));
  EXPECT_EQ(lexicon_->Senses("good", PosClass::kAdjective).front(), 1123148u);
  const Synset* s = lexicon_->Find(1123148, PosClass::kAdjective);
  ASSERT_NE(s, nullptr);
  EXPECT_EQ(s->words.front(), "good");
}

TEST_F(WordnetTest, Morphy) {
  EXPECT_EQ(lexicon_->Morphy("raisins", PosClass::kNoun),
            std::vector<std::string>{"raisin"});
  EXPECT_EQ(lexicon_->Morphy("good", PosClass::kAdjective),
            std::vector<std::string>{"good"});
  EXPECT_EQ(lexicon_->Morphy("went", PosClass::kVerb),
            std::vector<std::string>{"go"});
  EXPECT_EQ(lexicon_->Morphy("Cookies", PosClass::kNoun),
            std::vector<std::string>{"cookie"});
  EXPECT_EQ(lexicon_->Morphy("realized", PosClass::kVerb),
            std::vector<std::string>{"realize"});
  EXPECT_TRUE(lexicon_->Morphy("xyzzies", PosClass::kNoun).empty());
}

TEST_F(WordnetTest, Antonyms) {
  EXPECT_EQ(lexicon_->Antonyms("good", PosClass::kAdjective).antonyms.front(),
            "bad");
  EXPECT_TRUE(Has(lexicon_->Antonyms("like", PosClass::kVerb).antonyms,
                  "dislike"));
  EXPECT_TRUE(lexicon_->Antonyms("xyzzy", PosClass::kNoun).antonyms.empty());
  // The modal sense is not in WordNet; "can" (fire) opposes "hire".
  EXPECT_EQ(lexicon_->Antonyms("can", PosClass::kVerb).antonyms,
            std::vector<std::string>{"hire"});
  EXPECT_EQ(lexicon_->Antonyms("good", PosClass::kNoun).antonyms.front(),
            "evil");
}

// Lexical antonym pointers always come in pairs.
TEST_F(WordnetTest, AntonymPointersAreSymmetric) {
  std::size_t checked = 0;
  for (PosClass pos : kAllPos) {
    for (const char* lemma :
         {"good", "bad", "like", "dislike", "stop", "happy", "sad", "big",
          "small", "love", "hate", "open", "close", "true", "false", "well",
          "ill", "can", "able", "unable"}) {
      for (std::uint32_t offset : lexicon_->Senses(lemma, pos)) {
        const Synset* s = lexicon_->Find(offset, pos);
        ASSERT_NE(s, nullptr);
        for (const Pointer& p : s->pointers) {
          if (p.symbol != "!") continue;
          const Synset* t = lexicon_->Find(p.target, p.pos);
          ASSERT_NE(t, nullptr);
          bool back = std::any_of(
              t->pointers.begin(), t->pointers.end(), [&](const Pointer& q) {
                return q.symbol == "!" && q.target == s->offset &&
                       q.pos == pos && q.source_word == p.target_word &&
                       q.target_word == p.source_word;
              });
          EXPECT_TRUE(back) << lemma << " " << offset << " -> " << p.target;
          ++checked;
        }
      }
    }
  }
  EXPECT_GT(checked, 20u);
}

TEST_F(WordnetTest, DeterministicLoad) {
  Lexicon again = Lexicon::Load(testing::FixtureWordnet());
  EXPECT_TRUE(again == *lexicon_);
  EXPECT_EQ(again.stats(), lexicon_->stats());
}

TEST(WordnetLoadTest, EmptyDirectory) {
  ScratchDir dir("empty");
  try {
    Lexicon::Load(dir.path());
    FAIL() << "no error";
  } catch (const MissingFileError& e) {
    EXPECT_EQ(e.path().filename(), "data.noun");
  }
}

TEST(WordnetLoadTest, TruncatedDataFile) {
  ScratchDir dir("truncated");
  fs::copy(testing::FixtureWordnet(), dir.path(),
           fs::copy_options::recursive);
  fs::path data = dir.path() / "data.verb";
  std::ifstream in(data);
  std::stringstream buffer;
  buffer << in.rdbuf();
  in.close();
  std::string text = buffer.str();
  // Keep only offset, lex file and type of the last synset line.
  std::size_t last = text.rfind('\n', text.size() - 2) + 1;
  std::size_t cut = last;
  for (int field = 0; field < 3; ++field) cut = text.find(' ', cut) + 1;
  text.resize(cut);
  text += "\n";
  std::ofstream(data, std::ios::binary | std::ios::trunc) << text;
  try {
    Lexicon::Load(dir.path());
    FAIL() << "no error";
  } catch (const MalformedLineError& e) {
    EXPECT_EQ(e.path().filename(), "data.verb");
    EXPECT_GT(e.line(), 1u);
  }
}

TEST(WordnetLoadTest, IndexPointingNowhere) {
  ScratchDir dir("dangling");
  fs::copy(testing::FixtureWordnet(), dir.path(),
           fs::copy_options::recursive);
  std::ofstream(dir.path() / "index.adv", std::ios::app)
      << "zzz r 1 0 1 0 99999999  \n";
  EXPECT_THROW(Lexicon::Load(dir.path()), MalformedLineError);
}

TEST(OverridesTest, DefaultsAndShippedFile) {
  AntonymOverrides d = AntonymOverrides::Defaults();
  EXPECT_EQ(d.Find("can"), "unable");
  EXPECT_EQ(d.Find("could"), "unable");
  EXPECT_FALSE(d.Find("should"));
  AntonymOverrides file = AntonymOverrides::Load(
      testing::SourceDir() + "/data/antonym_overrides.txt");
  EXPECT_EQ(file.size(), d.size());
  EXPECT_EQ(file.Find("can"), "unable");
  EXPECT_EQ(file.Find("could"), "unable");
}

TEST(OverridesTest, Parse) {
  std::istringstream in("# comment\n\nmust needn't\n");
  AntonymOverrides o = AntonymOverrides::Parse(in, "test");
  EXPECT_EQ(o.Find("must"), "needn't");
  std::istringstream bad("one two three\n");
  EXPECT_THROW(AntonymOverrides::Parse(bad, "test"), std::runtime_error);
  EXPECT_THROW(AntonymOverrides::Load("/nonexistent/overrides.txt"),
               MissingFileError);
}

// Runs against a complete WordNet 3.0 when NEGTREAT_WORDNET_DIR names one.
TEST(FullWordnetTest, Examples) {
  const char* dir = std::getenv("NEGTREAT_WORDNET_DIR");
  if (!dir || !*dir) GTEST_SKIP() << "NEGTREAT_WORDNET_DIR not set";
  Lexicon lex = Lexicon::Load(dir);
  EXPECT_GT(lex.stats().index_lines[0], 100000u);
  EXPECT_EQ(lex.Antonyms("good", PosClass::kAdjective).antonyms.front(),
            "bad");
  EXPECT_TRUE(Has(lex.Antonyms("like", PosClass::kVerb).antonyms, "dislike"));
  EXPECT_EQ(lex.Morphy("went", PosClass::kVerb),
            std::vector<std::string>{"go"});
  EXPECT_EQ(lex.Morphy("raisins", PosClass::kNoun),
            std::vector<std::string>{"raisin"});
}

}  // namespace
}  // namespace negtreat::wordnet

// Copyright 2026 The oovfst Authors.
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

#include "oovfst/cli.h"

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "oovfst/fst_io.h"
#include "oovfst/symbol_table.h"
#include "oovfst/text_util.h"
#include "test_util.h"

namespace oovfst {
namespace {

namespace fs = std::filesystem;
using testing::ReadTestData;
using testing::TestData;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto *info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() /
           ("oovfst_cli_" + std::to_string(::getpid()) + "_" + info->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string P(const std::string &name) const { return (dir_ / name).string(); }

  void WriteFile(const std::string &name, const std::string &text) const {
    std::ofstream(P(name)) << text;
  }

  static std::string Slurp(const std::string &path) {
    std::ifstream is(path);
    std::stringstream ss;
    ss << is.rdbuf();
    return ss.str();
  }

  int Run(const std::vector<std::string> &args) {
    out_.str("");
    err_.str("");
    return oovfst::Run(args, out_, err_);
  }

  // build-l + build-g over the toy fixtures, G sharing L's word table.
  void BuildToyLg(const std::string &arpa) {
    ASSERT_EQ(Run({"build-l", "--lexicon", TestData("word_lexicon.txt"),
                   "--add-unk", "--out", P("L.fst"), "--out-phone-syms",
                   P("phones.txt"), "--out-word-syms", P("l_words.txt")}),
              0)
        << err_.str();
    ASSERT_EQ(Run({"build-g", "--arpa", TestData(arpa), "--word-syms",
                   P("l_words.txt"), "--out", P("G.fst"), "--out-word-syms",
                   P("words.txt"), "--out-histories", P("G.hist")}),
              0)
        << err_.str();
  }

  std::vector<std::string> ModLgArgs(const std::string &suffix) const {
    return {"mod-lg",           "--l",
            P("L.fst"),         "--g",
            P("G.fst"),         "--phone-syms",
            P("phones.txt"),    "--word-syms",
            P("words.txt"),     "--oov-lexicon",
            TestData("oov_lexicon.txt"),
            "--out-l",          P("L2" + suffix + ".fst"),
            "--out-g",          P("G2" + suffix + ".fst"),
            "--out-phone-syms", P("phones2" + suffix + ".txt"),
            "--out-word-syms",  P("words2" + suffix + ".txt")};
  }

  fs::path dir_;
  std::ostringstream out_, err_;
};

TEST_F(CliTest, UsageErrorsExitTwo) {
  EXPECT_EQ(Run({"bogus"}), 2);
  EXPECT_EQ(Run({}), 2);
  EXPECT_EQ(Run({"score"}), 2);  // missing required options
  BuildToyLg("word_trigram_unk.arpa");
  auto args = ModLgArgs("");
  args.push_back("--penalty");
  args.push_back("-1");
  EXPECT_EQ(Run(args), 2);
  EXPECT_FALSE(fs::exists(P("G2.fst")));
}

TEST_F(CliTest, DomainErrorsExitOneWithOneLine) {
  EXPECT_EQ(Run({"build-l", "--lexicon", P("missing.txt"), "--out", P("L"),
                 "--out-phone-syms", P("p"), "--out-word-syms", P("w")}),
            1);
  std::string err = err_.str();
  EXPECT_EQ(std::count(err.begin(), err.end(), '\n'), 1);
  EXPECT_NE(err.find("cannot open lexicon"), std::string::npos);
}

TEST_F(CliTest, ScoreJson) {
  WriteFile("ref.txt", "u1\twords in sentence\n");
  WriteFile("hyp.txt", "u1\twords in sent tense\n");
  WriteFile("oov.txt", "sentence\n");
  ASSERT_EQ(Run({"score", "--ref", P("ref.txt"), "--hyp", P("hyp.txt"),
                 "--oov-list", P("oov.txt"), "--json"}),
            0)
      << err_.str();
  auto j = nlohmann::json::parse(out_.str());
  EXPECT_EQ(j["oov_cer"].get<double>(), 0.25);
  ASSERT_EQ(Run({"score", "--ref", P("ref.txt"), "--hyp", P("hyp.txt"),
                 "--oov-list", P("oov.txt"), "--out", P("score.txt")}),
            0);
  EXPECT_FALSE(Slurp(P("score.txt")).empty());
  EXPECT_FALSE(fs::exists(P("score.txt.tmp")));
}

// Weight of the arc labeled `label` leaving the text FST's states, by state.
std::map<StateId, double> ArcWeights(const std::string &fst_text,
                                     const std::string &label) {
  std::map<StateId, double> out;
  std::istringstream is(fst_text);
  std::string line;
  while (std::getline(is, line)) {
    auto f = SplitOn(line, '\t');
    if (f.size() == 5 && f[2] == label) {
      out[static_cast<StateId>(std::stoi(f[0]))] = std::stod(f[4]);
    }
  }
  return out;
}

TEST_F(CliTest, ModLgAddsPenaltyToUnkArcs) {
  BuildToyLg("word_trigram_unk.arpa");
  ASSERT_EQ(Run(ModLgArgs("")), 0) << err_.str();
  auto unk = ArcWeights(Slurp(P("G.fst")), "[unk]");
  auto ff = ArcWeights(Slurp(P("G2.fst")), "firefox");
  ASSERT_FALSE(unk.empty());
  ASSERT_EQ(unk.size(), ff.size());
  for (const auto &[s, w] : unk) EXPECT_NEAR(ff.at(s) - w, 2.3, 2e-6);
  EXPECT_TRUE(ArcWeights(Slurp(P("G2.fst")), "[unk]").empty());
}

TEST_F(CliTest, ConfigFileAndFlagPrecedence) {
  BuildToyLg("word_trigram_unk.arpa");
  WriteFile("cfg.txt", "# defaults\npenalty = 1.0\n");
  auto args = ModLgArgs("a");
  args.insert(args.end(), {"--config", P("cfg.txt")});
  ASSERT_EQ(Run(args), 0) << err_.str();
  args = ModLgArgs("b");
  args.insert(args.end(), {"--config", P("cfg.txt"), "--penalty", "0.5"});
  ASSERT_EQ(Run(args), 0) << err_.str();
  auto unk = ArcWeights(Slurp(P("G.fst")), "[unk]");
  auto a = ArcWeights(Slurp(P("G2a.fst")), "firefox");
  auto b = ArcWeights(Slurp(P("G2b.fst")), "firefox");
  for (const auto &[s, w] : unk) {
    EXPECT_NEAR(a.at(s) - w, 1.0, 2e-6);
    EXPECT_NEAR(b.at(s) - w, 0.5, 2e-6);
  }
  WriteFile("bad.txt", "no_such_option = 3\n");
  args = ModLgArgs("c");
  args.insert(args.end(), {"--config", P("bad.txt")});
  EXPECT_EQ(Run(args), 2);
  // A key belonging to another subcommand is ignored here.
  WriteFile("other.txt", "discount = 0.2\n");
  args = ModLgArgs("d");
  args.insert(args.end(), {"--config", P("other.txt")});
  EXPECT_EQ(Run(args), 0) << err_.str();
}

TEST_F(CliTest, DeterministicAndLeavesInputsAlone) {
  BuildToyLg("word_trigram_unk.arpa");
  std::string l_before = Slurp(P("L.fst")), g_before = Slurp(P("G.fst"));
  std::string w_before = Slurp(P("words.txt"));
  ASSERT_EQ(Run(ModLgArgs("x")), 0);
  ASSERT_EQ(Run(ModLgArgs("y")), 0);
  for (const char *stem : {"L2", "G2", "phones2", "words2"}) {
    std::string ext = std::string(stem).rfind("L", 0) == 0 ||
                              std::string(stem).rfind("G", 0) == 0
                          ? ".fst"
                          : ".txt";
    EXPECT_EQ(Slurp(P(stem + std::string("x") + ext)),
              Slurp(P(stem + std::string("y") + ext)))
        << stem;
  }
  EXPECT_EQ(Slurp(P("L.fst")), l_before);
  EXPECT_EQ(Slurp(P("G.fst")), g_before);
  EXPECT_EQ(Slurp(P("words.txt")), w_before);
}

TEST_F(CliTest, HclgPipeline) {
  BuildToyLg("word_trigram_unk.arpa");
  ASSERT_EQ(Run({"build-hclg", "--l", P("L.fst"), "--g", P("G.fst"),
                 "--phone-syms", P("phones.txt"), "--word-syms",
                 P("words.txt"), "--out", P("HCLG.fst"),
                 "--out-transition-model", P("tm.txt")}),
            0)
      << err_.str();
  ASSERT_EQ(Run({"mod-hclg", "--hclg", P("HCLG.fst"), "--word-syms",
                 P("words.txt"), "--transition-model", P("tm.txt"),
                 "--oov-lexicon", TestData("oov_lexicon.txt"), "--out",
                 P("HCLG2.fst"), "--out-word-syms", P("words2.txt")}),
            0)
      << err_.str();
  std::string mod = Slurp(P("HCLG2.fst"));
  EXPECT_EQ(mod.find("[unk]"), std::string::npos);
  EXPECT_NE(mod.find("firefox"), std::string::npos);
  // Context width other than 1 is refused.
  WriteFile("tm3.txt", "#context-width 3\n" + Slurp(P("tm.txt")));
  EXPECT_EQ(Run({"mod-hclg", "--hclg", P("HCLG.fst"), "--word-syms",
                 P("words.txt"), "--transition-model", P("tm3.txt"),
                 "--oov-lexicon", TestData("oov_lexicon.txt"), "--out",
                 P("HCLG3.fst"), "--out-word-syms", P("words3.txt")}),
            1);
  EXPECT_NE(err_.str().find("context width 3"), std::string::npos);
}

TEST_F(CliTest, ModG) {
  ASSERT_EQ(Run({"build-g", "--arpa", TestData("fire_fox.arpa"), "--out",
                 P("G.fst"), "--out-word-syms", P("words.txt"),
                 "--out-histories", P("G.hist")}),
            0);
  WriteFile("oov.txt", "firefox\nfirefoxes\nzzz\n");
  ASSERT_EQ(Run({"mod-g", "--g", P("G.fst"), "--word-syms", P("words.txt"),
                 "--histories", P("G.hist"), "--bpe-model",
                 TestData("fire_fox.bpe"), "--oov-list", P("oov.txt"),
                 "--out", P("G2.fst"), "--out-word-syms", P("words2.txt"),
                 "--out-histories", P("G2.hist")}),
            0)
      << err_.str();
  EXPECT_NE(out_.str().find("skipped zzz\n"), std::string::npos);
  EXPECT_NE(out_.str().find("states_added 3\n"), std::string::npos);
  EXPECT_NE(Slurp(P("G2.hist")).find("fire fox"), std::string::npos);
}

TEST_F(CliTest, BpeTrainAndApply) {
  WriteFile("counts.txt", "low\t5\nlower\t2\n");
  ASSERT_EQ(Run({"bpe-train", "--word-counts", P("counts.txt"),
                 "--num-merges", "2", "--out", P("bpe.txt")}),
            0);
  EXPECT_EQ(Slurp(P("bpe.txt")), "#bpe style=suffix marker=</w>\nl o\nlo w\n");
  WriteFile("in.txt", "lower low\n");
  ASSERT_EQ(Run({"bpe-apply", "--bpe-model", P("bpe.txt"), "--in",
                 P("in.txt"), "--out-lexicon", P("lex.txt")}),
            0);
  EXPECT_EQ(out_.str(), "low e r</w> low</w>\n");
  EXPECT_NE(Slurp(P("lex.txt")).find("low</w> l o w\n"), std::string::npos);
}

TEST_F(CliTest, SpliceAndExtractUnk) {
  WriteFile("lex.txt", "a ah t\n");
  ASSERT_EQ(Run({"build-l", "--lexicon", P("lex.txt"), "--add-unk", "--out",
                 P("L.fst"), "--out-phone-syms", P("phones.txt"),
                 "--out-word-syms", P("lw.txt")}),
            0);
  ASSERT_EQ(Run({"splice-unk-lm", "--l", P("L.fst"), "--phone-syms",
                 P("phones.txt"), "--word-syms", P("lw.txt"), "--phone-lm",
                 TestData("phone_lm.fst"), "--out", P("L2.fst"),
                 "--out-phone-syms", P("phones2.txt"), "--out-word-syms",
                 P("lw2.txt")}),
            0)
      << err_.str();
  EXPECT_EQ(Run({"splice-unk-lm", "--l", P("L.fst"), "--phone-syms",
                 P("phones.txt"), "--word-syms", P("lw.txt"), "--out",
                 P("L3.fst"), "--out-phone-syms", P("p3.txt"),
                 "--out-word-syms", P("w3.txt")}),
            2);
  ASSERT_EQ(Run({"build-g", "--arpa", TestData("unigram_unk.arpa"),
                 "--word-syms", P("lw2.txt"), "--out", P("G.fst"),
                 "--out-word-syms", P("words.txt")}),
            0);
  ASSERT_EQ(Run({"compose", "--a", P("L2.fst"), "--b", P("G.fst"),
                 "--isyms", P("phones2.txt"), "--msyms", P("words.txt"),
                 "--osyms", P("words.txt"), "--out", P("LG.fst")}),
            0)
      << err_.str();
  ASSERT_EQ(Run({"extract-unk", "--fst", P("LG.fst"), "--isyms",
                 P("phones2.txt"), "--osyms", P("words.txt"), "--input",
                 "t ah ah t"}),
            0)
      << err_.str();
  EXPECT_EQ(out_.str(), "tahaht\n");
  ASSERT_EQ(Run({"shortest-path", "--fst", P("G.fst"), "--isyms",
                 P("words.txt"), "--osyms", P("words.txt")}),
            0);
  EXPECT_EQ(out_.str(), "cost\t2.302585\ninput\t\noutput\t\n");
}

TEST_F(CliTest, MakeSplit) {
  WriteFile("manifest.tsv",
            "u1\ts1\t1.0\tThe cat.\nu2\ts2\t2.0\tFirefox, the website!\n"
            "u3\ts2\t1.5\tthe cat\nu4\ts3\t\tfirefox\n");
  WriteFile("vocab.txt", "the\ncat\n");
  ASSERT_EQ(Run({"make-split", "--manifest", P("manifest.tsv"), "--vocab",
                 P("vocab.txt"), "--out-dir", P("split")}),
            0)
      << err_.str();
  EXPECT_EQ(out_.str().rfind("firefox 2\nwebsite 1\n", 0), 0u);
  EXPECT_EQ(Slurp(P("split/train.tsv")), "u1\ts1\t1.000\tthe cat\n");
  EXPECT_EQ(Slurp(P("split/test.tsv")),
            "u2\ts2\t2.000\tfirefox the website\nu4\ts3\t\tfirefox\n");
  auto j = nlohmann::json::parse(Slurp(P("split/stats.json")));
  EXPECT_DOUBLE_EQ(j["oov_token_ratio"].get<double>(), 0.75);
}

}  // namespace
}  // namespace oovfst

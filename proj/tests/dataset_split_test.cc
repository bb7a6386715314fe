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

#include "oovfst/dataset_split.h"

#include <algorithm>
#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "oovfst/error.h"
#include "oovfst/text_util.h"
#include "test_util.h"

namespace oovfst {
namespace {

using testing::Rng;

Utterance U(const std::string &id, const std::string &spk,
            const std::string &text) {
  return {id, spk, std::nullopt, SplitWhitespace(text)};
}

std::vector<std::string> Ids(const std::vector<Utterance> &utts) {
  std::vector<std::string> out;
  for (const auto &u : utts) out.push_back(u.id);
  return out;
}

TEST(NormalizeTest, LowercasesAndStripsEdgePunctuation) {
  EXPECT_EQ(NormalizeWord("Hello,"), "hello");
  EXPECT_EQ(NormalizeWord("\"Don't\""), "don't");
  EXPECT_EQ(NormalizeWord("ÜBER"), "über");
  EXPECT_EQ(NormalizeWord("«Straße»"), "straße");
  EXPECT_EQ(NormalizeWord("..."), "");
  EXPECT_EQ(NormalizeTranscript("Firefox, a -- Website!"),
            (std::vector<std::string>{"firefox", "a", "website"}));
}

TEST(MakeSplitTest, SmallExample) {
  SplitResult r = MakeSplit({U("u1", "s1", "a b"), U("u2", "s2", "a c")},
                            {"a", "b"});
  EXPECT_EQ(Ids(r.test), std::vector<std::string>{"u2"});
  EXPECT_EQ(Ids(r.train), std::vector<std::string>{"u1"});
  EXPECT_EQ(r.oov_types, (std::map<std::string, int64_t>{{"c", 1}}));
  EXPECT_EQ(*r.OovTokenRatio(), 0.5);
  EXPECT_EQ(*r.OovTypeRatio(), 0.5);
}

TEST(MakeSplitTest, TestSpeakersNeverTrain) {
  SplitResult r = MakeSplit(
      {U("u1", "s1", "a b"), U("u2", "s2", "a c"), U("u3", "s2", "a b")},
      {"a", "b"});
  EXPECT_EQ(Ids(r.train), std::vector<std::string>{"u1"});
  EXPECT_EQ(Ids(r.excluded), std::vector<std::string>{"u3"});
}

TEST(MakeSplitTest, NoOovMeansNoTestSet) {
  SplitResult r = MakeSplit({U("u1", "s1", "a b")}, {"a", "b", "c"});
  EXPECT_TRUE(r.test.empty());
  EXPECT_FALSE(r.OovTokenRatio().has_value());
  EXPECT_FALSE(r.OovTypeRatio().has_value());
  EXPECT_NE(OovReport(r).find("# oov_token_ratio n/a"), std::string::npos);
  auto j = nlohmann::json::parse(SplitStatsJson(r));
  EXPECT_TRUE(j["oov_token_ratio"].is_null());
}

TEST(MakeSplitTest, Errors) {
  EXPECT_THROW(MakeSplit({}, {"a"}), Error);
  EXPECT_THROW(MakeSplit({U("u1", "s", "a")}, {}), Error);
  EXPECT_THROW(MakeSplit({U("u1", "s", "a"), U("u1", "t", "b")}, {"a"}),
               Error);
}

TEST(MakeSplitTest, OovListSortsByCountThenWord) {
  SplitResult r = MakeSplit(
      {U("u1", "s1", "firefox website"), U("u2", "s2", "firefox nudism x"),
       U("u3", "s3", "firefox zz website the"), U("u4", "s4", "the")},
      {"the", "x"});
  std::ostringstream os;
  WriteOovWords(os, r);
  EXPECT_EQ(os.str(), "firefox 3\nwebsite 2\nnudism 1\nzz 1\n");
  std::string report = OovReport(r);
  EXPECT_EQ(report.rfind("firefox 3\n", 0), 0u);
  EXPECT_NE(report.find("# oov_token_ratio 0.778\n"), std::string::npos);
}

std::vector<Utterance> RandomManifest(Rng *rng, int n) {
  const std::vector<std::string> words{"a", "b", "c", "d", "e", "f"};
  std::vector<Utterance> out;
  for (int i = 0; i < n; ++i) {
    std::string text;
    int len = rng->Uniform(1, 5);
    for (int k = 0; k < len; ++k) text += rng->Pick(words) + " ";
    out.push_back(U("u" + std::to_string(1000 + i),
                    "s" + std::to_string(rng->Uniform(0, 9)), text));
  }
  return out;
}

TEST(MakeSplitTest, InvariantsOnRandomManifests) {
  Rng rng(61);
  const std::set<std::string> vocab{"a", "b", "c", "d"};
  for (int trial = 0; trial < 200; ++trial) {
    auto manifest = RandomManifest(&rng, rng.Uniform(1, 30));
    SplitResult r = MakeSplit(manifest, vocab);
    // Partition.
    auto all = Ids(r.train);
    auto t = Ids(r.test), x = Ids(r.excluded);
    all.insert(all.end(), t.begin(), t.end());
    all.insert(all.end(), x.begin(), x.end());
    std::sort(all.begin(), all.end());
    auto want = Ids(manifest);
    std::sort(want.begin(), want.end());
    EXPECT_EQ(all, want);
    // Test utterances have an OOV; train and excluded ones do not.
    std::set<std::string> test_spk;
    int64_t tokens = 0, oov = 0;
    for (const auto &u : r.test) {
      test_spk.insert(u.speaker);
      bool has = false;
      for (const auto &w : u.words) {
        ++tokens;
        if (!vocab.count(w)) {
          has = true;
          ++oov;
        }
      }
      EXPECT_TRUE(has);
    }
    for (const auto *part : {&r.train, &r.excluded}) {
      for (const auto &u : *part) {
        for (const auto &w : u.words) EXPECT_TRUE(vocab.count(w));
      }
    }
    for (const auto &u : r.train) EXPECT_FALSE(test_spk.count(u.speaker));
    for (const auto &u : r.excluded) EXPECT_TRUE(test_spk.count(u.speaker));
    EXPECT_TRUE(std::is_sorted(t.begin(), t.end()));
    EXPECT_EQ(r.test_tokens, tokens);
    EXPECT_EQ(r.oov_tokens, oov);
    // Input order does not matter.
    auto shuffled = manifest;
    std::reverse(shuffled.begin(), shuffled.end());
    SplitResult r2 = MakeSplit(shuffled, vocab);
    EXPECT_EQ(r2.train, r.train);
    EXPECT_EQ(r2.test, r.test);
    // The train set alone splits into itself.
    if (!r.train.empty()) {
      SplitResult again = MakeSplit(r.train, vocab);
      EXPECT_EQ(again.train, r.train);
      EXPECT_TRUE(again.test.empty());
    }
  }
}

TEST(ManifestIoTest, RoundTripAndErrors) {
  std::istringstream is("u2\ts1\t1.5\tHello, World!\nu1\ts2\t\tfoo\n");
  auto utts = ReadManifest(is, true);
  ASSERT_EQ(utts.size(), 2u);
  EXPECT_EQ(utts[0].words, (std::vector<std::string>{"hello", "world"}));
  EXPECT_FALSE(utts[1].duration.has_value());
  std::ostringstream os;
  WriteManifest(os, utts);
  EXPECT_EQ(os.str(), "u2\ts1\t1.500\thello world\nu1\ts2\t\tfoo\n");
  EXPECT_NEAR(*TotalHours(utts), 1.5 / 3600.0, 1e-15);
  std::istringstream three("u1\ts1\tx\n");
  EXPECT_THROW(ReadManifest(three, true), Error);
  std::istringstream dup("u1\ts\t\ta\nu1\ts\t\tb\n");
  EXPECT_THROW(ReadManifest(dup, true), Error);
  std::istringstream vocab("The 10\nthe\nCat\n\n");
  EXPECT_EQ(ReadVocabulary(vocab, true),
            (std::set<std::string>{"the", "cat"}));
}

}  // namespace
}  // namespace oovfst

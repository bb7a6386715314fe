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

#include "oovfst/lexicon.h"

#include <algorithm>
#include <sstream>

#include <gtest/gtest.h>

#include "oovfst/error.h"
#include "oovfst/fst_io.h"
#include "oovfst/fst_ops.h"
#include "test_util.h"

namespace oovfst {
namespace {

using testing::ConstrainedCost;
using testing::DisambigLabels;
using testing::Labels;
using testing::Rng;

Lexicon ParseString(const std::string &text) {
  std::istringstream is(text);
  return ParseLexicon(is);
}

// Input string of a chain as the decoder sees it.
std::vector<Label> ChainInput(const PronunciationChain &c) {
  std::vector<Label> in = c.phones;
  if (c.disambig != kEpsilon) in.push_back(c.disambig);
  return in;
}

bool IsPrefix(const std::vector<Label> &a, const std::vector<Label> &b) {
  return a.size() <= b.size() && std::equal(a.begin(), a.end(), b.begin());
}

void ExpectDeterminizable(const LGraph &l) {
  for (size_t i = 0; i < l.chains.size(); ++i) {
    for (size_t j = 0; j < l.chains.size(); ++j) {
      if (i == j) continue;
      EXPECT_FALSE(IsPrefix(ChainInput(l.chains[i]), ChainInput(l.chains[j])))
          << "chain " << i << " is a prefix of chain " << j;
    }
  }
}

TEST(LexiconTest, ParseAndErrors) {
  Lexicon lex = ParseString("a x y\n\nb  y\na x z\n");
  EXPECT_EQ(lex.size(), 3u);
  EXPECT_EQ(lex.Words(), (std::vector<std::string>{"a", "b"}));
  EXPECT_THROW(ParseString("a\n"), Error);
  EXPECT_THROW(ParseString("a x\na x\n"), Error);
  std::ostringstream os;
  WriteLexicon(os, lex);
  EXPECT_EQ(os.str(), "a x y\nb y\na x z\n");
}

TEST(BuildLTest, Layout) {
  LGraph l = BuildL(ParseString("the dh ah\ncat k ae t\n"), true);
  const Fst &f = l.fst;
  EXPECT_EQ(l.start(), 0);
  EXPECT_TRUE(f.IsFinal(l.start()));
  Label b_in = l.phone_syms.Lookup("#0");
  Label b_out = l.word_syms.Lookup("#0");
  EXPECT_TRUE(std::any_of(f.Arcs(0).begin(), f.Arcs(0).end(), [&](const Arc &a) {
    return a.nextstate == 0 && a.ilabel == b_in && a.olabel == b_out;
  }));
  ASSERT_EQ(f.NumArcs(l.pron_end), 1u);
  EXPECT_EQ(f.Arcs(l.pron_end)[0], Arc(0, 0, 0.0, l.start()));
  EXPECT_TRUE(l.word_syms.Contains("[unk]"));
  EXPECT_TRUE(l.phone_syms.Contains("jnk"));
  ASSERT_EQ(l.chains.size(), 3u);
  // The word label rides the first arc.
  for (const auto &c : l.chains) {
    auto arcs = f.Arcs(l.start());
    EXPECT_TRUE(std::any_of(arcs.begin(), arcs.end(), [&](const Arc &a) {
      return a.ilabel == c.phones.front() && a.olabel == c.word;
    }));
  }
  auto the = Labels(l.phone_syms, {"dh", "ah"});
  auto out = Labels(l.word_syms, {"the"});
  EXPECT_EQ(ConstrainedCost(f, &the, &out), 0.0);
  auto bad = Labels(l.phone_syms, {"dh"});
  EXPECT_FALSE(ConstrainedCost(f, &bad, &out).has_value());
}

TEST(BuildLTest, DisambiguatesHomophonesAndPrefixes) {
  LGraph l = BuildL(ParseString("red r eh d\nread r eh d\nre r eh\nab a b\n"),
                    false);
  ASSERT_EQ(l.chains.size(), 4u);
  EXPECT_EQ(l.phone_syms.Symbol(l.chains[0].disambig), "#1");
  EXPECT_EQ(l.phone_syms.Symbol(l.chains[1].disambig), "#2");
  EXPECT_EQ(l.phone_syms.Symbol(l.chains[2].disambig), "#1");
  EXPECT_EQ(l.chains[3].disambig, kEpsilon);
  ExpectDeterminizable(l);
  auto in = Labels(l.phone_syms, {"r", "eh", "d", "#2"});
  auto out = Labels(l.word_syms, {"read"});
  EXPECT_EQ(ConstrainedCost(l.fst, &in, &out), 0.0);
}

TEST(BuildLTest, Errors) {
  EXPECT_THROW(BuildL(Lexicon(), false), Error);
  EXPECT_NO_THROW(BuildL(Lexicon(), true));
  EXPECT_THROW(BuildL(ParseString("a #1\n"), false), Error);
}

TEST(BuildLTest, RandomLexiconsAreDeterminizableAndAcceptEveryEntry) {
  Rng rng(21);
  const std::vector<std::string> phones{"p", "t", "k"};
  for (int trial = 0; trial < 100; ++trial) {
    Lexicon lex;
    int n = rng.Uniform(1, 6);
    for (int i = 0; i < n; ++i) {
      std::vector<std::string> pron;
      int len = rng.Uniform(1, 3);
      for (int k = 0; k < len; ++k) pron.push_back(rng.Pick(phones));
      std::string word = "w" + std::to_string(rng.Uniform(0, 4));
      if (!lex.Contains({word, pron})) lex.Add(word, pron);
    }
    LGraph l = BuildL(lex, trial % 2 == 0);
    ExpectDeterminizable(l);
    auto skip = DisambigLabels(l.phone_syms);
    for (const auto &e : lex.entries()) {
      auto in = Labels(l.phone_syms, e.phones);
      std::vector<Label> out{l.word_syms.Lookup(e.word)};
      EXPECT_EQ(ConstrainedCost(l.fst, &in, &out, skip), 0.0);
    }
    // Round trip through text keeps the chains.
    std::istringstream is(FstToText(l.fst, nullptr, nullptr));
    LGraph back = LGraph::FromFst(ReadFstText(is, nullptr, nullptr),
                                  l.phone_syms, l.word_syms);
    EXPECT_EQ(back.pron_end, l.pron_end);
    ASSERT_EQ(back.chains.size(), l.chains.size());
    for (const auto &c : l.chains) {
      EXPECT_TRUE(std::any_of(back.chains.begin(), back.chains.end(),
                              [&](const PronunciationChain &b) {
                                return b.word == c.word && b.phones == c.phones &&
                                       b.disambig == c.disambig;
                              }));
    }
  }
}

TEST(AddWordsToLTest, AddsNewEntriesAndIsIdempotent) {
  LGraph l =
      BuildL(ParseLexiconFile(testing::TestData("word_lexicon.txt")), true);
  Lexicon oov = ParseLexiconFile(testing::TestData("oov_lexicon.txt"));
  LGraph once = AddWordsToL(l, oov);
  LGraph twice = AddWordsToL(once, oov);
  EXPECT_EQ(FstToText(once.fst, nullptr, nullptr),
            FstToText(twice.fst, nullptr, nullptr));
  EXPECT_EQ(once.chains.size(), l.chains.size() + 2);
  ExpectDeterminizable(once);
  auto skip = DisambigLabels(once.phone_syms);
  for (const auto &e : oov.entries()) {
    auto in = Labels(once.phone_syms, e.phones);
    std::vector<Label> out{once.word_syms.Lookup(e.word)};
    EXPECT_EQ(ConstrainedCost(once.fst, &in, &out, skip), 0.0);
  }
  // Original words keep their labels.
  for (Label lab : l.word_syms.Labels()) {
    EXPECT_EQ(once.word_syms.Symbol(lab), l.word_syms.Symbol(lab));
  }
}

TEST(AddWordsToLTest, UnknownPhoneLeavesLUntouched) {
  LGraph l = BuildL(ParseString("a x\n"), false);
  try {
    AddWordsToL(l, ParseString("b x q\n"));
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(std::string(e.what()), "unknown phone q in b");
  }
}

TEST(AddWordsToLTest, NewHomophoneGetsDisambiguated) {
  LGraph l = BuildL(ParseString("a x y\n"), false);
  LGraph m = AddWordsToL(l, ParseString("b x y\nc x\n"));
  ExpectDeterminizable(m);
  EXPECT_NE(m.chains[0].disambig, kEpsilon);
  EXPECT_NE(m.chains[1].disambig, kEpsilon);
  EXPECT_NE(m.chains[0].disambig, m.chains[1].disambig);
}

TEST(SpliceUnkLmTest, UnkPathsFollowThePhoneLm) {
  LGraph l = BuildL(ParseString("a ah t\n"), true);
  Fst lm = ReadFstTextFile(testing::TestData("phone_lm.fst"), &l.phone_syms,
                           &l.phone_syms);
  LGraph s = SpliceUnkLm(l, lm);
  EXPECT_TRUE(s.phone_syms.Contains("#u1"));
  EXPECT_TRUE(s.phone_syms.Contains("#u2"));
  Label jnk = s.phone_syms.Lookup("jnk");
  for (StateId q = 0; q < s.fst.NumStates(); ++q) {
    for (const Arc &a : s.fst.Arcs(q)) EXPECT_NE(a.ilabel, jnk);
  }
  auto skip = DisambigLabels(s.phone_syms);
  std::vector<Label> unk{s.word_syms.Lookup("[unk]")};
  // ah t: 0 -ah/0.3-> 1 -t/0.4-> 0, final 0.1.
  auto in = Labels(s.phone_syms, {"ah", "t"});
  auto cost = ConstrainedCost(s.fst, &in, &unk, skip);
  ASSERT_TRUE(cost.has_value());
  EXPECT_NEAR(*cost, 0.8, 1e-9);
  // The ordinary word is unaffected.
  std::vector<Label> a{s.word_syms.Lookup("a")};
  EXPECT_EQ(ConstrainedCost(s.fst, &in, &a, skip), 0.0);
  // Splicing twice has nothing left to replace.
  EXPECT_THROW(SpliceUnkLm(s, lm), Error);
  EXPECT_THROW(SpliceUnkLm(BuildL(ParseString("a ah t\n"), false), lm), Error);
}

}  // namespace
}  // namespace oovfst

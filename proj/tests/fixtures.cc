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

#include "fixtures.h"

#include "oovfst/arpa.h"
#include "oovfst/fst_ops.h"
#include "test_util.h"

namespace oovfst::testing {

ToyGraphs LoadToy(const std::string &arpa_name) {
  ToyGraphs toy;
  toy.l = BuildL(ParseLexiconFile(TestData("word_lexicon.txt")), true);
  toy.g = ArpaToG(ParseArpaFile(TestData(arpa_name)), toy.l.word_syms);
  toy.l.word_syms = toy.g.word_syms;
  toy.oov = ParseLexiconFile(TestData("oov_lexicon.txt"));
  return toy;
}

std::pair<LGraph, GGraph> ModLg(const ToyGraphs &toy, const BiasConfig &cfg) {
  LGraph l = AddWordsToL(toy.l, toy.oov);
  GGraph g = toy.g;
  g.word_syms = l.word_syms;
  g = ReplaceUnkInG(std::move(g), toy.oov.Words(), cfg);
  return {std::move(l), std::move(g)};
}

TidPathSet PathsWithOutput(const Fst &fst, const SymbolTable &word_syms,
                           const std::vector<std::string> &words) {
  TidPathSet out;
  std::vector<Label> labels;
  for (const auto &w : words) {
    auto l = word_syms.Find(w);
    if (!l) return out;
    labels.push_back(*l);
  }
  Fst restricted = Compose(fst, LinearAcceptor(labels));
  for (const auto &[key, cost] : EnumeratePaths(restricted)) {
    out[{key.first, words}] = cost;
  }
  return out;
}

}  // namespace oovfst::testing

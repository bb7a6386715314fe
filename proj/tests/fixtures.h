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

// Toy L/G pipelines shared by the graph tests.

#ifndef OOVFST_TESTS_FIXTURES_H_
#define OOVFST_TESTS_FIXTURES_H_

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "oovfst/hclg.h"
#include "oovfst/lexicon.h"
#include "oovfst/ngram_g.h"

namespace oovfst::testing {

struct ToyGraphs {
  LGraph l;  // word_lexicon.txt plus [unk], sharing G's word table
  GGraph g;
  Lexicon oov;  // oov_lexicon.txt
};

ToyGraphs LoadToy(const std::string &arpa_name);

// add_words_to_l(L) and replace_unk_in_g(G) with one shared word table.
std::pair<LGraph, GGraph> ModLg(const ToyGraphs &toy, const BiasConfig &cfg);

// (transition-ids, word strings) -> cheapest cost.
using TidPathSet =
    std::map<std::pair<std::vector<Label>, std::vector<std::string>>, double>;

// Paths of `fst` whose output is exactly `words`; the graph must be acyclic
// once the output is fixed.
TidPathSet PathsWithOutput(const Fst &fst, const SymbolTable &word_syms,
                           const std::vector<std::string> &words);

}  // namespace oovfst::testing

#endif  // OOVFST_TESTS_FIXTURES_H_

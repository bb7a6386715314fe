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

// Grammar FSTs built from backoff n-gram models, and the two G surgeries:
// replacing [unk] arcs with known OOV words, and boosting the subword paths
// of OOV words in a subword G.
//
// G layout:
//   - one state per stored history (an n-gram of order < N that is the
//     prefix of a higher-order n-gram or carries a nonzero backoff weight),
//     plus the empty-history backoff state;
//   - an arc w:w from history h for every stored n-gram h w, going to the
//     longest suffix of h w that is a history;
//   - a #0:<eps> backoff arc from every non-empty history to its longest
//     proper suffix history, weighted with the backoff cost;
//   - </s> probabilities as final weights; the start state is the history
//     "<s>" when present.

#ifndef OOVFST_NGRAM_G_H_
#define OOVFST_NGRAM_G_H_

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "oovfst/arpa.h"
#include "oovfst/bpe.h"
#include "oovfst/fst.h"
#include "oovfst/symbol_table.h"

namespace oovfst {

struct BiasConfig {
  double penalty = 2.3;     // added to every arc replacing [unk]
  double boost_cost = 0.1;  // weight of arcs added for subword paths
  double discount = 0.5;    // subtracted from existing subword-path arcs

  // Throws unless every field is >= 0.
  void Validate() const;
};

struct GGraph {
  Fst fst;
  SymbolTable word_syms;
  std::vector<std::vector<Label>> history_of;  // indexed by state
  std::map<std::vector<Label>, StateId> state_of;
  StateId backoff_state = kNoStateId;
  Label backoff_label = kEpsilon;  // "#0"
  int order = 0;

  std::optional<StateId> FindState(const std::vector<Label> &history) const;
  // Appends a state for `history`; throws if it already exists.
  StateId AddHistoryState(const std::vector<Label> &history);
  // Checks the history-map/FST consistency invariants.
  void Validate() const;
};

// Tokens missing from `word_syms` are interned.
GGraph ArpaToG(const ArpaModel &model, SymbolTable word_syms);

// Cost of a word sequence (with </s>) through G, found by composing it with
// an acceptor that carries #0 self-loops and taking the shortest path.
Weight ScoreSentence(const GGraph &g, const std::vector<Label> &words);

// Every [unk] arc s -> d with weight w becomes one arc s -> d per OOV word
// with weight w + cfg.penalty, at the position of the original arc.
GGraph ReplaceUnkInG(GGraph g, const std::vector<std::string> &oov_words,
                     const BiasConfig &cfg,
                     std::string_view unk_symbol = "[unk]");

struct StateWalk {
  std::vector<StateId> reached;  // starts with the backoff state
  bool exists_fully = false;
};

// Follows explicit (non-backoff) arcs for `subwords` from the backoff state
// and stops at the first missing one.
StateWalk TokenizedSequenceStateWalk(const GGraph &g,
                                     const std::vector<Label> &subwords);

struct ModGReport {
  std::vector<std::string> skipped;  // words with a token unknown to G
  size_t arcs_discounted = 0;
  size_t arcs_added = 0;
  size_t states_added = 0;
};

// Makes each OOV word's subword sequence cheaper: existing arcs on the walk
// from the backoff state lose cfg.discount (never below 0), missing arcs are
// added with cfg.boost_cost. The arc for the last subword ends in that
// subword's unigram state; every new intermediate state backs off to the
// unigram state of the subword that led into it.
GGraph ModGSubwords(GGraph g, const std::vector<std::string> &oov_words,
                    const BpeModel &bpe, const BiasConfig &cfg,
                    ModGReport *report = nullptr);

// History side file: "#order N", then "state<TAB>tok tok ..." per state.
void WriteGHistories(std::ostream &os, const GGraph &g);
GGraph ReadGHistories(std::istream &is, Fst fst, SymbolTable word_syms);

}  // namespace oovfst

#endif  // OOVFST_NGRAM_G_H_

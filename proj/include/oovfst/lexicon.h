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

// Pronunciation lexicons and the lexicon transducer L.
//
// Layout of L (phones in, words out):
//
//   start --p1:word--> s1 --p2:<eps>--> ... --pn:<eps>--> pron_end
//   pron_end --<eps>:<eps>--> start        start is the only final state
//   start --#0:#0--> start                 passes G's backoff symbol through
//
// A pronunciation that is shared by several words or is a proper prefix of
// another pronunciation gets an extra "#k" input arc at the end of its chain
// so that L composed with G stays determinizable.

#ifndef OOVFST_LEXICON_H_
#define OOVFST_LEXICON_H_

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "oovfst/fst.h"
#include "oovfst/symbol_table.h"

namespace oovfst {

inline constexpr std::string_view kUnkWord = "[unk]";
inline constexpr std::string_view kJunkPhone = "jnk";
inline constexpr std::string_view kBackoffSymbol = "#0";
// Input symbols on the arcs that enter and leave a spliced phone LM.
inline constexpr std::string_view kUnkLmEnterSymbol = "#u1";
inline constexpr std::string_view kUnkLmExitSymbol = "#u2";

struct LexiconEntry {
  std::string word;
  std::vector<std::string> phones;

  friend bool operator==(const LexiconEntry &, const LexiconEntry &) = default;
};

class Lexicon {
 public:
  // Throws on an empty pronunciation or a repeated (word, pronunciation).
  void Add(std::string word, std::vector<std::string> phones);

  const std::vector<LexiconEntry> &entries() const { return entries_; }
  size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  bool Contains(const LexiconEntry &e) const;
  // Distinct words in first-appearance order.
  std::vector<std::string> Words() const;

 private:
  std::vector<LexiconEntry> entries_;
};

// One "word p1 p2 ..." per line; blank lines are skipped.
Lexicon ParseLexicon(std::istream &is);
Lexicon ParseLexiconFile(const std::string &path);
void WriteLexicon(std::ostream &os, const Lexicon &lex);

// Bookkeeping for one start -> pron_end chain.
struct PronunciationChain {
  Label word = kEpsilon;
  std::vector<Label> phones;
  // The arc that consumes the last phone: fst.Arcs(last_state)[last_arc].
  StateId last_state = kNoStateId;
  size_t last_arc = 0;
  // "#k" symbol appended to the chain, or kEpsilon.
  Label disambig = kEpsilon;
};

struct LGraph {
  Fst fst;
  SymbolTable phone_syms;  // phones, jnk, #0, #1..., #u1/#u2 after splicing
  SymbolTable word_syms;   // words, [unk], #0
  StateId pron_end = kNoStateId;
  std::vector<PronunciationChain> chains;  // in insertion order

  StateId start() const { return fst.Start(); }

  // Rebuilds the bookkeeping from a plain FST laid out as above (e.g. one
  // read back from text). Paths that are not simple chains, such as a
  // spliced phone LM, are not recorded as chains.
  static LGraph FromFst(Fst fst, SymbolTable phone_syms,
                        SymbolTable word_syms);
};

LGraph BuildL(const Lexicon &lex, bool add_unk);

// Adds new chains for `oov_lex`. Every phone must already be known. Entries
// already present in `l` are skipped. Existing arcs are only touched when a
// chain newly needs a disambiguation symbol.
LGraph AddWordsToL(LGraph l, const Lexicon &oov_lex);

// Replaces the jnk:[unk] pronunciation with a copy of the phone acceptor
// `phone_lm`, entered through #u1:[unk] and left through #u2:<eps> arcs that
// carry the phone LM's final weights.
LGraph SpliceUnkLm(LGraph l, const Fst &phone_lm);

}  // namespace oovfst

#endif  // OOVFST_LEXICON_H_

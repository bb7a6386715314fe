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

// Toy monophone decoding graphs. Every phone is a one-state HMM, so the
// context transducer is the identity and HCL is L with phones replaced by
// transition-ids.
//
// With self-loops enabled (0 < self_loop_prob < 1) a phone arc s -> t
// becomes
//
//   s --tid:word--> m,  m --loop_tid:<eps>/-ln p--> m,
//   m --<eps>:<eps>/-ln(1-p)--> t
//
// where loop_tid = tid + NumPhones().

#ifndef OOVFST_HCLG_H_
#define OOVFST_HCLG_H_

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "oovfst/fst.h"
#include "oovfst/lexicon.h"
#include "oovfst/ngram_g.h"
#include "oovfst/symbol_table.h"

namespace oovfst {

class TransitionModel {
 public:
  TransitionModel() = default;
  // Assigns transition-ids 1..n in the given order.
  explicit TransitionModel(const std::vector<std::string> &phones,
                           double self_loop_prob = 1.0);

  // Phones of `phone_syms` that are not disambiguation symbols or <eps>.
  static TransitionModel ForPhones(const SymbolTable &phone_syms,
                                   double self_loop_prob = 1.0);

  // "phone<TAB>tid" lines, optionally preceded by "#self-loop-prob P" and
  // "#context-width N" header lines.
  static TransitionModel Read(std::istream &is);
  static TransitionModel ReadFile(const std::string &path);
  void Write(std::ostream &os) const;

  // Throws unless the ids are exactly 1..NumPhones().
  void Validate() const;

  bool HasSelfLoops() const {
    return self_loop_prob_ > 0.0 && self_loop_prob_ < 1.0;
  }
  double self_loop_prob() const { return self_loop_prob_; }
  int context_width() const { return context_width_; }
  void set_context_width(int width) { context_width_ = width; }

  int NumPhones() const { return static_cast<int>(phone_to_tid_.size()); }
  int NumTids() const { return NumPhones() * (HasSelfLoops() ? 2 : 1); }
  const std::map<std::string, Label, std::less<>> &phone_to_tid() const {
    return phone_to_tid_;
  }
  // Throws "phone X has no transition-id".
  Label Tid(std::string_view phone) const;
  Label LoopTid(std::string_view phone) const { return Tid(phone) + NumPhones(); }
  double LoopCost() const;
  double ExitCost() const;

 private:
  std::map<std::string, Label, std::less<>> phone_to_tid_;
  double self_loop_prob_ = 1.0;
  int context_width_ = 1;
};

struct DecodingGraph {
  Fst fst;  // transition-ids in, words out
  TransitionModel tm;
  SymbolTable word_syms;

  // Throws if an input label is not a transition-id.
  void Validate() const;
};

// Composes L (phones mapped to transition-ids, disambiguation symbols kept
// as temporary labels) with G, then drops the disambiguation inputs and
// trims the result.
DecodingGraph BuildHclg(const LGraph &l, const GGraph &g,
                        const TransitionModel &tm);

// Builds one HCL sub-graph from `oov_lex` and reroutes every [unk] arc into
// it with an <eps>:<eps> arc of weight w + cfg.penalty. All word exits share
// one exit state joined to the former [unk] destination.
DecodingGraph ModHclg(DecodingGraph dg, const Lexicon &oov_lex,
                      const BiasConfig &cfg,
                      std::string_view unk_symbol = kUnkWord);

}  // namespace oovfst

#endif  // OOVFST_HCLG_H_

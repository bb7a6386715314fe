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

#include "oovfst/hclg.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>

#include "oovfst/error.h"
#include "oovfst/fst_ops.h"
#include "oovfst/text_util.h"

namespace oovfst {

TransitionModel::TransitionModel(const std::vector<std::string> &phones,
                                 double self_loop_prob)
    : self_loop_prob_(self_loop_prob) {
  for (const auto &p : phones) {
    Label next = static_cast<Label>(phone_to_tid_.size()) + 1;
    if (!phone_to_tid_.emplace(p, next).second) {
      throw Error("phone " + p + " listed twice in transition model");
    }
  }
  if (!(self_loop_prob_ >= 0.0 && self_loop_prob_ <= 1.0)) {
    throw Error("self-loop probability must be in [0, 1]");
  }
}

TransitionModel TransitionModel::ForPhones(const SymbolTable &phone_syms,
                                           double self_loop_prob) {
  std::vector<std::string> phones;
  for (Label l : phone_syms.Labels()) {
    if (l == kEpsilon || phone_syms.IsDisambig(l)) continue;
    phones.push_back(phone_syms.Symbol(l));
  }
  return TransitionModel(phones, self_loop_prob);
}

TransitionModel TransitionModel::Read(std::istream &is) {
  TransitionModel tm;
  std::string line;
  size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    auto fields = SplitWhitespace(line);
    if (fields.empty()) continue;
    if (fields[0] == "#self-loop-prob" && fields.size() == 2) {
      tm.self_loop_prob_ = ParseDouble(fields[1], "self-loop probability");
      continue;
    }
    if (fields[0] == "#context-width" && fields.size() == 2) {
      tm.context_width_ = static_cast<int>(ParseInt(fields[1], "context width"));
      continue;
    }
    if (fields.size() != 2) {
      throw Error("transition model line " + std::to_string(lineno) +
                  ": expected 'phone<TAB>tid'");
    }
    Label tid = static_cast<Label>(ParseInt(fields[1], "transition-id"));
    if (!tm.phone_to_tid_.emplace(fields[0], tid).second) {
      throw Error("phone " + fields[0] + " listed twice in transition model");
    }
  }
  if (!(tm.self_loop_prob_ >= 0.0 && tm.self_loop_prob_ <= 1.0)) {
    throw Error("self-loop probability must be in [0, 1]");
  }
  tm.Validate();
  return tm;
}

TransitionModel TransitionModel::ReadFile(const std::string &path) {
  std::ifstream is(path);
  if (!is) throw Error("cannot open transition model " + path);
  return Read(is);
}

void TransitionModel::Write(std::ostream &os) const {
  if (self_loop_prob_ != 1.0) os << "#self-loop-prob " << self_loop_prob_ << '\n';
  if (context_width_ != 1) os << "#context-width " << context_width_ << '\n';
  std::vector<std::pair<Label, std::string>> by_tid;
  for (const auto &[p, t] : phone_to_tid_) by_tid.emplace_back(t, p);
  std::sort(by_tid.begin(), by_tid.end());
  for (const auto &[t, p] : by_tid) os << p << '\t' << t << '\n';
}

void TransitionModel::Validate() const {
  std::set<Label> ids;
  for (const auto &[p, t] : phone_to_tid_) {
    if (!ids.insert(t).second) {
      throw Error("transition-id " + std::to_string(t) + " used twice");
    }
  }
  Label expect = 1;
  for (Label t : ids) {
    if (t != expect++) {
      throw Error("transition-ids must be dense from 1");
    }
  }
}

Label TransitionModel::Tid(std::string_view phone) const {
  auto it = phone_to_tid_.find(phone);
  if (it == phone_to_tid_.end()) {
    throw Error("phone " + std::string(phone) + " has no transition-id");
  }
  return it->second;
}

double TransitionModel::LoopCost() const { return -std::log(self_loop_prob_); }

double TransitionModel::ExitCost() const {
  return -std::log(1.0 - self_loop_prob_);
}

void DecodingGraph::Validate() const {
  const Label max_tid = tm.NumTids();
  for (StateId s = 0; s < fst.NumStates(); ++s) {
    for (const Arc &a : fst.Arcs(s)) {
      if (a.ilabel < 0 || a.ilabel > max_tid) {
        throw Error("HCLG input label " + std::to_string(a.ilabel) +
                    " is not a transition-id");
      }
    }
  }
}

namespace {

// Adds the one-state HMM for `phone` between src and dst.
void AddPhoneArc(Fst *fst, const TransitionModel &tm, StateId src,
                 StateId dst, std::string_view phone, Label olabel,
                 Weight weight) {
  if (!tm.HasSelfLoops()) {
    fst->AddArc(src, Arc(tm.Tid(phone), olabel, weight, dst));
    return;
  }
  StateId mid = fst->AddState();
  fst->AddArc(src, Arc(tm.Tid(phone), olabel, weight, mid));
  fst->AddArc(mid, Arc(tm.LoopTid(phone), kEpsilon, tm.LoopCost(), mid));
  fst->AddArc(mid, Arc(kEpsilon, kEpsilon, tm.ExitCost(), dst));
}

// L with phones turned into transition-ids. Disambiguation inputs become
// labels above every transition-id; returns the first such label.
Label MapLToTids(const LGraph &l, const TransitionModel &tm, Fst *out) {
  const Label first_disambig = tm.NumTids() + 1;
  std::map<Label, Label> disambig;
  for (Label p : l.phone_syms.Labels()) {
    if (l.phone_syms.IsDisambig(p)) {
      Label mapped = first_disambig + static_cast<Label>(disambig.size());
      disambig.emplace(p, mapped);
    }
  }
  Fst &hcl = *out;
  hcl = Fst();
  hcl.AddStates(l.fst.NumStates());
  if (l.fst.Start() != kNoStateId) hcl.SetStart(l.fst.Start());
  for (StateId s = 0; s < l.fst.NumStates(); ++s) {
    hcl.SetFinal(s, l.fst.Final(s));
    for (const Arc &a : l.fst.Arcs(s)) {
      if (a.ilabel == kEpsilon) {
        hcl.AddArc(s, a);
      } else if (auto it = disambig.find(a.ilabel); it != disambig.end()) {
        hcl.AddArc(s, Arc(it->second, a.olabel, a.weight, a.nextstate));
      } else {
        AddPhoneArc(&hcl, tm, s, a.nextstate, l.phone_syms.Symbol(a.ilabel),
                    a.olabel, a.weight);
      }
    }
  }
  return first_disambig;
}

void CheckSharedWords(const SymbolTable &l_words, const SymbolTable &g_words) {
  for (Label w : l_words.Labels()) {
    const std::string *g_sym = g_words.Find(w);
    if (g_sym == nullptr || *g_sym != l_words.Symbol(w)) {
      throw Error("L and G word tables disagree on " + l_words.Symbol(w) +
                  " (build G with L's word table)");
    }
  }
}

}  // namespace

DecodingGraph BuildHclg(const LGraph &l, const GGraph &g,
                        const TransitionModel &tm) {
  tm.Validate();
  CheckSharedWords(l.word_syms, g.word_syms);
  Fst hcl;
  Label first_disambig = MapLToTids(l, tm, &hcl);
  Fst hclg = Compose(hcl, g.fst);
  MapInputLabelsToEpsilon(&hclg,
                          [&](Label l) { return l >= first_disambig; });
  DecodingGraph dg;
  dg.fst = Connect(hclg);
  dg.tm = tm;
  dg.word_syms = g.word_syms;
  return dg;
}

namespace {

// The state an [unk] arc really leads to. With self-loops the arc enters the
// jnk HMM state, whose single <eps> exit is skipped.
StateId UnkDestination(const DecodingGraph &dg, const Arc &unk_arc) {
  if (!dg.tm.HasSelfLoops()) return unk_arc.nextstate;
  StateId exit = kNoStateId;
  for (const Arc &a : dg.fst.Arcs(unk_arc.nextstate)) {
    if (a.ilabel != kEpsilon || a.olabel != kEpsilon) continue;
    if (a.nextstate == unk_arc.nextstate) continue;
    if (exit != kNoStateId && exit != a.nextstate) {
      throw Error("cannot find the state after the [unk] HMM");
    }
    exit = a.nextstate;
  }
  if (exit == kNoStateId) throw Error("cannot find the state after the [unk] HMM");
  return exit;
}

}  // namespace

DecodingGraph ModHclg(DecodingGraph dg, const Lexicon &oov_lex,
                      const BiasConfig &cfg, std::string_view unk_symbol) {
  cfg.Validate();
  if (dg.tm.context_width() != 1) {
    throw Error("mod-hclg needs a monophone graph; context width " +
                std::to_string(dg.tm.context_width()) + " is not supported");
  }
  if (oov_lex.empty()) throw Error("OOV lexicon is empty");
  auto unk = dg.word_syms.Find(unk_symbol);
  std::vector<std::pair<StateId, size_t>> unk_arcs;
  std::set<StateId> dests;
  if (unk) {
    for (StateId s = 0; s < dg.fst.NumStates(); ++s) {
      auto arcs = dg.fst.Arcs(s);
      for (size_t i = 0; i < arcs.size(); ++i) {
        if (arcs[i].olabel != *unk) continue;
        unk_arcs.emplace_back(s, i);
        dests.insert(UnkDestination(dg, arcs[i]));
      }
    }
  }
  if (unk_arcs.empty()) {
    throw Error("HCLG has no " + std::string(unk_symbol) + " arcs");
  }
  if (dests.size() != 1) {
    throw Error(std::string(unk_symbol) + " arcs lead to " +
                std::to_string(dests.size()) +
                " different states; build G with limit-unk-history so that " +
                std::string(unk_symbol) + " only ends n-grams");
  }
  for (const auto &e : oov_lex.entries()) {
    for (const auto &p : e.phones) dg.tm.Tid(p);
  }

  const StateId dest = *dests.begin();
  const StateId entry = dg.fst.AddState();
  const StateId exit = dg.fst.AddState();
  for (const auto &e : oov_lex.entries()) {
    Label word = dg.word_syms.AddSymbol(e.word);
    StateId cur = entry;
    for (size_t i = 0; i < e.phones.size(); ++i) {
      bool last = i + 1 == e.phones.size();
      StateId next = last ? exit : dg.fst.AddState();
      AddPhoneArc(&dg.fst, dg.tm, cur, next, e.phones[i],
                  i == 0 ? word : kEpsilon, Weight::One());
      cur = next;
    }
  }
  dg.fst.AddArc(exit, Arc(kEpsilon, kEpsilon, Weight::One(), dest));

  for (const auto &[s, i] : unk_arcs) {
    Arc &a = dg.fst.MutableArcs(s)[i];
    a = Arc(kEpsilon, kEpsilon, Times(a.weight, Weight(cfg.penalty)), entry);
  }
  return dg;
}

}  // namespace oovfst

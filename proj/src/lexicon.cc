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
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <unordered_set>

#include "oovfst/error.h"
#include "oovfst/text_util.h"

namespace oovfst {

void Lexicon::Add(std::string word, std::vector<std::string> phones) {
  if (word.empty()) throw Error("lexicon entry without a word");
  if (phones.empty()) throw Error("blank pronunciation for " + word);
  LexiconEntry entry{std::move(word), std::move(phones)};
  if (Contains(entry)) {
    throw Error("duplicate lexicon entry " + entry.word + " " +
                Join(entry.phones, " "));
  }
  entries_.push_back(std::move(entry));
}

bool Lexicon::Contains(const LexiconEntry &e) const {
  return std::find(entries_.begin(), entries_.end(), e) != entries_.end();
}

std::vector<std::string> Lexicon::Words() const {
  std::vector<std::string> out;
  std::unordered_set<std::string> seen;
  for (const auto &e : entries_) {
    if (seen.insert(e.word).second) out.push_back(e.word);
  }
  return out;
}

Lexicon ParseLexicon(std::istream &is) {
  Lexicon lex;
  std::string line;
  while (std::getline(is, line)) {
    auto fields = SplitWhitespace(line);
    if (fields.empty()) continue;
    std::string word = fields.front();
    fields.erase(fields.begin());
    lex.Add(std::move(word), std::move(fields));
  }
  return lex;
}

Lexicon ParseLexiconFile(const std::string &path) {
  std::ifstream is(path);
  if (!is) throw Error("cannot open lexicon " + path);
  return ParseLexicon(is);
}

void WriteLexicon(std::ostream &os, const Lexicon &lex) {
  for (const auto &e : lex.entries()) {
    os << e.word << ' ' << Join(e.phones, " ") << '\n';
  }
}

namespace {

void AddChain(LGraph *l, Label word, const std::vector<Label> &phones) {
  Fst &fst = l->fst;
  PronunciationChain chain;
  chain.word = word;
  chain.phones = phones;
  StateId cur = l->start();
  for (size_t i = 0; i < phones.size(); ++i) {
    bool last = i + 1 == phones.size();
    StateId next = last ? l->pron_end : fst.AddState();
    Label out = i == 0 ? word : kEpsilon;
    if (last) {
      chain.last_state = cur;
      chain.last_arc = fst.NumArcs(cur);
    }
    fst.AddArc(cur, Arc(phones[i], out, Weight::One(), next));
    cur = next;
  }
  l->chains.push_back(std::move(chain));
}

// Gives `chain` the disambiguation input `sym`, either by relabeling its
// existing "#k" arc or by splitting the last phone arc.
void SetChainDisambig(LGraph *l, PronunciationChain *chain, Label sym) {
  if (chain->disambig == sym) return;
  Fst &fst = l->fst;
  Arc &last = fst.MutableArcs(chain->last_state)[chain->last_arc];
  if (chain->disambig != kEpsilon) {
    fst.MutableArcs(last.nextstate).front().ilabel = sym;
  } else {
    StateId mid = fst.AddState();
    // AddState may have reallocated; re-fetch the arc.
    Arc &arc = fst.MutableArcs(chain->last_state)[chain->last_arc];
    arc.nextstate = mid;
    fst.AddArc(mid, Arc(sym, kEpsilon, Weight::One(), l->pron_end));
  }
  chain->disambig = sym;
}

int DisambigIndex(const SymbolTable &syms, Label label) {
  if (label == kEpsilon) return 0;
  const std::string &name = syms.Symbol(label);
  if (name.size() < 2 || name[0] != '#') return 0;
  for (size_t i = 1; i < name.size(); ++i) {
    if (name[i] < '0' || name[i] > '9') return 0;
  }
  return std::stoi(name.substr(1));
}

// Chains whose phone string is repeated or is a proper prefix of another
// chain need a "#k". Numbers are per phone string, counted in chain order;
// chains that already carry one keep it.
void AssignDisambig(LGraph *l) {
  std::map<std::vector<Label>, int> count;
  std::set<std::vector<Label>> prefixes;
  for (const auto &c : l->chains) {
    ++count[c.phones];
    for (size_t k = 1; k < c.phones.size(); ++k) {
      prefixes.emplace(c.phones.begin(), c.phones.begin() + k);
    }
  }
  std::map<std::vector<Label>, int> next_index;
  for (const auto &c : l->chains) {
    int k = DisambigIndex(l->phone_syms, c.disambig);
    if (k > 0) next_index[c.phones] = std::max(next_index[c.phones], k + 1);
  }
  for (auto &c : l->chains) {
    if (c.disambig != kEpsilon) continue;
    if (count[c.phones] < 2 && !prefixes.count(c.phones)) continue;
    int &k = next_index[c.phones];
    if (k == 0) k = 1;
    Label sym = l->phone_syms.AddSymbol("#" + std::to_string(k));
    ++k;
    SetChainDisambig(l, &c, sym);
  }
}

std::vector<Label> PhoneLabels(const SymbolTable &phones,
                               const LexiconEntry &e) {
  std::vector<Label> out;
  for (const auto &p : e.phones) {
    auto label = phones.Find(p);
    if (!label || IsDisambigSymbol(p)) {
      throw Error("unknown phone " + p + " in " + e.word);
    }
    out.push_back(*label);
  }
  return out;
}

}  // namespace

LGraph BuildL(const Lexicon &lex, bool add_unk) {
  if (lex.empty() && !add_unk) throw Error("cannot build L from an empty lexicon");
  LGraph l;
  for (const auto &e : lex.entries()) {
    for (const auto &p : e.phones) {
      if (IsDisambigSymbol(p)) {
        throw Error("phone " + p + " in " + e.word +
                    " collides with disambiguation symbols");
      }
      l.phone_syms.AddSymbol(p);
    }
  }
  for (const auto &e : lex.entries()) l.word_syms.AddSymbol(e.word);
  if (add_unk) {
    l.phone_syms.AddSymbol(kJunkPhone);
    l.word_syms.AddSymbol(kUnkWord);
  }
  Label backoff_in = l.phone_syms.AddSymbol(kBackoffSymbol);
  Label backoff_out = l.word_syms.AddSymbol(kBackoffSymbol);

  StateId start = l.fst.AddState();
  l.fst.SetStart(start);
  l.fst.SetFinal(start, Weight::One());
  l.pron_end = l.fst.AddState();
  l.fst.AddArc(start, Arc(backoff_in, backoff_out, Weight::One(), start));
  l.fst.AddArc(l.pron_end, Arc(kEpsilon, kEpsilon, Weight::One(), start));

  for (const auto &e : lex.entries()) {
    AddChain(&l, l.word_syms.Lookup(e.word), PhoneLabels(l.phone_syms, e));
  }
  if (add_unk) {
    AddChain(&l, l.word_syms.Lookup(kUnkWord),
             {l.phone_syms.Lookup(kJunkPhone)});
  }
  AssignDisambig(&l);
  return l;
}

LGraph AddWordsToL(LGraph l, const Lexicon &oov_lex) {
  // Validate everything before touching the graph.
  std::vector<std::pair<std::string, std::vector<Label>>> todo;
  for (const auto &e : oov_lex.entries()) {
    todo.emplace_back(e.word, PhoneLabels(l.phone_syms, e));
  }
  for (auto &[word, phones] : todo) {
    auto existing = l.word_syms.Find(word);
    if (existing) {
      bool present = std::any_of(
          l.chains.begin(), l.chains.end(), [&](const PronunciationChain &c) {
            return c.word == *existing && c.phones == phones;
          });
      if (present) continue;
    }
    AddChain(&l, l.word_syms.AddSymbol(word), phones);
  }
  AssignDisambig(&l);
  return l;
}

LGraph SpliceUnkLm(LGraph l, const Fst &phone_lm) {
  auto unk = l.word_syms.Find(kUnkWord);
  auto jnk = l.phone_syms.Find(kJunkPhone);
  auto it = l.chains.end();
  if (unk && jnk) {
    it = std::find_if(l.chains.begin(), l.chains.end(),
                      [&](const PronunciationChain &c) {
                        return c.word == *unk &&
                               c.phones == std::vector<Label>{*jnk};
                      });
  }
  if (it == l.chains.end()) {
    throw Error("L has no jnk:[unk] pronunciation to replace");
  }
  if (phone_lm.Start() == kNoStateId) throw Error("phone LM is empty");
  for (StateId s = 0; s < phone_lm.NumStates(); ++s) {
    for (const Arc &arc : phone_lm.Arcs(s)) {
      if (arc.ilabel == kEpsilon) continue;
      const std::string *name = l.phone_syms.Find(arc.ilabel);
      if (name == nullptr || IsDisambigSymbol(*name)) {
        throw Error("phone LM uses label " + std::to_string(arc.ilabel) +
                    " which is not a phone of L");
      }
    }
  }

  Fst &fst = l.fst;
  const StateId start = l.start();
  // The jnk chain starts with the arc start -> ... labeled jnk:[unk].
  auto &start_arcs = fst.MutableArcs(start);
  start_arcs.erase(std::remove_if(start_arcs.begin(), start_arcs.end(),
                                  [&](const Arc &a) {
                                    return a.ilabel == *jnk &&
                                           a.olabel == *unk;
                                  }),
                   start_arcs.end());
  l.chains.erase(it);
  // Arc indices at the start state shifted; refresh chains that end there.
  for (auto &c : l.chains) {
    if (c.last_state != start) continue;
    auto pos = std::find_if(start_arcs.begin(), start_arcs.end(),
                            [&](const Arc &a) {
                              return a.ilabel == c.phones.back() &&
                                     a.olabel == c.word;
                            });
    c.last_arc = static_cast<size_t>(pos - start_arcs.begin());
  }

  Label enter = l.phone_syms.AddSymbol(kUnkLmEnterSymbol);
  Label exit = l.phone_syms.AddSymbol(kUnkLmExitSymbol);
  const StateId offset = fst.AddStates(phone_lm.NumStates());
  for (StateId s = 0; s < phone_lm.NumStates(); ++s) {
    for (const Arc &arc : phone_lm.Arcs(s)) {
      fst.AddArc(offset + s,
                 Arc(arc.ilabel, kEpsilon, arc.weight, offset + arc.nextstate));
    }
    if (phone_lm.IsFinal(s)) {
      fst.AddArc(offset + s,
                 Arc(exit, kEpsilon, phone_lm.Final(s), l.pron_end));
    }
  }
  fst.AddArc(start, Arc(enter, *unk, Weight::One(), offset + phone_lm.Start()));
  return l;
}

LGraph LGraph::FromFst(Fst fst, SymbolTable phone_syms, SymbolTable word_syms) {
  LGraph l;
  l.fst = std::move(fst);
  l.phone_syms = std::move(phone_syms);
  l.word_syms = std::move(word_syms);
  const Fst &f = l.fst;
  const StateId start = f.Start();
  if (start == kNoStateId) throw Error("L is empty");

  for (StateId s = 0; s < f.NumStates(); ++s) {
    for (const Arc &arc : f.Arcs(s)) {
      if (s != start && arc.nextstate == start && arc.ilabel == kEpsilon &&
          arc.olabel == kEpsilon) {
        if (l.pron_end != kNoStateId && l.pron_end != s) {
          throw Error("L has more than one <eps> arc back to the start state");
        }
        l.pron_end = s;
      }
    }
  }
  if (l.pron_end == kNoStateId) {
    throw Error("L has no pronunciation-end state (<eps> arc to start)");
  }

  auto start_arcs = f.Arcs(start);
  for (size_t i = 0; i < start_arcs.size(); ++i) {
    const Arc &first = start_arcs[i];
    if (first.nextstate == start || first.ilabel == kEpsilon ||
        first.olabel == kEpsilon || l.phone_syms.IsDisambig(first.ilabel)) {
      continue;
    }
    PronunciationChain chain;
    chain.word = first.olabel;
    chain.phones.push_back(first.ilabel);
    chain.last_state = start;
    chain.last_arc = i;
    StateId cur = first.nextstate;
    bool ok = true;
    for (StateId steps = 0; cur != l.pron_end; ++steps) {
      if (steps > f.NumStates() || f.NumArcs(cur) != 1) {
        ok = false;
        break;
      }
      const Arc &arc = f.Arcs(cur).front();
      if (arc.olabel != kEpsilon || arc.ilabel == kEpsilon) {
        ok = false;
        break;
      }
      if (l.phone_syms.IsDisambig(arc.ilabel)) {
        if (arc.nextstate != l.pron_end) ok = false;
        chain.disambig = arc.ilabel;
        break;
      }
      chain.phones.push_back(arc.ilabel);
      chain.last_state = cur;
      chain.last_arc = 0;
      cur = arc.nextstate;
    }
    if (ok) l.chains.push_back(std::move(chain));
  }
  return l;
}

}  // namespace oovfst

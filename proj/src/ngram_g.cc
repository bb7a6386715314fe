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

#include "oovfst/ngram_g.h"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>

#include "oovfst/error.h"
#include "oovfst/fst_ops.h"
#include "oovfst/lexicon.h"
#include "oovfst/text_util.h"

namespace oovfst {

void BiasConfig::Validate() const {
  if (!(penalty >= 0.0)) throw Error("penalty must be >= 0");
  if (!(boost_cost >= 0.0)) throw Error("boost cost must be >= 0");
  if (!(discount >= 0.0)) throw Error("discount must be >= 0");
}

std::optional<StateId> GGraph::FindState(
    const std::vector<Label> &history) const {
  auto it = state_of.find(history);
  if (it == state_of.end()) return std::nullopt;
  return it->second;
}

StateId GGraph::AddHistoryState(const std::vector<Label> &history) {
  if (state_of.count(history)) throw Error("history state already exists");
  StateId s = fst.AddState();
  history_of.resize(fst.NumStates());
  history_of[s] = history;
  state_of.emplace(history, s);
  return s;
}

void GGraph::Validate() const {
  if (static_cast<StateId>(history_of.size()) != fst.NumStates()) {
    throw Error("G history map does not cover every state");
  }
  if (backoff_state == kNoStateId || !history_of[backoff_state].empty()) {
    throw Error("G backoff state must have the empty history");
  }
  if (state_of.size() != history_of.size()) {
    throw Error("G history map is not a bijection");
  }
  for (const auto &[hist, s] : state_of) {
    if (history_of.at(s) != hist) throw Error("G history maps disagree");
  }
  fst.Validate();
}

namespace {

std::vector<Label> ToLabels(const SymbolTable &syms,
                            const std::vector<std::string> &tokens) {
  std::vector<Label> out;
  out.reserve(tokens.size());
  for (const auto &t : tokens) out.push_back(syms.Lookup(t));
  return out;
}

// Longest suffix of `tokens` (at most max_len long) that has a state.
StateId LongestSuffixState(const GGraph &g, const std::vector<Label> &tokens,
                           size_t max_len) {
  size_t len = std::min(tokens.size(), max_len);
  for (; len > 0; --len) {
    std::vector<Label> suffix(tokens.end() - len, tokens.end());
    if (auto s = g.FindState(suffix)) return *s;
  }
  return g.backoff_state;
}

}  // namespace

GGraph ArpaToG(const ArpaModel &model, SymbolTable word_syms) {
  GGraph g;
  g.order = model.order();
  g.word_syms = std::move(word_syms);
  for (int k = 1; k <= model.order(); ++k) {
    for (const NGram &ng : model.ngrams(k)) {
      for (const auto &t : ng.tokens) {
        if (IsDisambigSymbol(t) || t == kEpsilonSymbol) {
          throw Error("ARPA token " + t + " collides with a reserved symbol");
        }
        g.word_syms.AddSymbol(t);
      }
    }
  }
  g.backoff_label = g.word_syms.AddSymbol(kBackoffSymbol);

  std::set<std::vector<std::string>> histories;
  for (int k = 2; k <= model.order(); ++k) {
    for (const NGram &ng : model.ngrams(k)) {
      histories.emplace(ng.tokens.begin(), ng.tokens.end() - 1);
    }
  }
  for (int k = 1; k < model.order(); ++k) {
    for (const NGram &ng : model.ngrams(k)) {
      if (ng.backoff10 && Log10ToCost(*ng.backoff10) != 0.0) {
        histories.insert(ng.tokens);
      }
    }
  }

  g.backoff_state = g.AddHistoryState({});
  std::vector<std::vector<std::string>> history_tokens{{}};
  for (int k = 1; k < model.order(); ++k) {
    for (const NGram &ng : model.ngrams(k)) {
      if (!histories.count(ng.tokens) || ng.tokens.back() == kEosSymbol) {
        continue;
      }
      g.AddHistoryState(ToLabels(g.word_syms, ng.tokens));
      history_tokens.push_back(ng.tokens);
    }
  }

  const size_t max_hist = static_cast<size_t>(model.order() - 1);
  for (int k = 1; k <= model.order(); ++k) {
    for (const NGram &ng : model.ngrams(k)) {
      const std::string &w = ng.tokens.back();
      if (w == kBosSymbol) continue;
      std::vector<Label> labels = ToLabels(g.word_syms, ng.tokens);
      std::vector<Label> hist(labels.begin(), labels.end() - 1);
      auto src = g.FindState(hist);
      if (!src) {
        throw Error("n-gram " + Join(ng.tokens, " ") +
                    " extends a history that cannot be a state");
      }
      double cost = Log10ToCost(ng.logprob10);
      if (w == kEosSymbol) {
        g.fst.SetFinal(*src, Weight(cost));
        continue;
      }
      StateId dst = LongestSuffixState(g, labels, max_hist);
      g.fst.AddArc(*src, Arc(labels.back(), labels.back(), cost, dst));
    }
  }

  for (StateId s = 0; s < g.fst.NumStates(); ++s) {
    const auto &hist = g.history_of[s];
    if (hist.empty()) continue;
    std::vector<Label> shorter(hist.begin() + 1, hist.end());
    StateId dst = LongestSuffixState(g, shorter, shorter.size());
    const NGram *ng = model.Find(history_tokens[s]);
    double cost = ng && ng->backoff10 ? Log10ToCost(*ng->backoff10) : 0.0;
    g.fst.AddArc(s, Arc(g.backoff_label, kEpsilon, cost, dst));
  }

  auto bos = g.word_syms.Find(kBosSymbol);
  std::optional<StateId> start;
  if (bos) start = g.FindState({*bos});
  g.fst.SetStart(start ? *start : g.backoff_state);
  return g;
}

Weight ScoreSentence(const GGraph &g, const std::vector<Label> &words) {
  Fst acceptor = LinearAcceptor(words);
  for (StateId s = 0; s < acceptor.NumStates(); ++s) {
    acceptor.AddArc(s, Arc(g.backoff_label, g.backoff_label, Weight::One(), s));
  }
  try {
    return ShortestPath(Compose(acceptor, g.fst)).total;
  } catch (const EmptyLanguageError &) {
    return Weight::Zero();
  }
}

GGraph ReplaceUnkInG(GGraph g, const std::vector<std::string> &oov_words,
                     const BiasConfig &cfg, std::string_view unk_symbol) {
  cfg.Validate();
  if (oov_words.empty()) throw Error("no OOV words given for [unk] replacement");
  auto unk = g.word_syms.Find(unk_symbol);
  if (!unk) {
    throw Error("G has no " + std::string(unk_symbol) + " symbol");
  }
  std::vector<Label> new_labels;
  std::set<Label> seen;
  for (const auto &w : oov_words) {
    Label l = g.word_syms.AddSymbol(w);
    if (seen.insert(l).second) new_labels.push_back(l);
  }

  size_t replaced = 0;
  for (StateId s = 0; s < g.fst.NumStates(); ++s) {
    auto &arcs = g.fst.MutableArcs(s);
    if (std::none_of(arcs.begin(), arcs.end(),
                     [&](const Arc &a) { return a.ilabel == *unk; })) {
      continue;
    }
    std::vector<Arc> rebuilt;
    rebuilt.reserve(arcs.size() + new_labels.size());
    for (const Arc &a : arcs) {
      if (a.ilabel != *unk) {
        rebuilt.push_back(a);
        continue;
      }
      ++replaced;
      Weight w = Times(a.weight, Weight(cfg.penalty));
      for (Label l : new_labels) rebuilt.emplace_back(l, l, w, a.nextstate);
    }
    arcs = std::move(rebuilt);
  }
  if (replaced == 0) {
    throw Error("G has no " + std::string(unk_symbol) +
                " arcs to replace (wrong G?)");
  }
  return g;
}

StateWalk TokenizedSequenceStateWalk(const GGraph &g,
                                     const std::vector<Label> &subwords) {
  StateWalk walk;
  StateId cur = g.backoff_state;
  walk.reached.push_back(cur);
  for (Label l : subwords) {
    const Arc *next = nullptr;
    if (l != kEpsilon && l != g.backoff_label) {
      for (const Arc &a : g.fst.Arcs(cur)) {
        if (a.ilabel == l) {
          next = &a;
          break;
        }
      }
    }
    if (next == nullptr) return walk;
    cur = next->nextstate;
    walk.reached.push_back(cur);
  }
  walk.exists_fully = true;
  return walk;
}

namespace {

class SubwordBooster {
 public:
  SubwordBooster(GGraph *g, const BiasConfig &cfg, ModGReport *report)
      : g_(*g), cfg_(cfg), report_(*report) {}

  void Boost(const std::vector<Label> &tokens) {
    for (Label t : tokens) {
      if (FindArc(g_.backoff_state, t, kNoStateId) < 0) {
        throw Error("no unigram state for subword " +
                    g_.word_syms.Symbol(t) + " (malformed G)");
      }
    }
    StateId cur = g_.backoff_state;
    for (size_t i = 0; i < tokens.size(); ++i) {
      const Label t = tokens[i];
      if (i + 1 == tokens.size()) {
        FinishAt(cur, t);
        return;
      }
      int idx = FindArc(cur, t, kNoStateId);
      if (idx >= 0) {
        Discount(cur, idx);
        cur = g_.fst.Arcs(cur)[idx].nextstate;
        continue;
      }
      std::vector<Label> hist = g_.history_of[cur];
      hist.push_back(t);
      StateId dst;
      if (auto existing = g_.FindState(hist)) {
        dst = *existing;
      } else {
        StateId unigram = UnigramState(t);
        dst = g_.AddHistoryState(hist);
        ++report_.states_added;
        g_.fst.AddArc(dst, Arc(g_.backoff_label, kEpsilon, Weight::One(),
                               unigram));
        ++report_.arcs_added;
      }
      g_.fst.AddArc(cur, Arc(t, t, cfg_.boost_cost, dst));
      ++report_.arcs_added;
      cur = dst;
    }
  }

 private:
  // The last subword must end in its unigram state. An arc with the right
  // label but another target is left alone and a parallel arc is added.
  void FinishAt(StateId cur, Label t) {
    StateId unigram = UnigramState(t);
    int exact = FindArc(cur, t, unigram);
    if (exact >= 0) {
      Discount(cur, exact);
      return;
    }
    int other = FindArc(cur, t, kNoStateId);
    Weight w(cfg_.boost_cost);
    if (other >= 0) w = Discounted(g_.fst.Arcs(cur)[other].weight);
    g_.fst.AddArc(cur, Arc(t, t, w, unigram));
    ++report_.arcs_added;
  }

  StateId UnigramState(Label t) {
    if (auto s = g_.FindState({t})) return *s;
    // The unigram exists but was never a history; a fresh state that backs
    // off for free is equivalent.
    StateId s = g_.AddHistoryState({t});
    ++report_.states_added;
    g_.fst.AddArc(s, Arc(g_.backoff_label, kEpsilon, Weight::One(),
                         g_.backoff_state));
    ++report_.arcs_added;
    return s;
  }

  int FindArc(StateId s, Label t, StateId target) const {
    auto arcs = g_.fst.Arcs(s);
    for (size_t i = 0; i < arcs.size(); ++i) {
      if (arcs[i].ilabel != t) continue;
      if (target != kNoStateId && arcs[i].nextstate != target) continue;
      return static_cast<int>(i);
    }
    return -1;
  }

  Weight Discounted(Weight w) const {
    if (w.Value() <= 0.0) return w;
    return Weight(std::max(0.0, w.Value() - cfg_.discount));
  }

  void Discount(StateId s, int idx) {
    Arc &a = g_.fst.MutableArcs(s)[idx];
    a.weight = Discounted(a.weight);
    ++report_.arcs_discounted;
  }

  GGraph &g_;
  const BiasConfig &cfg_;
  ModGReport &report_;
};

}  // namespace

GGraph ModGSubwords(GGraph g, const std::vector<std::string> &oov_words,
                    const BpeModel &bpe, const BiasConfig &cfg,
                    ModGReport *report) {
  cfg.Validate();
  ModGReport local;
  if (report == nullptr) report = &local;
  SubwordBooster booster(&g, cfg, report);
  for (const auto &word : oov_words) {
    std::vector<Label> labels;
    bool known = true;
    for (const auto &tok : bpe.Tokenize(word)) {
      auto l = g.word_syms.Find(tok);
      if (!l) {
        known = false;
        break;
      }
      labels.push_back(*l);
    }
    if (!known) {
      report->skipped.push_back(word);
      continue;
    }
    booster.Boost(labels);
  }
  return g;
}

void WriteGHistories(std::ostream &os, const GGraph &g) {
  os << "#order " << g.order << '\n';
  for (StateId s = 0; s < g.fst.NumStates(); ++s) {
    os << s;
    const auto &hist = g.history_of[s];
    if (!hist.empty()) {
      os << '\t';
      for (size_t i = 0; i < hist.size(); ++i) {
        if (i) os << ' ';
        os << g.word_syms.Symbol(hist[i]);
      }
    }
    os << '\n';
  }
}

GGraph ReadGHistories(std::istream &is, Fst fst, SymbolTable word_syms) {
  GGraph g;
  g.fst = std::move(fst);
  g.word_syms = std::move(word_syms);
  g.history_of.assign(g.fst.NumStates(), {});
  std::vector<bool> seen(g.fst.NumStates(), false);
  std::string line;
  size_t lineno = 0;
  bool have_order = false;
  while (std::getline(is, line)) {
    ++lineno;
    if (Trim(line).empty()) continue;
    if (!have_order) {
      auto f = SplitWhitespace(line);
      if (f.size() != 2 || f[0] != "#order") {
        throw Error("history file must start with '#order N'");
      }
      g.order = static_cast<int>(ParseInt(f[1], "order"));
      have_order = true;
      continue;
    }
    auto fields = SplitWhitespace(line);
    StateId s = static_cast<StateId>(ParseInt(fields[0], "state id"));
    if (s < 0 || s >= g.fst.NumStates() || seen[s]) {
      throw Error("history file line " + std::to_string(lineno) +
                  ": bad or repeated state " + fields[0]);
    }
    seen[s] = true;
    std::vector<Label> hist;
    for (size_t i = 1; i < fields.size(); ++i) {
      hist.push_back(g.word_syms.Lookup(fields[i]));
    }
    if (hist.empty()) {
      if (g.backoff_state != kNoStateId) {
        throw Error("history file lists two empty-history states");
      }
      g.backoff_state = s;
    }
    if (!g.state_of.emplace(hist, s).second) {
      throw Error("history file repeats a history");
    }
    g.history_of[s] = std::move(hist);
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw Error("history file does not cover every G state");
  }
  if (auto b = g.word_syms.Find(kBackoffSymbol)) g.backoff_label = *b;
  g.Validate();
  return g;
}

}  // namespace oovfst

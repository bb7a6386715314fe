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

#include "oovfst/fst_ops.h"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "oovfst/error.h"

namespace oovfst {

std::vector<Label> LinearPath::InputLabels() const {
  std::vector<Label> out;
  for (const Arc &arc : arcs) {
    if (arc.ilabel != kEpsilon) out.push_back(arc.ilabel);
  }
  return out;
}

std::vector<Label> LinearPath::OutputLabels() const {
  std::vector<Label> out;
  for (const Arc &arc : arcs) {
    if (arc.olabel != kEpsilon) out.push_back(arc.olabel);
  }
  return out;
}

Fst LinearPath::ToFst() const {
  Fst fst;
  if (states.empty()) return fst;
  fst.AddStates(static_cast<StateId>(arcs.size() + 1));
  fst.SetStart(0);
  Weight arc_sum = Weight::One();
  for (size_t i = 0; i < arcs.size(); ++i) {
    Arc arc = arcs[i];
    arc.nextstate = static_cast<StateId>(i + 1);
    fst.AddArc(static_cast<StateId>(i), arc);
    arc_sum = Times(arc_sum, arc.weight);
  }
  // Whatever is left of the total after the arcs is the final weight.
  fst.SetFinal(static_cast<StateId>(arcs.size()),
               Weight(total.Value() - arc_sum.Value()));
  return fst;
}

// ---------------------------------------------------------------------------
// Composition.

namespace {

// Filter states of the epsilon filter.
//   0: free; 1: only b may move on its input epsilons; 2: only a may move on
//   its output epsilons. A matched non-epsilon pair resets to 0.
enum FilterState : uint8_t { kFree = 0, kBOnly = 1, kAOnly = 2 };

struct Triple {
  StateId a;
  StateId b;
  uint8_t filter;
  bool operator==(const Triple &o) const {
    return a == o.a && b == o.b && filter == o.filter;
  }
};

struct TripleHash {
  size_t operator()(const Triple &t) const {
    uint64_t k = (static_cast<uint64_t>(static_cast<uint32_t>(t.a)) << 32) ^
                 (static_cast<uint64_t>(static_cast<uint32_t>(t.b)) << 2) ^
                 t.filter;
    return std::hash<uint64_t>()(k);
  }
};

}  // namespace

Fst Compose(const Fst &a, const Fst &b) {
  Fst out;
  if (a.Start() == kNoStateId || b.Start() == kNoStateId) return out;

  // Arc indices of b sorted by input label, per state.
  std::vector<std::vector<size_t>> b_sorted(b.NumStates());
  for (StateId s = 0; s < b.NumStates(); ++s) {
    auto arcs = b.Arcs(s);
    auto &idx = b_sorted[s];
    idx.resize(arcs.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(), [&](size_t x, size_t y) {
      return arcs[x].ilabel < arcs[y].ilabel;
    });
  }

  std::unordered_map<Triple, StateId, TripleHash> ids;
  std::deque<Triple> queue;
  auto find_or_add = [&](Triple t) {
    auto it = ids.find(t);
    if (it != ids.end()) return it->second;
    StateId id = out.AddState();
    ids.emplace(t, id);
    queue.push_back(t);
    return id;
  };

  out.SetStart(find_or_add({a.Start(), b.Start(), kFree}));
  while (!queue.empty()) {
    Triple t = queue.front();
    queue.pop_front();
    StateId src = ids.at(t);
    out.SetFinal(src, Times(a.Final(t.a), b.Final(t.b)));

    auto b_arcs = b.Arcs(t.b);
    const auto &b_idx = b_sorted[t.b];
    for (const Arc &ea : a.Arcs(t.a)) {
      if (ea.olabel == kEpsilon) {
        // a moves alone.
        if (t.filter != kBOnly) {
          StateId dst = find_or_add({ea.nextstate, t.b, kAOnly});
          out.AddArc(src, Arc(ea.ilabel, kEpsilon, ea.weight, dst));
        }
        // Both move on epsilon.
        if (t.filter == kFree) {
          auto lo = std::lower_bound(
              b_idx.begin(), b_idx.end(), kEpsilon,
              [&](size_t i, Label l) { return b_arcs[i].ilabel < l; });
          for (auto it = lo; it != b_idx.end() &&
                             b_arcs[*it].ilabel == kEpsilon;
               ++it) {
            const Arc &eb = b_arcs[*it];
            StateId dst = find_or_add({ea.nextstate, eb.nextstate, kFree});
            out.AddArc(src, Arc(ea.ilabel, eb.olabel,
                                Times(ea.weight, eb.weight), dst));
          }
        }
        continue;
      }
      auto lo = std::lower_bound(
          b_idx.begin(), b_idx.end(), ea.olabel,
          [&](size_t i, Label l) { return b_arcs[i].ilabel < l; });
      for (auto it = lo; it != b_idx.end() && b_arcs[*it].ilabel == ea.olabel;
           ++it) {
        const Arc &eb = b_arcs[*it];
        StateId dst = find_or_add({ea.nextstate, eb.nextstate, kFree});
        out.AddArc(src,
                   Arc(ea.ilabel, eb.olabel, Times(ea.weight, eb.weight), dst));
      }
    }
    // b moves alone on its input epsilons.
    if (t.filter != kAOnly) {
      for (const Arc &eb : b_arcs) {
        if (eb.ilabel != kEpsilon) continue;
        StateId dst = find_or_add({t.a, eb.nextstate, kBOnly});
        out.AddArc(src, Arc(kEpsilon, eb.olabel, eb.weight, dst));
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Shortest path.

std::vector<Weight> ShortestDistanceToFinal(const Fst &fst) {
  const StateId n = fst.NumStates();
  std::vector<Weight> dist(n, Weight::Zero());
  std::vector<std::vector<std::pair<StateId, Weight>>> preds(n);
  for (StateId s = 0; s < n; ++s) {
    for (const Arc &arc : fst.Arcs(s)) {
      preds[arc.nextstate].emplace_back(s, arc.weight);
    }
  }
  std::deque<StateId> queue;
  std::vector<bool> queued(n, false);
  std::vector<int64_t> updates(n, 0);
  for (StateId s = 0; s < n; ++s) {
    if (fst.IsFinal(s)) {
      dist[s] = fst.Final(s);
      queue.push_back(s);
      queued[s] = true;
    }
  }
  // FIFO label-correcting relaxation; a state queued more than n times lies
  // on a negative cycle.
  while (!queue.empty()) {
    StateId t = queue.front();
    queue.pop_front();
    queued[t] = false;
    for (const auto &[s, w] : preds[t]) {
      Weight cand = Times(w, dist[t]);
      if (cand.Value() < dist[s].Value()) {
        dist[s] = cand;
        if (!queued[s]) {
          if (++updates[s] > n + 1) throw Error("negative-weight cycle");
          queue.push_back(s);
          queued[s] = true;
        }
      }
    }
  }
  return dist;
}

LinearPath ShortestPath(const Fst &fst) {
  if (fst.Start() == kNoStateId) throw EmptyLanguageError();
  std::vector<Weight> dist = ShortestDistanceToFinal(fst);
  if (dist[fst.Start()].IsZero()) throw EmptyLanguageError();

  LinearPath path;
  path.total = dist[fst.Start()];
  std::vector<bool> on_path(fst.NumStates(), false);
  StateId s = fst.Start();
  path.states.push_back(s);
  on_path[s] = true;
  while (true) {
    // Stopping yields a prefix, which sorts before any extension.
    if (fst.IsFinal(s) && fst.Final(s) == dist[s]) break;
    const Arc *best = nullptr;
    for (const Arc &arc : fst.Arcs(s)) {
      if (on_path[arc.nextstate]) continue;
      if (!(Times(arc.weight, dist[arc.nextstate]) == dist[s])) continue;
      if (best == nullptr || arc.nextstate < best->nextstate) best = &arc;
    }
    if (best == nullptr) {
      throw Error("shortest path ties around a zero-weight cycle at state " +
                  std::to_string(s));
    }
    path.arcs.push_back(*best);
    s = best->nextstate;
    path.states.push_back(s);
    on_path[s] = true;
  }
  return path;
}

// ---------------------------------------------------------------------------
// Connect.

Fst Connect(const Fst &fst, std::vector<StateId> *old_to_new) {
  const StateId n = fst.NumStates();
  std::vector<bool> access(n, false), coaccess(n, false);
  if (fst.Start() != kNoStateId) {
    std::vector<StateId> stack{fst.Start()};
    access[fst.Start()] = true;
    while (!stack.empty()) {
      StateId s = stack.back();
      stack.pop_back();
      for (const Arc &arc : fst.Arcs(s)) {
        if (!access[arc.nextstate]) {
          access[arc.nextstate] = true;
          stack.push_back(arc.nextstate);
        }
      }
    }
  }
  std::vector<std::vector<StateId>> preds(n);
  std::vector<StateId> stack;
  for (StateId s = 0; s < n; ++s) {
    for (const Arc &arc : fst.Arcs(s)) preds[arc.nextstate].push_back(s);
    if (fst.IsFinal(s)) {
      coaccess[s] = true;
      stack.push_back(s);
    }
  }
  while (!stack.empty()) {
    StateId s = stack.back();
    stack.pop_back();
    for (StateId p : preds[s]) {
      if (!coaccess[p]) {
        coaccess[p] = true;
        stack.push_back(p);
      }
    }
  }

  std::vector<StateId> map(n, kNoStateId);
  Fst out;
  for (StateId s = 0; s < n; ++s) {
    if (access[s] && coaccess[s]) map[s] = out.AddState();
  }
  for (StateId s = 0; s < n; ++s) {
    if (map[s] == kNoStateId) continue;
    out.SetFinal(map[s], fst.Final(s));
    for (const Arc &arc : fst.Arcs(s)) {
      if (map[arc.nextstate] == kNoStateId) continue;
      Arc copy = arc;
      copy.nextstate = map[arc.nextstate];
      out.AddArc(map[s], copy);
    }
  }
  if (fst.Start() != kNoStateId && map[fst.Start()] != kNoStateId) {
    out.SetStart(map[fst.Start()]);
  } else {
    out = Fst();
    std::fill(map.begin(), map.end(), kNoStateId);
  }
  if (old_to_new) *old_to_new = std::move(map);
  return out;
}

// ---------------------------------------------------------------------------
// [unk] spans and label helpers.

std::vector<std::vector<Label>> ExtractUnkSpans(const LinearPath &path,
                                                const SymbolTable &isyms,
                                                Label unk_label) {
  std::vector<std::vector<Label>> spans;
  const auto &arcs = path.arcs;
  size_t i = 0;
  while (i < arcs.size()) {
    if (arcs[i].olabel != unk_label) {
      ++i;
      continue;
    }
    std::vector<Label> span;
    size_t j = i;
    do {
      Label in = arcs[j].ilabel;
      if (in != kEpsilon && !isyms.IsDisambig(in)) span.push_back(in);
      ++j;
    } while (j < arcs.size() && arcs[j].olabel == kEpsilon);
    spans.push_back(std::move(span));
    i = j;
  }
  return spans;
}

std::string JoinSpan(const std::vector<Label> &span, const SymbolTable &syms) {
  std::string out;
  for (Label l : span) out += syms.Symbol(l);
  return out;
}

Fst LinearAcceptor(const std::vector<Label> &labels) {
  Fst fst;
  fst.AddStates(static_cast<StateId>(labels.size() + 1));
  fst.SetStart(0);
  for (size_t i = 0; i < labels.size(); ++i) {
    fst.AddArc(static_cast<StateId>(i),
               Arc(labels[i], labels[i], Weight::One(),
                   static_cast<StateId>(i + 1)));
  }
  fst.SetFinal(static_cast<StateId>(labels.size()), Weight::One());
  return fst;
}

void MapInputLabelsToEpsilon(Fst *fst,
                             const std::function<bool(Label)> &pred) {
  for (StateId s = 0; s < fst->NumStates(); ++s) {
    for (Arc &arc : fst->MutableArcs(s)) {
      if (arc.ilabel != kEpsilon && pred(arc.ilabel)) arc.ilabel = kEpsilon;
    }
  }
}

void RemoveDisambigInputs(Fst *fst, const SymbolTable &isyms) {
  MapInputLabelsToEpsilon(fst, [&](Label l) { return isyms.IsDisambig(l); });
}

}  // namespace oovfst

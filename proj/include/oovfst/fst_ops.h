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

#ifndef OOVFST_FST_OPS_H_
#define OOVFST_FST_OPS_H_

#include <functional>
#include <string>
#include <vector>

#include "oovfst/fst.h"
#include "oovfst/symbol_table.h"

namespace oovfst {

// A single start-to-final path. states.size() == arcs.size() + 1 and
// states[i + 1] == arcs[i].nextstate. `total` includes the final weight.
struct LinearPath {
  std::vector<StateId> states;
  std::vector<Arc> arcs;
  Weight total = Weight::Zero();

  std::vector<Label> InputLabels() const;   // epsilons dropped
  std::vector<Label> OutputLabels() const;  // epsilons dropped
  // Renders the path as a chain FST 0 -> 1 -> ... -> n.
  Fst ToFst() const;
};

// Weighted composition with the three-state epsilon filter: a's epsilon
// outputs and b's epsilon inputs are sequenced so that every (x, z) pair is
// produced by exactly one family of paths and no weight is counted twice.
// Only accessible states are built; the result is not trimmed.
Fst Compose(const Fst &a, const Fst &b);

// Minimum-cost accepting path. Ties go to the lexicographically smallest
// state-id sequence. Negative arc weights are allowed; negative cycles are
// an error. Throws EmptyLanguageError when nothing is accepted.
LinearPath ShortestPath(const Fst &fst);

// Per-state cost to reach a final state (Zero when unreachable).
std::vector<Weight> ShortestDistanceToFinal(const Fst &fst);

// Drops states that are not both accessible and coaccessible. Surviving
// states keep their relative order. If `old_to_new` is given it receives the
// renumbering (kNoStateId for removed states).
Fst Connect(const Fst &fst, std::vector<StateId> *old_to_new = nullptr);

// Input labels consumed under each arc whose output is `unk_label`, up to but
// not including the next arc with a non-epsilon output. Epsilons and
// disambiguation symbols (per `isyms`) are dropped. One span per occurrence.
std::vector<std::vector<Label>> ExtractUnkSpans(const LinearPath &path,
                                                const SymbolTable &isyms,
                                                Label unk_label);

// Concatenates the symbols of a span; with a character lexicon this is the
// recovered word.
std::string JoinSpan(const std::vector<Label> &span, const SymbolTable &syms);

// Acceptor for a label string (ilabel == olabel on each arc).
Fst LinearAcceptor(const std::vector<Label> &labels);

// Replaces input labels for which `pred` holds by epsilon.
void MapInputLabelsToEpsilon(Fst *fst, const std::function<bool(Label)> &pred);

// Replaces input labels that are disambiguation symbols in `isyms` by
// epsilon.
void RemoveDisambigInputs(Fst *fst, const SymbolTable &isyms);

}  // namespace oovfst

#endif  // OOVFST_FST_OPS_H_

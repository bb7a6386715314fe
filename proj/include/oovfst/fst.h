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

// Mutable weighted transducer over the tropical semiring.
//
// State ids are dense and stable: operations that grow an Fst append states
// and never renumber existing ones, so side tables keyed by state id (the
// history map of a G, the pronunciation-end state of an L) stay valid across
// surgery. Only Connect() produces a renumbered copy.

#ifndef OOVFST_FST_H_
#define OOVFST_FST_H_

#include <cstdint>
#include <span>
#include <vector>

#include "oovfst/weight.h"

namespace oovfst {

using Label = int32_t;
using StateId = int32_t;

inline constexpr Label kEpsilon = 0;
inline constexpr StateId kNoStateId = -1;

struct Arc {
  Label ilabel = kEpsilon;
  Label olabel = kEpsilon;
  Weight weight = Weight::One();
  StateId nextstate = kNoStateId;

  Arc() = default;
  Arc(Label i, Label o, Weight w, StateId n)
      : ilabel(i), olabel(o), weight(w), nextstate(n) {}
  Arc(Label i, Label o, double w, StateId n)
      : ilabel(i), olabel(o), weight(w), nextstate(n) {}

  friend bool operator==(const Arc &a, const Arc &b) {
    return a.ilabel == b.ilabel && a.olabel == b.olabel &&
           a.weight == b.weight && a.nextstate == b.nextstate;
  }
};

class Fst {
 public:
  StateId AddState();
  // Appends `n` states and returns the id of the first one.
  StateId AddStates(StateId n);
  StateId NumStates() const { return static_cast<StateId>(states_.size()); }

  StateId Start() const { return start_; }
  void SetStart(StateId s);

  Weight Final(StateId s) const { return state(s).final; }
  bool IsFinal(StateId s) const { return !state(s).final.IsZero(); }
  void SetFinal(StateId s, Weight w) { mutable_state(s).final = w; }

  // Throws if either endpoint does not exist.
  void AddArc(StateId s, const Arc &arc);
  std::span<const Arc> Arcs(StateId s) const { return state(s).arcs; }
  std::vector<Arc> &MutableArcs(StateId s) { return mutable_state(s).arcs; }
  void DeleteArcs(StateId s) { mutable_state(s).arcs.clear(); }

  size_t NumArcs(StateId s) const { return state(s).arcs.size(); }
  size_t NumArcs() const;

  bool Empty() const { return states_.empty(); }

  // Checks the nextstate-in-range invariant over every arc (arcs edited
  // through MutableArcs bypass AddArc's check).
  void Validate() const;

 private:
  struct State {
    std::vector<Arc> arcs;
    Weight final = Weight::Zero();
  };

  const State &state(StateId s) const;
  State &mutable_state(StateId s);

  std::vector<State> states_;
  StateId start_ = kNoStateId;
};

}  // namespace oovfst

#endif  // OOVFST_FST_H_

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

#include "oovfst/fst.h"

#include <string>

#include "oovfst/error.h"

namespace oovfst {

StateId Fst::AddState() {
  states_.emplace_back();
  return NumStates() - 1;
}

StateId Fst::AddStates(StateId n) {
  StateId first = NumStates();
  states_.resize(states_.size() + n);
  return first;
}

void Fst::SetStart(StateId s) {
  if (s != kNoStateId) state(s);
  start_ = s;
}

void Fst::AddArc(StateId s, const Arc &arc) {
  if (arc.nextstate < 0 || arc.nextstate >= NumStates()) {
    throw Error("arc from state " + std::to_string(s) +
                " points to missing state " + std::to_string(arc.nextstate));
  }
  mutable_state(s).arcs.push_back(arc);
}

size_t Fst::NumArcs() const {
  size_t n = 0;
  for (const auto &st : states_) n += st.arcs.size();
  return n;
}

void Fst::Validate() const {
  if (!states_.empty() && start_ == kNoStateId) {
    throw Error("non-empty FST has no start state");
  }
  for (StateId s = 0; s < NumStates(); ++s) {
    for (const Arc &arc : Arcs(s)) {
      if (arc.nextstate < 0 || arc.nextstate >= NumStates()) {
        throw Error("arc from state " + std::to_string(s) +
                    " points to missing state " +
                    std::to_string(arc.nextstate));
      }
    }
  }
}

const Fst::State &Fst::state(StateId s) const {
  if (s < 0 || s >= NumStates()) {
    throw Error("no such state " + std::to_string(s));
  }
  return states_[s];
}

Fst::State &Fst::mutable_state(StateId s) {
  if (s < 0 || s >= NumStates()) {
    throw Error("no such state " + std::to_string(s));
  }
  return states_[s];
}

}  // namespace oovfst

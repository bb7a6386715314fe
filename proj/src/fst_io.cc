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

#include "oovfst/fst_io.h"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "oovfst/error.h"
#include "oovfst/text_util.h"

namespace oovfst {
namespace {

Label ParseLabel(const std::string &field, const SymbolTable *syms,
                 size_t lineno) {
  if (syms == nullptr) {
    long long v = ParseInt(field, "label on line " + std::to_string(lineno));
    if (v < 0) throw Error("negative label on line " + std::to_string(lineno));
    return static_cast<Label>(v);
  }
  auto label = syms->Find(field);
  if (!label) {
    throw Error("unknown symbol " + field + " on line " +
                std::to_string(lineno));
  }
  return *label;
}

StateId ParseState(const std::string &field, size_t lineno) {
  long long v = ParseInt(field, "state id on line " + std::to_string(lineno));
  if (v < 0) throw Error("negative state id on line " + std::to_string(lineno));
  return static_cast<StateId>(v);
}

void Grow(Fst &fst, StateId s) {
  if (s >= fst.NumStates()) fst.AddStates(s + 1 - fst.NumStates());
}

std::string LabelText(Label label, const SymbolTable *syms) {
  if (syms == nullptr) return std::to_string(label);
  return syms->Symbol(label);
}

}  // namespace

Fst ReadFstText(std::istream &is, const SymbolTable *isyms,
                const SymbolTable *osyms) {
  Fst fst;
  std::string line;
  size_t lineno = 0;
  bool first = true;
  while (std::getline(is, line)) {
    ++lineno;
    auto fields = SplitWhitespace(line);
    if (fields.empty()) continue;
    StateId src = ParseState(fields[0], lineno);
    Grow(fst, src);
    if (first) {
      fst.SetStart(src);
      first = false;
    }
    switch (fields.size()) {
      case 1:
        fst.SetFinal(src, Weight::One());
        break;
      case 2:
        fst.SetFinal(src, Weight(ParseDouble(fields[1], "final weight")));
        break;
      case 4:
      case 5: {
        StateId dst = ParseState(fields[1], lineno);
        Grow(fst, dst);
        Label ilabel = ParseLabel(fields[2], isyms, lineno);
        Label olabel = ParseLabel(fields[3], osyms, lineno);
        double w = fields.size() == 5 ? ParseDouble(fields[4], "arc weight")
                                      : 0.0;
        fst.AddArc(src, Arc(ilabel, olabel, w, dst));
        break;
      }
      default:
        throw Error("malformed FST line " + std::to_string(lineno) + ": '" +
                    line + "'");
    }
  }
  return fst;
}

Fst ReadFstTextFile(const std::string &path, const SymbolTable *isyms,
                    const SymbolTable *osyms) {
  std::ifstream is(path);
  if (!is) throw Error("cannot open FST " + path);
  return ReadFstText(is, isyms, osyms);
}

void WriteFstText(std::ostream &os, const Fst &fst, const SymbolTable *isyms,
                  const SymbolTable *osyms) {
  if (fst.Empty() || fst.Start() == kNoStateId) return;
  auto write_state = [&](StateId s) {
    for (const Arc &arc : fst.Arcs(s)) {
      os << s << '\t' << arc.nextstate << '\t' << LabelText(arc.ilabel, isyms)
         << '\t' << LabelText(arc.olabel, osyms) << '\t'
         << FormatWeight(arc.weight.Value()) << '\n';
    }
    if (fst.IsFinal(s)) {
      os << s << '\t' << FormatWeight(fst.Final(s).Value()) << '\n';
    }
  };
  write_state(fst.Start());
  for (StateId s = 0; s < fst.NumStates(); ++s) {
    if (s != fst.Start()) write_state(s);
  }
}

std::string FstToText(const Fst &fst, const SymbolTable *isyms,
                      const SymbolTable *osyms) {
  std::ostringstream os;
  WriteFstText(os, fst, isyms, osyms);
  return os.str();
}

}  // namespace oovfst

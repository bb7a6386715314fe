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

// AT&T text format, OpenFst compatible:
//   src dst isym osym [weight]     one arc per line
//   state [weight]                 final state
// The source state of the first line is the start state. Fields may be
// separated by tabs or spaces. A null symbol table means labels are written
// and read as integers.

#ifndef OOVFST_FST_IO_H_
#define OOVFST_FST_IO_H_

#include <iosfwd>
#include <string>

#include "oovfst/fst.h"
#include "oovfst/symbol_table.h"

namespace oovfst {

Fst ReadFstText(std::istream &is, const SymbolTable *isyms,
                const SymbolTable *osyms);
Fst ReadFstTextFile(const std::string &path, const SymbolTable *isyms,
                    const SymbolTable *osyms);

// Prints the start state first, then the remaining states in id order.
// Every arc carries its weight with 6 decimals.
void WriteFstText(std::ostream &os, const Fst &fst, const SymbolTable *isyms,
                  const SymbolTable *osyms);
std::string FstToText(const Fst &fst, const SymbolTable *isyms,
                      const SymbolTable *osyms);

}  // namespace oovfst

#endif  // OOVFST_FST_IO_H_

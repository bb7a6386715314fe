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

#ifndef OOVFST_SYMBOL_TABLE_H_
#define OOVFST_SYMBOL_TABLE_H_

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "oovfst/fst.h"

namespace oovfst {

inline constexpr std::string_view kEpsilonSymbol = "<eps>";

// Disambiguation symbols are ordinary symbols whose names start with '#'.
inline bool IsDisambigSymbol(std::string_view name) {
  return !name.empty() && name.front() == '#';
}

// Bijective string <-> label map. Label 0 is always "<eps>".
class SymbolTable {
 public:
  SymbolTable();

  // Returns the existing label for `symbol`, or interns it with the next
  // free label.
  Label AddSymbol(std::string_view symbol);
  // Interns `symbol` at `label`; throws if either side is already bound to
  // something else.
  void AddSymbol(std::string_view symbol, Label label);

  std::optional<Label> Find(std::string_view symbol) const;
  const std::string *Find(Label label) const;
  bool Contains(std::string_view symbol) const {
    return Find(symbol).has_value();
  }

  // Throwing lookups.
  Label Lookup(std::string_view symbol) const;
  const std::string &Symbol(Label label) const;

  bool IsDisambig(Label label) const;

  size_t NumSymbols() const { return by_label_.size(); }
  Label AvailableKey() const;
  std::vector<Label> Labels() const;

  // "symbol<TAB>id" per line. Must contain "<eps>\t0".
  static SymbolTable ReadText(std::istream &is);
  static SymbolTable ReadTextFile(const std::string &path);
  void WriteText(std::ostream &os) const;

  friend bool operator==(const SymbolTable &a, const SymbolTable &b) {
    return a.by_label_ == b.by_label_;
  }

 private:
  std::map<std::string, Label, std::less<>> by_symbol_;
  std::map<Label, std::string> by_label_;
};

}  // namespace oovfst

#endif  // OOVFST_SYMBOL_TABLE_H_

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

#include "oovfst/symbol_table.h"

#include <fstream>
#include <istream>
#include <ostream>

#include "oovfst/error.h"
#include "oovfst/text_util.h"

namespace oovfst {

SymbolTable::SymbolTable() {
  by_symbol_.emplace(std::string(kEpsilonSymbol), kEpsilon);
  by_label_.emplace(kEpsilon, std::string(kEpsilonSymbol));
}

Label SymbolTable::AddSymbol(std::string_view symbol) {
  if (auto found = Find(symbol)) return *found;
  Label label = AvailableKey();
  by_symbol_.emplace(std::string(symbol), label);
  by_label_.emplace(label, std::string(symbol));
  return label;
}

void SymbolTable::AddSymbol(std::string_view symbol, Label label) {
  if (label < 0) {
    throw Error("negative label for symbol " + std::string(symbol));
  }
  auto by_sym = Find(symbol);
  const std::string *by_lab = Find(label);
  if (by_sym && *by_sym == label) return;
  if (by_sym) {
    throw Error("symbol " + std::string(symbol) + " already has id " +
                std::to_string(*by_sym));
  }
  if (by_lab) {
    throw Error("id " + std::to_string(label) + " already bound to " +
                *by_lab);
  }
  by_symbol_.emplace(std::string(symbol), label);
  by_label_.emplace(label, std::string(symbol));
}

std::optional<Label> SymbolTable::Find(std::string_view symbol) const {
  auto it = by_symbol_.find(symbol);
  if (it == by_symbol_.end()) return std::nullopt;
  return it->second;
}

const std::string *SymbolTable::Find(Label label) const {
  auto it = by_label_.find(label);
  return it == by_label_.end() ? nullptr : &it->second;
}

Label SymbolTable::Lookup(std::string_view symbol) const {
  auto found = Find(symbol);
  if (!found) throw Error("unknown symbol " + std::string(symbol));
  return *found;
}

const std::string &SymbolTable::Symbol(Label label) const {
  const std::string *sym = Find(label);
  if (!sym) throw Error("unmapped label id " + std::to_string(label));
  return *sym;
}

bool SymbolTable::IsDisambig(Label label) const {
  const std::string *sym = Find(label);
  return sym && IsDisambigSymbol(*sym);
}

Label SymbolTable::AvailableKey() const {
  return by_label_.empty() ? 0 : by_label_.rbegin()->first + 1;
}

std::vector<Label> SymbolTable::Labels() const {
  std::vector<Label> out;
  out.reserve(by_label_.size());
  for (const auto &[label, sym] : by_label_) out.push_back(label);
  return out;
}

SymbolTable SymbolTable::ReadText(std::istream &is) {
  SymbolTable table;
  std::string line;
  size_t lineno = 0;
  bool saw_eps = false;
  while (std::getline(is, line)) {
    ++lineno;
    auto fields = SplitWhitespace(line);
    if (fields.empty()) continue;
    if (fields.size() != 2) {
      throw Error("symbol table line " + std::to_string(lineno) +
                  ": expected 'symbol id'");
    }
    Label label = static_cast<Label>(ParseInt(fields[1], "symbol id"));
    if (fields[0] == kEpsilonSymbol) {
      if (label != kEpsilon) throw Error("<eps> must have id 0");
      saw_eps = true;
      continue;
    }
    table.AddSymbol(fields[0], label);
  }
  if (!saw_eps) throw Error("symbol table lacks '<eps> 0'");
  return table;
}

SymbolTable SymbolTable::ReadTextFile(const std::string &path) {
  std::ifstream is(path);
  if (!is) throw Error("cannot open symbol table " + path);
  return ReadText(is);
}

void SymbolTable::WriteText(std::ostream &os) const {
  for (const auto &[label, sym] : by_label_) os << sym << '\t' << label << '\n';
}

}  // namespace oovfst

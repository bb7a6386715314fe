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

#include "oovfst/arpa.h"

#include <cmath>
#include <fstream>
#include <istream>
#include <numbers>

#include "oovfst/error.h"
#include "oovfst/text_util.h"

namespace oovfst {

const NGram *ArpaModel::Find(const std::vector<std::string> &tokens) const {
  auto it = index_.find(tokens);
  if (it == index_.end()) return nullptr;
  return &ngrams_[it->second.first][it->second.second];
}

void ArpaModel::SetOrder(int order) {
  if (order < 1) throw Error("ARPA order must be >= 1");
  ngrams_.resize(order);
}

void ArpaModel::AddNGram(NGram ngram) {
  int k = static_cast<int>(ngram.tokens.size());
  if (k < 1 || k > order()) {
    throw Error("n-gram of order " + std::to_string(k) +
                " outside model order " + std::to_string(order()));
  }
  auto [it, inserted] = index_.emplace(
      ngram.tokens, std::make_pair(k - 1, ngrams_[k - 1].size()));
  if (!inserted) throw Error("duplicate n-gram: " + Join(ngram.tokens, " "));
  ngrams_[k - 1].push_back(std::move(ngram));
}

double Log10ToCost(double log10_value) {
  double cost = -log10_value * std::numbers::ln10;
  if (std::fabs(cost) < 1e-12) cost = 0.0;
  return cost;
}

ArpaModel ParseArpa(std::istream &is) {
  std::string raw;
  size_t lineno = 0;
  auto next_line = [&](std::string *out) {
    while (std::getline(is, raw)) {
      ++lineno;
      std::string_view t = Trim(raw);
      if (t.empty()) continue;
      *out = std::string(t);
      return true;
    }
    return false;
  };
  auto fail = [&](const std::string &msg) -> Error {
    return Error("ARPA line " + std::to_string(lineno) + ": " + msg);
  };

  std::string line;
  // Anything before \data\ is free-form commentary.
  bool found_data = false;
  while (next_line(&line)) {
    if (line == "\\data\\") {
      found_data = true;
      break;
    }
  }
  if (!found_data) throw Error("ARPA file has no \\data\\ section");

  std::vector<long long> declared;
  bool have_line = false;
  while (next_line(&line)) {
    if (line.rfind("ngram ", 0) != 0) {
      have_line = true;
      break;
    }
    auto eq = line.find('=');
    if (eq == std::string::npos) throw fail("malformed count line");
    long long k = ParseInt(Trim(line.substr(6, eq - 6)), "n-gram order");
    long long n = ParseInt(Trim(line.substr(eq + 1)), "n-gram count");
    if (k != static_cast<long long>(declared.size()) + 1) {
      throw fail("n-gram counts out of order");
    }
    declared.push_back(n);
  }
  if (declared.empty()) throw Error("ARPA header declares no n-gram counts");

  ArpaModel model;
  model.SetOrder(static_cast<int>(declared.size()));
  bool ended = false;
  while (have_line || next_line(&line)) {
    have_line = false;
    if (line == "\\end\\") {
      ended = true;
      break;
    }
    if (line.size() < 9 || line.front() != '\\' ||
        line.substr(line.size() - 7) != "-grams:") {
      throw fail("expected a \\k-grams: section header, got '" + line + "'");
    }
    int k = static_cast<int>(
        ParseInt(line.substr(1, line.size() - 8), "section order"));
    if (k < 1 || k > model.order()) throw fail("unexpected section order");
    while (next_line(&line)) {
      if (line.front() == '\\') {
        have_line = true;
        break;
      }
      auto fields = SplitWhitespace(line);
      if (fields.size() != static_cast<size_t>(k) + 1 &&
          fields.size() != static_cast<size_t>(k) + 2) {
        throw fail("malformed " + std::to_string(k) + "-gram line");
      }
      NGram ng;
      ng.logprob10 = ParseDouble(fields[0], "log-probability");
      ng.tokens.assign(fields.begin() + 1, fields.begin() + 1 + k);
      if (fields.size() == static_cast<size_t>(k) + 2) {
        ng.backoff10 = ParseDouble(fields.back(), "backoff weight");
      }
      model.AddNGram(std::move(ng));
    }
    if (!have_line) break;
  }
  if (!ended) throw Error("ARPA file is missing \\end\\");

  for (int k = 1; k <= model.order(); ++k) {
    long long actual = static_cast<long long>(model.ngrams(k).size());
    if (actual != declared[k - 1]) {
      throw Error("ARPA header declares " + std::to_string(declared[k - 1]) +
                  " " + std::to_string(k) + "-grams but the file has " +
                  std::to_string(actual));
    }
  }
  for (int k = 2; k <= model.order(); ++k) {
    for (const NGram &ng : model.ngrams(k)) {
      std::vector<std::string> hist(ng.tokens.begin(), ng.tokens.end() - 1);
      if (model.Find(hist) == nullptr) {
        throw Error("dangling history: " + Join(ng.tokens, " ") +
                    " has no stored " + std::to_string(k - 1) + "-gram " +
                    Join(hist, " "));
      }
    }
  }
  return model;
}

ArpaModel ParseArpaFile(const std::string &path) {
  std::ifstream is(path);
  if (!is) throw Error("cannot open ARPA file " + path);
  return ParseArpa(is);
}

}  // namespace oovfst

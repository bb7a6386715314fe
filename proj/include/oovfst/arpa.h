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

#ifndef OOVFST_ARPA_H_
#define OOVFST_ARPA_H_

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace oovfst {

inline constexpr char kBosSymbol[] = "<s>";
inline constexpr char kEosSymbol[] = "</s>";

struct NGram {
  std::vector<std::string> tokens;
  double logprob10 = 0.0;
  std::optional<double> backoff10;
};

// A backoff n-gram model as stored in an ARPA file (base-10 logs).
class ArpaModel {
 public:
  int order() const { return static_cast<int>(ngrams_.size()); }
  // k-grams, 1 <= k <= order(), in file order.
  const std::vector<NGram> &ngrams(int k) const { return ngrams_.at(k - 1); }
  const NGram *Find(const std::vector<std::string> &tokens) const;

  // Used by the parser; keeps the lookup index in sync.
  void SetOrder(int order);
  void AddNGram(NGram ngram);

 private:
  std::vector<std::vector<NGram>> ngrams_;
  std::map<std::vector<std::string>, std::pair<int, size_t>> index_;
};

// Reads \data\, the "ngram k=N" counts, every \k-grams: section and \end\.
// Throws on count mismatches, malformed lines, duplicate n-grams and n-grams
// whose history is not itself stored.
ArpaModel ParseArpa(std::istream &is);
ArpaModel ParseArpaFile(const std::string &path);

// -logprob10 * ln 10, with |x| < 1e-12 folded to 0.
double Log10ToCost(double log10_value);

}  // namespace oovfst

#endif  // OOVFST_ARPA_H_

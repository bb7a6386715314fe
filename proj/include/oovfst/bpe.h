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

// Byte-pair encoding over UTF-8 characters.
//
// Merges are learned on bare character sequences. The word-final token of a
// tokenized word carries a suffix marker ("</w>" by default), so "firefox"
// becomes {"fire", "fox</w>"} and a subword stream can be split back into
// words.

#ifndef OOVFST_BPE_H_
#define OOVFST_BPE_H_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "oovfst/lexicon.h"

namespace oovfst {

inline constexpr std::string_view kDefaultWordEndMarker = "</w>";
inline constexpr int kDefaultNumMerges = 5000;

using MergePair = std::pair<std::string, std::string>;

class BpeModel {
 public:
  BpeModel() : BpeModel({}, std::string(kDefaultWordEndMarker)) {}
  explicit BpeModel(std::vector<MergePair> merges,
                    std::string marker = std::string(kDefaultWordEndMarker));

  const std::vector<MergePair> &merges() const { return merges_; }
  const std::string &marker() const { return marker_; }

  // Applies merges in priority order until none applies. Throws on an empty
  // word.
  std::vector<std::string> Tokenize(std::string_view word) const;

  // Inverse of Tokenize for one word.
  std::string DetokenizeWord(const std::vector<std::string> &tokens) const;
  // Joins a token stream into space-separated words, ending a word at every
  // token that carries the marker.
  std::string Detokenize(const std::vector<std::string> &tokens) const;

  // Header line "#bpe style=suffix marker=<m>" then "left right" per line.
  void Write(std::ostream &os) const;
  static BpeModel Read(std::istream &is);
  static BpeModel ReadFile(const std::string &path);

 private:
  std::vector<MergePair> merges_;
  std::string marker_;
  std::map<MergePair, int> rank_;
};

using WordCounts = std::map<std::string, int64_t>;

// Greedy BPE: repeatedly merges the most frequent adjacent pair (ties go to
// the lexicographically smallest (left, right)). Stops after `num_merges`
// merges or when no pair occurs at least twice.
BpeModel TrainBpe(const WordCounts &corpus, int num_merges,
                  std::string marker = std::string(kDefaultWordEndMarker));

// Whitespace-tokenized running text.
WordCounts CountWords(std::istream &is);
// "word<TAB>count" lines.
WordCounts ReadWordCounts(std::istream &is);

// Character pronunciation for each subword token (the marker is dropped):
// "fox</w>" -> f o x.
Lexicon CharacterLexicon(const std::vector<std::string> &tokens,
                         std::string_view marker = kDefaultWordEndMarker);

}  // namespace oovfst

#endif  // OOVFST_BPE_H_

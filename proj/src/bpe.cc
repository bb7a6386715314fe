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

#include "oovfst/bpe.h"

#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <set>
#include <tuple>
#include <unordered_set>

#include "oovfst/error.h"
#include "oovfst/text_util.h"

namespace oovfst {
namespace {

constexpr std::string_view kHeaderPrefix = "#bpe style=suffix marker=";

// Merges every non-overlapping (left, right) occurrence, scanning left to
// right. Returns true if anything changed.
bool MergeInPlace(std::vector<std::string> *syms, const MergePair &pair) {
  bool changed = false;
  std::vector<std::string> out;
  out.reserve(syms->size());
  for (size_t i = 0; i < syms->size(); ++i) {
    if (i + 1 < syms->size() && (*syms)[i] == pair.first &&
        (*syms)[i + 1] == pair.second) {
      out.push_back(pair.first + pair.second);
      ++i;
      changed = true;
    } else {
      out.push_back(std::move((*syms)[i]));
    }
  }
  *syms = std::move(out);
  return changed;
}

}  // namespace

BpeModel::BpeModel(std::vector<MergePair> merges, std::string marker)
    : merges_(std::move(merges)), marker_(std::move(marker)) {
  if (marker_.empty()) throw Error("BPE word-end marker must not be empty");
  for (size_t i = 0; i < merges_.size(); ++i) {
    if (!rank_.emplace(merges_[i], static_cast<int>(i)).second) {
      throw Error("duplicate BPE merge " + merges_[i].first + " " +
                  merges_[i].second);
    }
  }
}

std::vector<std::string> BpeModel::Tokenize(std::string_view word) const {
  if (word.empty()) throw Error("cannot tokenize an empty word");
  std::vector<std::string> syms = Utf8Chars(word);
  while (syms.size() > 1) {
    int best = std::numeric_limits<int>::max();
    const MergePair *best_pair = nullptr;
    for (size_t i = 0; i + 1 < syms.size(); ++i) {
      auto it = rank_.find(MergePair(syms[i], syms[i + 1]));
      if (it != rank_.end() && it->second < best) {
        best = it->second;
        best_pair = &it->first;
      }
    }
    if (best_pair == nullptr) break;
    MergeInPlace(&syms, *best_pair);
  }
  syms.back() += marker_;
  return syms;
}

std::string BpeModel::DetokenizeWord(
    const std::vector<std::string> &tokens) const {
  std::string out;
  for (const auto &t : tokens) out += t;
  if (out.size() >= marker_.size() &&
      out.compare(out.size() - marker_.size(), marker_.size(), marker_) == 0) {
    out.resize(out.size() - marker_.size());
  }
  return out;
}

std::string BpeModel::Detokenize(const std::vector<std::string> &tokens) const {
  std::string out;
  bool word_open = false;
  for (const auto &t : tokens) {
    if (!word_open && !out.empty()) out += ' ';
    bool ends = t.size() >= marker_.size() &&
                t.compare(t.size() - marker_.size(), marker_.size(), marker_) ==
                    0;
    out += ends ? t.substr(0, t.size() - marker_.size()) : t;
    word_open = !ends;
  }
  return out;
}

void BpeModel::Write(std::ostream &os) const {
  os << kHeaderPrefix << marker_ << '\n';
  for (const auto &[l, r] : merges_) os << l << ' ' << r << '\n';
}

BpeModel BpeModel::Read(std::istream &is) {
  std::string line;
  if (!std::getline(is, line) || line.rfind(kHeaderPrefix, 0) != 0) {
    throw Error("BPE model lacks the '" + std::string(kHeaderPrefix) +
                "...' header (wrong file or boundary convention)");
  }
  std::string marker = line.substr(kHeaderPrefix.size());
  std::vector<MergePair> merges;
  size_t lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    auto fields = SplitWhitespace(line);
    if (fields.empty()) continue;
    if (fields.size() != 2) {
      throw Error("BPE model line " + std::to_string(lineno) +
                  ": expected 'left right'");
    }
    merges.emplace_back(fields[0], fields[1]);
  }
  return BpeModel(std::move(merges), std::move(marker));
}

BpeModel BpeModel::ReadFile(const std::string &path) {
  std::ifstream is(path);
  if (!is) throw Error("cannot open BPE model " + path);
  return Read(is);
}

BpeModel TrainBpe(const WordCounts &corpus, int num_merges,
                  std::string marker) {
  if (num_merges < 0) throw Error("number of merges must be >= 0");
  struct Entry {
    std::vector<std::string> syms;
    int64_t count;
  };
  std::vector<Entry> words;
  for (const auto &[w, c] : corpus) {
    if (w.empty() || c <= 0) continue;
    words.push_back({Utf8Chars(w), c});
  }

  std::map<MergePair, int64_t> counts;
  // Ordered by (-count, left, right): begin() is the next merge.
  std::set<std::tuple<int64_t, std::string, std::string>> ranked;
  std::map<MergePair, std::unordered_set<size_t>> where;

  auto bump = [&](const MergePair &p, int64_t delta) {
    int64_t &c = counts[p];
    if (c > 0) ranked.erase({-c, p.first, p.second});
    c += delta;
    if (c > 0) {
      ranked.insert({-c, p.first, p.second});
    } else {
      counts.erase(p);
    }
  };
  auto contribute = [&](size_t idx, int64_t sign) {
    const Entry &e = words[idx];
    for (size_t i = 0; i + 1 < e.syms.size(); ++i) {
      MergePair p(e.syms[i], e.syms[i + 1]);
      bump(p, sign * e.count);
      if (sign > 0) where[p].insert(idx);
    }
  };
  for (size_t i = 0; i < words.size(); ++i) contribute(i, +1);

  std::vector<MergePair> merges;
  while (static_cast<int>(merges.size()) < num_merges && !ranked.empty()) {
    const auto &[neg, left, right] = *ranked.begin();
    if (-neg < 2) break;
    MergePair best(left, right);
    std::vector<size_t> affected(where[best].begin(), where[best].end());
    std::sort(affected.begin(), affected.end());
    for (size_t idx : affected) {
      // Stale entries are harmless: MergeInPlace is a no-op for them.
      contribute(idx, -1);
      MergeInPlace(&words[idx].syms, best);
      contribute(idx, +1);
    }
    where.erase(best);
    merges.push_back(std::move(best));
  }
  return BpeModel(std::move(merges), std::move(marker));
}

WordCounts CountWords(std::istream &is) {
  WordCounts counts;
  std::string line;
  while (std::getline(is, line)) {
    for (auto &w : SplitWhitespace(line)) ++counts[w];
  }
  return counts;
}

WordCounts ReadWordCounts(std::istream &is) {
  WordCounts counts;
  std::string line;
  size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    auto fields = SplitWhitespace(line);
    if (fields.empty()) continue;
    if (fields.size() != 2) {
      throw Error("word-count line " + std::to_string(lineno) +
                  ": expected 'word<TAB>count'");
    }
    counts[fields[0]] += ParseInt(fields[1], "word count");
  }
  return counts;
}

Lexicon CharacterLexicon(const std::vector<std::string> &tokens,
                         std::string_view marker) {
  Lexicon lex;
  std::set<std::string> seen;
  for (const auto &t : tokens) {
    if (!seen.insert(t).second) continue;
    std::string_view body = t;
    if (body.size() > marker.size() &&
        body.substr(body.size() - marker.size()) == marker) {
      body.remove_suffix(marker.size());
    }
    lex.Add(t, Utf8Chars(body));
  }
  return lex;
}

}  // namespace oovfst

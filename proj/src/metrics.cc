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

#include "oovfst/metrics.h"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <ostream>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "oovfst/error.h"
#include "oovfst/text_util.h"

namespace oovfst {
namespace {

int64_t Levenshtein(const std::u32string &a, const std::u32string &b) {
  std::vector<int64_t> row(b.size() + 1);
  for (size_t j = 0; j <= b.size(); ++j) row[j] = static_cast<int64_t>(j);
  for (size_t i = 1; i <= a.size(); ++i) {
    int64_t diag = row[0];
    row[0] = static_cast<int64_t>(i);
    for (size_t j = 1; j <= b.size(); ++j) {
      int64_t up = row[j];
      row[j] = std::min({up + 1, row[j - 1] + 1,
                         diag + (a[i - 1] == b[j - 1] ? 0 : 1)});
      diag = up;
    }
  }
  return row[b.size()];
}

std::u32string Concat(const std::vector<std::string> &words) {
  std::u32string out;
  for (const auto &w : words) out += DecodeUtf8(w);
  return out;
}

}  // namespace

int64_t CharEditDistance(std::string_view a, std::string_view b) {
  return Levenshtein(DecodeUtf8(a), DecodeUtf8(b));
}

int64_t CharLength(std::string_view s) {
  return static_cast<int64_t>(DecodeUtf8(s).size());
}

std::string_view EditKindName(EditKind kind) {
  switch (kind) {
    case EditKind::kMatch:
      return "match";
    case EditKind::kSubstitution:
      return "substitution";
    case EditKind::kInsertion:
      return "insertion";
    case EditKind::kDeletion:
      return "deletion";
  }
  return "?";
}

AlignmentCost CostOf(const std::vector<AlignedPair> &alignment) {
  AlignmentCost c;
  for (const auto &p : alignment) {
    if (p.kind == EditKind::kMatch) continue;
    ++c.word_errors;
    if (p.kind == EditKind::kSubstitution) {
      c.sub_char_distance += CharEditDistance(*p.ref, *p.hyp);
    }
  }
  return c;
}

std::vector<AlignedPair> Align(const std::vector<std::string> &ref,
                               const std::vector<std::string> &hyp) {
  const size_t n = ref.size(), m = hyp.size();
  std::vector<std::u32string> ref32, hyp32;
  for (const auto &w : ref) ref32.push_back(DecodeUtf8(w));
  for (const auto &w : hyp) hyp32.push_back(DecodeUtf8(w));

  auto sub_cost = [&](size_t i, size_t j) {
    if (ref[i] == hyp[j]) return AlignmentCost{0, 0};
    return AlignmentCost{1, Levenshtein(ref32[i], hyp32[j])};
  };
  auto plus = [](AlignmentCost a, AlignmentCost b) {
    return AlignmentCost{a.word_errors + b.word_errors,
                         a.sub_char_distance + b.sub_char_distance};
  };
  const AlignmentCost kGap{1, 0};

  std::vector<std::vector<AlignmentCost>> d(n + 1,
                                            std::vector<AlignmentCost>(m + 1));
  for (size_t i = 1; i <= n; ++i) d[i][0] = plus(d[i - 1][0], kGap);
  for (size_t j = 1; j <= m; ++j) d[0][j] = plus(d[0][j - 1], kGap);
  for (size_t i = 1; i <= n; ++i) {
    for (size_t j = 1; j <= m; ++j) {
      d[i][j] = std::min({plus(d[i - 1][j - 1], sub_cost(i - 1, j - 1)),
                          plus(d[i - 1][j], kGap), plus(d[i][j - 1], kGap)});
    }
  }

  // Among equally cheap alignments, take gaps as late as possible so that
  // words pair up left to right.
  std::vector<AlignedPair> out;
  size_t i = n, j = m;
  while (i > 0 || j > 0) {
    if (j > 0 && d[i][j] == plus(d[i][j - 1], kGap)) {
      out.push_back({std::nullopt, hyp[j - 1], EditKind::kInsertion});
      --j;
    } else if (i > 0 && d[i][j] == plus(d[i - 1][j], kGap)) {
      out.push_back({ref[i - 1], std::nullopt, EditKind::kDeletion});
      --i;
    } else {
      EditKind kind = ref[i - 1] == hyp[j - 1] ? EditKind::kMatch
                                               : EditKind::kSubstitution;
      out.push_back({ref[i - 1], hyp[j - 1], kind});
      --i;
      --j;
    }
  }
  std::reverse(out.begin(), out.end());
  return out;
}

ErrorCounts &ErrorCounts::operator+=(const ErrorCounts &o) {
  substitutions += o.substitutions;
  insertions += o.insertions;
  deletions += o.deletions;
  ref_words += o.ref_words;
  char_edits += o.char_edits;
  ref_chars += o.ref_chars;
  oov_char_edits += o.oov_char_edits;
  oov_ref_chars += o.oov_ref_chars;
  oov_occurrences += o.oov_occurrences;
  return *this;
}

namespace {

std::optional<double> Ratio(int64_t num, int64_t den) {
  if (den == 0) return std::nullopt;
  return static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

std::optional<double> ErrorCounts::Wer() const {
  return Ratio(WordErrors(), ref_words);
}

std::optional<double> ErrorCounts::Cer() const {
  return Ratio(char_edits, ref_chars);
}

std::optional<double> ErrorCounts::OovCer() const {
  if (oov_occurrences == 0) return std::nullopt;
  return Ratio(oov_char_edits, oov_ref_chars);
}

ErrorReport Score(const std::vector<std::string> &ref,
                  const std::vector<std::string> &hyp,
                  const std::set<std::string, std::less<>> &oov_words) {
  ErrorReport r;
  r.alignment = Align(ref, hyp);
  ErrorCounts &c = r.counts;
  c.ref_words = static_cast<int64_t>(ref.size());
  for (const auto &p : r.alignment) {
    switch (p.kind) {
      case EditKind::kSubstitution:
        ++c.substitutions;
        break;
      case EditKind::kInsertion:
        ++c.insertions;
        break;
      case EditKind::kDeletion:
        ++c.deletions;
        break;
      case EditKind::kMatch:
        break;
    }
  }
  std::u32string ref_chars = Concat(ref);
  c.ref_chars = static_cast<int64_t>(ref_chars.size());
  c.char_edits = Levenshtein(ref_chars, Concat(hyp));

  const auto &al = r.alignment;
  std::vector<bool> used(al.size(), false);
  for (size_t k = 0; k < al.size(); ++k) {
    if (!al[k].ref || !oov_words.count(*al[k].ref)) continue;
    size_t lo = k;
    while (lo > 0 && al[lo - 1].kind == EditKind::kInsertion && !used[lo - 1]) {
      --lo;
    }
    size_t hi = k + 1;
    while (hi < al.size() && al[hi].kind == EditKind::kInsertion &&
           !used[hi]) {
      ++hi;
    }
    OovScore s;
    s.ref_word = *al[k].ref;
    for (size_t t = lo; t < hi; ++t) {
      if (al[t].hyp) s.candidate += *al[t].hyp;
      if (t != k) used[t] = true;
    }
    s.char_edits = CharEditDistance(s.ref_word, s.candidate);
    c.oov_char_edits += s.char_edits;
    c.oov_ref_chars += CharLength(s.ref_word);
    ++c.oov_occurrences;
    r.per_oov.push_back(std::move(s));
  }
  return r;
}

std::vector<std::pair<std::string, std::vector<std::string>>> ReadTranscripts(
    std::istream &is) {
  std::vector<std::pair<std::string, std::vector<std::string>>> out;
  std::set<std::string> ids;
  std::string line;
  size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (Trim(line).empty()) continue;
    std::string id;
    std::string text;
    if (auto tab = line.find('\t'); tab != std::string::npos) {
      id = std::string(Trim(line.substr(0, tab)));
      text = line.substr(tab + 1);
    } else {
      auto fields = SplitWhitespace(line);
      id = fields[0];
      text = line.substr(line.find(id) + id.size());
    }
    if (id.empty()) {
      throw Error("transcript line " + std::to_string(lineno) +
                  ": missing utterance id");
    }
    if (!ids.insert(id).second) {
      throw Error("transcript line " + std::to_string(lineno) +
                  ": repeated utterance id " + id);
    }
    out.emplace_back(id, SplitWhitespace(text));
  }
  return out;
}

CorpusReport ScoreCorpus(
    const std::vector<std::pair<std::string, std::vector<std::string>>> &refs,
    const std::vector<std::pair<std::string, std::vector<std::string>>> &hyps,
    const std::set<std::string, std::less<>> &oov_words) {
  std::unordered_map<std::string, const std::vector<std::string> *> by_id;
  for (const auto &[id, words] : hyps) by_id.emplace(id, &words);
  std::set<std::string> ref_ids;
  for (const auto &[id, words] : refs) ref_ids.insert(id);
  for (const auto &[id, words] : hyps) {
    if (!ref_ids.count(id)) {
      throw Error("hypothesis " + id + " has no reference");
    }
  }
  CorpusReport report;
  const std::vector<std::string> empty;
  for (const auto &[id, words] : refs) {
    auto it = by_id.find(id);
    const auto &hyp = it == by_id.end() ? empty : *it->second;
    UtteranceScore u{id, Score(words, hyp, oov_words)};
    report.totals += u.report.counts;
    report.utterances.push_back(std::move(u));
  }
  return report;
}

namespace {

nlohmann::json Rate(std::optional<double> v) {
  if (!v) return nullptr;
  return *v;
}

nlohmann::json Word(const std::optional<std::string> &w) {
  if (!w) return nullptr;
  return *w;
}

nlohmann::json CountsToJson(const ErrorCounts &c) {
  return {{"wer", Rate(c.Wer())},
          {"cer", Rate(c.Cer())},
          {"oov_cer", Rate(c.OovCer())},
          {"substitutions", c.substitutions},
          {"insertions", c.insertions},
          {"deletions", c.deletions},
          {"ref_words", c.ref_words},
          {"char_edits", c.char_edits},
          {"ref_chars", c.ref_chars},
          {"oov_char_edits", c.oov_char_edits},
          {"oov_ref_chars", c.oov_ref_chars},
          {"oov_occurrences", c.oov_occurrences}};
}

}  // namespace

std::string CorpusReportToJson(const CorpusReport &report) {
  nlohmann::json j = CountsToJson(report.totals);
  nlohmann::json utts = nlohmann::json::array();
  for (const auto &u : report.utterances) {
    nlohmann::json ju = CountsToJson(u.report.counts);
    ju["utt_id"] = u.utt_id;
    nlohmann::json align = nlohmann::json::array();
    for (const auto &p : u.report.alignment) {
      align.push_back({{"ref", Word(p.ref)},
                       {"hyp", Word(p.hyp)},
                       {"kind", std::string(EditKindName(p.kind))}});
    }
    ju["alignment"] = std::move(align);
    nlohmann::json oovs = nlohmann::json::array();
    for (const auto &o : u.report.per_oov) {
      oovs.push_back({{"ref_word", o.ref_word},
                      {"candidate", o.candidate},
                      {"char_edits", o.char_edits}});
    }
    ju["per_oov"] = std::move(oovs);
    utts.push_back(std::move(ju));
  }
  j["utterances"] = std::move(utts);
  return j.dump(2);
}

void WriteCorpusSummary(std::ostream &os, const CorpusReport &report) {
  auto fmt = [](std::optional<double> v) {
    if (!v) return std::string("n/a");
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f%%", 100.0 * *v);
    return std::string(buf);
  };
  const ErrorCounts &c = report.totals;
  os << "utterances: " << report.utterances.size() << '\n'
     << "WER: " << fmt(c.Wer()) << " (S=" << c.substitutions
     << " I=" << c.insertions << " D=" << c.deletions
     << " N=" << c.ref_words << ")\n"
     << "CER: " << fmt(c.Cer()) << " (" << c.char_edits << "/" << c.ref_chars
     << ")\n"
     << "OOV-CER: " << fmt(c.OovCer()) << " (" << c.oov_char_edits << "/"
     << c.oov_ref_chars << ", " << c.oov_occurrences << " occurrences)\n";
}

}  // namespace oovfst

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

// Character-aware word alignment and the WER / CER / OOV-CER scores.
//
// Tokens are compared verbatim; normalization is up to the caller. Character
// counts are UTF-8 code points and never include word separators.

#ifndef OOVFST_METRICS_H_
#define OOVFST_METRICS_H_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace oovfst {

// Levenshtein distance over code points, unit costs.
int64_t CharEditDistance(std::string_view a, std::string_view b);
int64_t CharLength(std::string_view s);

enum class EditKind { kMatch, kSubstitution, kInsertion, kDeletion };
std::string_view EditKindName(EditKind kind);

struct AlignedPair {
  std::optional<std::string> ref;  // nullopt is a gap
  std::optional<std::string> hyp;
  EditKind kind = EditKind::kMatch;
};

// Cost of an alignment: word errors first, then the summed character
// distance of substituted pairs.
struct AlignmentCost {
  int64_t word_errors = 0;
  int64_t sub_char_distance = 0;

  friend auto operator<=>(const AlignmentCost &, const AlignmentCost &) =
      default;
};

AlignmentCost CostOf(const std::vector<AlignedPair> &alignment);

// Minimum-cost alignment. Ties are broken by preferring, from the end of
// both sequences backwards, a diagonal step over a deletion over an
// insertion.
std::vector<AlignedPair> Align(const std::vector<std::string> &ref,
                               const std::vector<std::string> &hyp);

struct OovScore {
  std::string ref_word;
  std::string candidate;  // aligned hyp word plus merged insertions
  int64_t char_edits = 0;
};

struct ErrorCounts {
  int64_t substitutions = 0;
  int64_t insertions = 0;
  int64_t deletions = 0;
  int64_t ref_words = 0;
  int64_t char_edits = 0;
  int64_t ref_chars = 0;
  int64_t oov_char_edits = 0;
  int64_t oov_ref_chars = 0;
  int64_t oov_occurrences = 0;

  ErrorCounts &operator+=(const ErrorCounts &o);
  int64_t WordErrors() const { return substitutions + insertions + deletions; }
  // Rates are absent when their denominator is zero.
  std::optional<double> Wer() const;
  std::optional<double> Cer() const;
  std::optional<double> OovCer() const;
};

struct ErrorReport {
  ErrorCounts counts;
  std::vector<AlignedPair> alignment;
  std::vector<OovScore> per_oov;

  std::optional<double> wer() const { return counts.Wer(); }
  std::optional<double> cer() const { return counts.Cer(); }
  std::optional<double> oov_cer() const { return counts.OovCer(); }
};

// Scores one utterance. Every reference occurrence of an OOV word is scored
// against its aligned hyp word with the insertions directly before it
// prepended and those directly after it appended; each insertion is merged
// into at most one OOV word, scanning left to right.
ErrorReport Score(const std::vector<std::string> &ref,
                  const std::vector<std::string> &hyp,
                  const std::set<std::string, std::less<>> &oov_words);

struct UtteranceScore {
  std::string utt_id;
  ErrorReport report;
};

struct CorpusReport {
  ErrorCounts totals;
  std::vector<UtteranceScore> utterances;  // in reference order
};

// "utt_id<TAB>transcript" per line; ids must be unique.
std::vector<std::pair<std::string, std::vector<std::string>>> ReadTranscripts(
    std::istream &is);

// Joins on utterance id. A reference without a hypothesis is scored
// against an empty one; a hypothesis without a reference is an error.
CorpusReport ScoreCorpus(
    const std::vector<std::pair<std::string, std::vector<std::string>>> &refs,
    const std::vector<std::pair<std::string, std::vector<std::string>>> &hyps,
    const std::set<std::string, std::less<>> &oov_words);

// Totals, rates (null when undefined) and per-utterance detail.
std::string CorpusReportToJson(const CorpusReport &report);
// Short human-readable summary.
void WriteCorpusSummary(std::ostream &os, const CorpusReport &report);

}  // namespace oovfst

#endif  // OOVFST_METRICS_H_

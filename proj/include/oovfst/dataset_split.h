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

// High-OOV train/test splits. Test gets every utterance with a word outside
// the vocabulary; train gets the rest, minus utterances by test speakers.

#ifndef OOVFST_DATASET_SPLIT_H_
#define OOVFST_DATASET_SPLIT_H_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace oovfst {

struct Utterance {
  std::string id;
  std::string speaker;
  std::optional<double> duration;  // seconds
  std::vector<std::string> words;

  friend bool operator==(const Utterance &, const Utterance &) = default;
};

// Lowercases ASCII and Latin-1 letters and strips punctuation from both ends
// of every token; tokens left empty are dropped. Inner punctuation such as
// the apostrophe in "don't" is kept.
std::vector<std::string> NormalizeTranscript(std::string_view text);
std::string NormalizeWord(std::string_view word);

// "utt_id<TAB>speaker_id<TAB>duration_seconds<TAB>transcript"; the duration
// may be empty. Throws on a repeated id.
std::vector<Utterance> ReadManifest(std::istream &is, bool normalize);
void WriteManifest(std::ostream &os, const std::vector<Utterance> &utts);

// One word per line (first field); blank lines are skipped.
std::set<std::string> ReadVocabulary(std::istream &is, bool normalize);

struct SplitResult {
  std::vector<Utterance> train;     // sorted by id
  std::vector<Utterance> test;      // sorted by id
  std::vector<Utterance> excluded;  // non-OOV utterances by test speakers
  std::map<std::string, int64_t> oov_types;  // OOV word -> count in test
  int64_t test_tokens = 0;
  int64_t oov_tokens = 0;
  int64_t test_types = 0;

  // Absent when the test set is empty.
  std::optional<double> OovTokenRatio() const;
  std::optional<double> OovTypeRatio() const;
};

// Throws if the manifest or the vocabulary is empty.
SplitResult MakeSplit(std::vector<Utterance> manifest,
                      const std::set<std::string> &vocab);

// Hours over utterances with a duration; absent if none has one.
std::optional<double> TotalHours(const std::vector<Utterance> &utts);

// "word count" lines, count descending then word ascending.
void WriteOovWords(std::ostream &os, const SplitResult &split);
// The OOV word lines followed by "# key value" summary lines.
std::string OovReport(const SplitResult &split);
std::string SplitStatsJson(const SplitResult &split);

}  // namespace oovfst

#endif  // OOVFST_DATASET_SPLIT_H_

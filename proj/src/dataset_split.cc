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

#include "oovfst/dataset_split.h"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "oovfst/error.h"
#include "oovfst/text_util.h"

namespace oovfst {
namespace {

// Non-ASCII punctuation stripped from token edges.
const std::set<char32_t> &UnicodePunctuation() {
  static const std::set<char32_t> kPunct = {
      0x00A1, 0x00AB, 0x00B7, 0x00BB, 0x00BF, 0x2010, 0x2011, 0x2012,
      0x2013, 0x2014, 0x2015, 0x2018, 0x2019, 0x201A, 0x201B, 0x201C,
      0x201D, 0x201E, 0x201F, 0x2026, 0x2039, 0x203A};
  return kPunct;
}

bool IsPunct(char32_t c) {
  if (c < 0x80) return std::ispunct(static_cast<int>(c)) != 0;
  return UnicodePunctuation().count(c) > 0;
}

char32_t Lower(char32_t c) {
  if (c >= 'A' && c <= 'Z') return c + 0x20;
  if (c >= 0xC0 && c <= 0xDE && c != 0xD7) return c + 0x20;
  return c;
}

std::string EncodeUtf8(const std::u32string &s) {
  std::string out;
  for (char32_t c : s) {
    if (c < 0x80) {
      out += static_cast<char>(c);
    } else if (c < 0x800) {
      out += static_cast<char>(0xC0 | (c >> 6));
      out += static_cast<char>(0x80 | (c & 0x3F));
    } else if (c < 0x10000) {
      out += static_cast<char>(0xE0 | (c >> 12));
      out += static_cast<char>(0x80 | ((c >> 6) & 0x3F));
      out += static_cast<char>(0x80 | (c & 0x3F));
    } else {
      out += static_cast<char>(0xF0 | (c >> 18));
      out += static_cast<char>(0x80 | ((c >> 12) & 0x3F));
      out += static_cast<char>(0x80 | ((c >> 6) & 0x3F));
      out += static_cast<char>(0x80 | (c & 0x3F));
    }
  }
  return out;
}

std::string FormatRatio(std::optional<double> r) {
  if (!r) return "n/a";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", *r);
  return buf;
}

nlohmann::json Optional(std::optional<double> v) {
  if (!v) return nullptr;
  return *v;
}

std::vector<std::pair<std::string, int64_t>> SortedOovs(
    const SplitResult &split) {
  std::vector<std::pair<std::string, int64_t>> out(split.oov_types.begin(),
                                                   split.oov_types.end());
  std::stable_sort(out.begin(), out.end(), [](const auto &a, const auto &b) {
    return a.second > b.second;
  });
  return out;
}

}  // namespace

std::string NormalizeWord(std::string_view word) {
  std::u32string s = DecodeUtf8(word);
  size_t b = 0, e = s.size();
  while (b < e && IsPunct(s[b])) ++b;
  while (e > b && IsPunct(s[e - 1])) --e;
  std::u32string out;
  for (size_t i = b; i < e; ++i) out += Lower(s[i]);
  return EncodeUtf8(out);
}

std::vector<std::string> NormalizeTranscript(std::string_view text) {
  std::vector<std::string> out;
  for (const auto &tok : SplitWhitespace(text)) {
    std::string w = NormalizeWord(tok);
    if (!w.empty()) out.push_back(std::move(w));
  }
  return out;
}

std::vector<Utterance> ReadManifest(std::istream &is, bool normalize) {
  std::vector<Utterance> out;
  std::set<std::string> ids;
  std::string line;
  size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (Trim(line).empty()) continue;
    auto fields = SplitOn(line, '\t');
    if (fields.size() != 4) {
      throw Error("manifest line " + std::to_string(lineno) +
                  ": expected 4 tab-separated fields");
    }
    Utterance u;
    u.id = std::string(Trim(fields[0]));
    u.speaker = std::string(Trim(fields[1]));
    if (u.id.empty() || u.speaker.empty()) {
      throw Error("manifest line " + std::to_string(lineno) +
                  ": empty utterance or speaker id");
    }
    if (!Trim(fields[2]).empty()) {
      u.duration = ParseDouble(Trim(fields[2]), "duration");
    }
    u.words = normalize ? NormalizeTranscript(fields[3])
                        : SplitWhitespace(fields[3]);
    if (!ids.insert(u.id).second) {
      throw Error("manifest line " + std::to_string(lineno) +
                  ": repeated utterance id " + u.id);
    }
    out.push_back(std::move(u));
  }
  return out;
}

void WriteManifest(std::ostream &os, const std::vector<Utterance> &utts) {
  for (const auto &u : utts) {
    os << u.id << '\t' << u.speaker << '\t';
    if (u.duration) {
      char buf[64];
      std::snprintf(buf, sizeof(buf), "%.3f", *u.duration);
      os << buf;
    }
    os << '\t' << Join(u.words, " ") << '\n';
  }
}

std::set<std::string> ReadVocabulary(std::istream &is, bool normalize) {
  std::set<std::string> vocab;
  std::string line;
  while (std::getline(is, line)) {
    auto fields = SplitWhitespace(line);
    if (fields.empty()) continue;
    std::string w = normalize ? NormalizeWord(fields[0]) : fields[0];
    if (!w.empty()) vocab.insert(std::move(w));
  }
  return vocab;
}

std::optional<double> SplitResult::OovTokenRatio() const {
  if (test_tokens == 0) return std::nullopt;
  return static_cast<double>(oov_tokens) / static_cast<double>(test_tokens);
}

std::optional<double> SplitResult::OovTypeRatio() const {
  if (test_types == 0) return std::nullopt;
  return static_cast<double>(oov_types.size()) /
         static_cast<double>(test_types);
}

SplitResult MakeSplit(std::vector<Utterance> manifest,
                      const std::set<std::string> &vocab) {
  if (manifest.empty()) throw Error("manifest is empty");
  if (vocab.empty()) throw Error("vocabulary is empty");
  std::sort(manifest.begin(), manifest.end(),
            [](const Utterance &a, const Utterance &b) { return a.id < b.id; });
  for (size_t i = 1; i < manifest.size(); ++i) {
    if (manifest[i].id == manifest[i - 1].id) {
      throw Error("repeated utterance id " + manifest[i].id);
    }
  }

  SplitResult r;
  std::set<std::string> test_speakers;
  std::vector<bool> is_test(manifest.size(), false);
  for (size_t i = 0; i < manifest.size(); ++i) {
    for (const auto &w : manifest[i].words) {
      if (!vocab.count(w)) {
        is_test[i] = true;
        break;
      }
    }
    if (is_test[i]) test_speakers.insert(manifest[i].speaker);
  }
  std::set<std::string> test_types;
  for (size_t i = 0; i < manifest.size(); ++i) {
    Utterance &u = manifest[i];
    if (is_test[i]) {
      for (const auto &w : u.words) {
        ++r.test_tokens;
        test_types.insert(w);
        if (!vocab.count(w)) {
          ++r.oov_tokens;
          ++r.oov_types[w];
        }
      }
      r.test.push_back(std::move(u));
    } else if (test_speakers.count(u.speaker)) {
      r.excluded.push_back(std::move(u));
    } else {
      r.train.push_back(std::move(u));
    }
  }
  r.test_types = static_cast<int64_t>(test_types.size());
  return r;
}

std::optional<double> TotalHours(const std::vector<Utterance> &utts) {
  double seconds = 0.0;
  bool any = false;
  for (const auto &u : utts) {
    if (!u.duration) continue;
    seconds += *u.duration;
    any = true;
  }
  if (!any) return std::nullopt;
  return seconds / 3600.0;
}

void WriteOovWords(std::ostream &os, const SplitResult &split) {
  for (const auto &[w, c] : SortedOovs(split)) os << w << ' ' << c << '\n';
}

std::string OovReport(const SplitResult &split) {
  std::ostringstream os;
  WriteOovWords(os, split);
  os << "# oov_token_ratio " << FormatRatio(split.OovTokenRatio()) << '\n'
     << "# oov_type_ratio " << FormatRatio(split.OovTypeRatio()) << '\n'
     << "# oov_types " << split.oov_types.size() << '\n'
     << "# oov_tokens " << split.oov_tokens << '\n'
     << "# test_tokens " << split.test_tokens << '\n'
     << "# train_utterances " << split.train.size() << '\n'
     << "# test_utterances " << split.test.size() << '\n'
     << "# excluded_utterances " << split.excluded.size() << '\n';
  if (auto h = TotalHours(split.train)) {
    os << "# train_hours " << FormatRatio(*h) << '\n';
  }
  if (auto h = TotalHours(split.test)) {
    os << "# test_hours " << FormatRatio(*h) << '\n';
  }
  return os.str();
}

std::string SplitStatsJson(const SplitResult &split) {
  nlohmann::json oovs = nlohmann::json::array();
  for (const auto &[w, c] : SortedOovs(split)) {
    oovs.push_back({{"word", w}, {"count", c}});
  }
  nlohmann::json j = {
      {"train_utterances", split.train.size()},
      {"test_utterances", split.test.size()},
      {"excluded_utterances", split.excluded.size()},
      {"test_tokens", split.test_tokens},
      {"oov_tokens", split.oov_tokens},
      {"test_types", split.test_types},
      {"oov_types", split.oov_types.size()},
      {"oov_token_ratio", Optional(split.OovTokenRatio())},
      {"oov_type_ratio", Optional(split.OovTypeRatio())},
      {"train_hours", Optional(TotalHours(split.train))},
      {"test_hours", Optional(TotalHours(split.test))},
      {"excluded_hours", Optional(TotalHours(split.excluded))},
      {"oov_words", std::move(oovs)}};
  return j.dump(2);
}

}  // namespace oovfst

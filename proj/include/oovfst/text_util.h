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

// Small string helpers shared by the parsers.

#ifndef OOVFST_TEXT_UTIL_H_
#define OOVFST_TEXT_UTIL_H_

#include <string>
#include <string_view>
#include <vector>

namespace oovfst {

// Splits on runs of spaces and tabs; never returns empty fields.
std::vector<std::string> SplitWhitespace(std::string_view line);

// Splits on every occurrence of `sep`, keeping empty fields.
std::vector<std::string> SplitOn(std::string_view line, char sep);

std::string_view Trim(std::string_view s);

std::string Join(const std::vector<std::string> &parts, std::string_view sep);

// Splits a UTF-8 string into code points (each returned as its byte string).
// Invalid lead bytes are passed through as single bytes.
std::vector<std::string> Utf8Chars(std::string_view s);

std::u32string DecodeUtf8(std::string_view s);

// Parses a finite or infinite real number; throws Error on garbage.
double ParseDouble(std::string_view s, std::string_view what);

long long ParseInt(std::string_view s, std::string_view what);

// "%.6f" with "Infinity" for +inf.
std::string FormatWeight(double w);

}  // namespace oovfst

#endif  // OOVFST_TEXT_UTIL_H_

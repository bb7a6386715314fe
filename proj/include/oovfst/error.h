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

#ifndef OOVFST_ERROR_H_
#define OOVFST_ERROR_H_

#include <stdexcept>
#include <string>

namespace oovfst {

// Domain error raised by every module. The CLI maps it to exit status 1.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};

// Raised by ShortestPath when no accepting path exists.
class EmptyLanguageError : public Error {
 public:
  EmptyLanguageError() : Error("empty language: no accepting path") {}
};

}  // namespace oovfst

#endif  // OOVFST_ERROR_H_

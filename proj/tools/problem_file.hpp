// Copyright 2026 The projopt Authors
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

#ifndef PROJOPT_TOOLS_PROBLEM_FILE_HPP_
#define PROJOPT_TOOLS_PROBLEM_FILE_HPP_

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace projopt::cli {

enum class InputErrorKind {
  kMissingFile,
  kMalformed,
  kBadField,
  kMissingField,
  kDimensionMismatch,
  kInvalidBox,
};

const char* InputErrorKindName(InputErrorKind kind);

class InputError : public std::runtime_error {
 public:
  InputError(InputErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  InputErrorKind kind() const noexcept { return kind_; }

 private:
  InputErrorKind kind_;
};

// Problem description read from a JSON object. Every field is optional at
// parse time; present fields are checked against each other.
struct ProblemFile {
  std::optional<std::vector<double>> c;
  std::optional<std::vector<double>> u;
  std::optional<std::vector<double>> v;
  std::optional<std::vector<std::vector<double>>> a;
  std::optional<std::vector<double>> b;
  std::optional<std::vector<double>> y;
  std::optional<std::vector<double>> p;   // quadratic target for pgd
  std::optional<std::vector<double>> x0;  // pgd starting point

  std::size_t EqualityRows() const { return a ? a->size() : 0; }
  // Row-major copy of A.
  std::vector<double> FlatA() const;
};

ProblemFile ParseProblemText(const std::string& text,
                             const std::string& source = "<input>");
ProblemFile ParseProblemFile(const std::string& path);

// Throws kMissingField naming the first absent field.
void RequireFields(const ProblemFile& problem,
                   std::initializer_list<const char*> names,
                   const std::string& command);

}  // namespace projopt::cli

#endif  // PROJOPT_TOOLS_PROBLEM_FILE_HPP_

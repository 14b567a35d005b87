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

#ifndef PROJOPT_TOOLS_REPORT_HPP_
#define PROJOPT_TOOLS_REPORT_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace projopt::cli {

// %.17g, or null for values JSON cannot represent.
std::string FormatNumber(double value);

// Flat JSON object whose keys are emitted in insertion order.
class Report {
 public:
  void AddNumber(const std::string& key, double value);
  void AddInteger(const std::string& key, std::size_t value);
  void AddBool(const std::string& key, bool value);
  void AddNumbers(const std::string& key, std::span<const double> values);
  void AddNamedNumbers(const std::string& key,
                       const std::vector<std::pair<std::string, double>>& values);
  // List of {"kind": ..., "index": ...} objects.
  void AddConstraints(const std::string& key,
                      const std::vector<std::pair<std::string, std::size_t>>& items);

  // Two-space indented document with a trailing newline.
  std::string Render() const;

 private:
  void Add(const std::string& key, std::string rendered);

  std::vector<std::pair<std::string, std::string>> entries_;
};

}  // namespace projopt::cli

#endif  // PROJOPT_TOOLS_REPORT_HPP_

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

#include "report.hpp"

#include <cmath>
#include <cstdio>

namespace projopt::cli {
namespace {

std::string Quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string FormatNumber(double value) {
  if (!std::isfinite(value)) return "null";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

void Report::Add(const std::string& key, std::string rendered) {
  entries_.emplace_back(key, std::move(rendered));
}

void Report::AddNumber(const std::string& key, double value) {
  Add(key, FormatNumber(value));
}

void Report::AddInteger(const std::string& key, std::size_t value) {
  Add(key, std::to_string(value));
}

void Report::AddBool(const std::string& key, bool value) {
  Add(key, value ? "true" : "false");
}

void Report::AddNumbers(const std::string& key, std::span<const double> values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ", ";
    out += FormatNumber(values[i]);
  }
  Add(key, out + "]");
}

void Report::AddNamedNumbers(
    const std::string& key,
    const std::vector<std::pair<std::string, double>>& values) {
  if (values.empty()) {
    Add(key, "{}");
    return;
  }
  std::string out = "{\n";
  for (std::size_t i = 0; i < values.size(); ++i) {
    out += "    " + Quote(values[i].first) + ": " + FormatNumber(values[i].second);
    out += i + 1 < values.size() ? ",\n" : "\n";
  }
  Add(key, out + "  }");
}

void Report::AddConstraints(
    const std::string& key,
    const std::vector<std::pair<std::string, std::size_t>>& items) {
  if (items.empty()) {
    Add(key, "[]");
    return;
  }
  std::string out = "[\n";
  for (std::size_t i = 0; i < items.size(); ++i) {
    out += "    {\"kind\": " + Quote(items[i].first) +
           ", \"index\": " + std::to_string(items[i].second) + "}";
    out += i + 1 < items.size() ? ",\n" : "\n";
  }
  Add(key, out + "  ]");
}

std::string Report::Render() const {
  std::string out = "{\n";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    out += "  " + Quote(entries_[i].first) + ": " + entries_[i].second;
    out += i + 1 < entries_.size() ? ",\n" : "\n";
  }
  return out + "}\n";
}

}  // namespace projopt::cli

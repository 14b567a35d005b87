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

#include "problem_file.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace projopt::cli {
namespace {

using nlohmann::json;

const char* const kKnownFields[] = {"c", "u", "v", "A", "b", "y", "p", "x0"};

std::vector<double> ReadNumbers(const json& node, const std::string& field) {
  if (!node.is_array()) {
    throw InputError(InputErrorKind::kBadField,
                     "field '" + field + "' must be a list of numbers");
  }
  std::vector<double> out;
  out.reserve(node.size());
  for (std::size_t i = 0; i < node.size(); ++i) {
    const json& e = node[i];
    if (!e.is_number()) {
      throw InputError(InputErrorKind::kBadField, "field '" + field + "' entry " +
                                                      std::to_string(i) +
                                                      " is not a number");
    }
    const double value = e.get<double>();
    if (!std::isfinite(value)) {
      throw InputError(InputErrorKind::kBadField, "field '" + field + "' entry " +
                                                      std::to_string(i) +
                                                      " is not finite");
    }
    out.push_back(value);
  }
  return out;
}

std::optional<std::vector<double>> OptionalNumbers(const json& doc,
                                                   const char* field) {
  if (!doc.contains(field)) return std::nullopt;
  return ReadNumbers(doc.at(field), field);
}

void CheckLength(const std::optional<std::vector<double>>& field,
                 const char* name, std::size_t expected, const char* reference) {
  if (field && field->size() != expected) {
    throw InputError(InputErrorKind::kDimensionMismatch,
                     std::string("field '") + name + "' has length " +
                         std::to_string(field->size()) + " but '" + reference +
                         "' has length " + std::to_string(expected));
  }
}

void Validate(const ProblemFile& f) {
  // The first present vector fixes n; the others must agree with it.
  const std::pair<const std::optional<std::vector<double>>*, const char*> fields[] = {
      {&f.u, "u"}, {&f.v, "v"}, {&f.c, "c"}, {&f.y, "y"}, {&f.p, "p"}, {&f.x0, "x0"}};
  const char* reference = nullptr;
  std::size_t n = 0;
  for (const auto& [field, name] : fields) {
    if (!*field) continue;
    if (!reference) {
      reference = name;
      n = (*field)->size();
    }
    CheckLength(*field, name, n, reference);
  }

  if (f.a.has_value() != f.b.has_value()) {
    throw InputError(InputErrorKind::kMissingField,
                     f.a ? "field 'A' is given without 'b'"
                         : "field 'b' is given without 'A'");
  }
  if (f.a) {
    CheckLength(f.b, "b", f.a->size(), "A");
    for (std::size_t r = 0; r < f.a->size(); ++r) {
      const std::size_t cols = (*f.a)[r].size();
      if (!reference) {
        reference = "A";
        n = cols;
      }
      if (cols != n) {
        throw InputError(InputErrorKind::kDimensionMismatch,
                         "row " + std::to_string(r) + " of field 'A' has " +
                             std::to_string(cols) + " columns but '" + reference +
                             "' has length " + std::to_string(n));
      }
    }
  }

  if (f.u.has_value() != f.v.has_value()) {
    throw InputError(InputErrorKind::kMissingField,
                     f.u ? "field 'u' is given without 'v'"
                         : "field 'v' is given without 'u'");
  }
  if (f.u) {
    for (std::size_t i = 0; i < f.u->size(); ++i) {
      if ((*f.u)[i] > (*f.v)[i]) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "invalid box at index " << i << ": u = " << (*f.u)[i]
            << " exceeds v = " << (*f.v)[i];
        throw InputError(InputErrorKind::kInvalidBox, msg.str());
      }
    }
  }
}

}  // namespace

const char* InputErrorKindName(InputErrorKind kind) {
  switch (kind) {
    case InputErrorKind::kMissingFile: return "missing-file";
    case InputErrorKind::kMalformed: return "malformed";
    case InputErrorKind::kBadField: return "bad-field";
    case InputErrorKind::kMissingField: return "missing-field";
    case InputErrorKind::kDimensionMismatch: return "dimension-mismatch";
    case InputErrorKind::kInvalidBox: return "invalid-box";
  }
  return "unknown";
}

std::vector<double> ProblemFile::FlatA() const {
  std::vector<double> out;
  if (!a) return out;
  for (const auto& row : *a) out.insert(out.end(), row.begin(), row.end());
  return out;
}

ProblemFile ParseProblemText(const std::string& text, const std::string& source) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(InputErrorKind::kMalformed,
                     "malformed JSON in " + source + ": " + e.what());
  }
  if (!doc.is_object()) {
    throw InputError(InputErrorKind::kMalformed,
                     "malformed problem in " + source + ": top level must be an object");
  }
  for (const auto& item : doc.items()) {
    bool known = false;
    for (const char* name : kKnownFields) known = known || item.key() == name;
    if (!known) {
      throw InputError(InputErrorKind::kBadField,
                       "unknown field '" + item.key() + "' in " + source);
    }
  }

  ProblemFile f;
  f.c = OptionalNumbers(doc, "c");
  f.u = OptionalNumbers(doc, "u");
  f.v = OptionalNumbers(doc, "v");
  f.b = OptionalNumbers(doc, "b");
  f.y = OptionalNumbers(doc, "y");
  f.p = OptionalNumbers(doc, "p");
  f.x0 = OptionalNumbers(doc, "x0");
  if (doc.contains("A")) {
    const json& rows = doc.at("A");
    if (!rows.is_array()) {
      throw InputError(InputErrorKind::kBadField, "field 'A' must be a list of rows");
    }
    f.a.emplace();
    for (std::size_t r = 0; r < rows.size(); ++r) {
      f.a->push_back(ReadNumbers(rows[r], "A[" + std::to_string(r) + "]"));
    }
  }
  Validate(f);
  return f;
}

ProblemFile ParseProblemFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw InputError(InputErrorKind::kMissingFile,
                     "cannot open input file '" + path + "'");
  }
  std::ostringstream text;
  text << in.rdbuf();
  return ParseProblemText(text.str(), "'" + path + "'");
}

void RequireFields(const ProblemFile& problem,
                   std::initializer_list<const char*> names,
                   const std::string& command) {
  for (const std::string name : names) {
    const bool present =
        (name == "c" && problem.c) || (name == "u" && problem.u) ||
        (name == "v" && problem.v) || (name == "A" && problem.a) ||
        (name == "b" && problem.b) || (name == "y" && problem.y) ||
        (name == "p" && problem.p) || (name == "x0" && problem.x0);
    if (!present) {
      throw InputError(InputErrorKind::kMissingField,
                       command + " requires field '" + name + "'");
    }
  }
}

}  // namespace projopt::cli

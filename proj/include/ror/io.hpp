// Copyright 2026 The imprecise-ror Authors
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

#pragma once

// JSON documents: problems, statements, sorting examples, relation
// matrices and errors. Object key order is preserved on output.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ror/error.hpp"
#include "ror/model.hpp"
#include "ror/relation.hpp"
#include "ror/ror_engine.hpp"
#include "ror/sorting_engine.hpp"
#include "ror/value_model.hpp"

namespace ror::io {

using Json = nlohmann::ordered_json;

struct SortingSpec {
  ClassStructure classes;
  std::vector<AssignmentExample> examples;
};

struct ProblemDocument {
  PerformanceTable table;
  std::vector<PreferenceStatement> statements;
  std::optional<SortingSpec> sorting;
};

// Structural errors (wrong JSON types, missing keys) are ValidationErrors
// like semantic ones. A scalar cell stands for n identical points.
RawProblem parse_raw_problem(const Json& j);
ProblemDocument parse_problem(const Json& j);

// Statement ids default to "s<position>" (1-based) when absent.
PreferenceStatement parse_statement(const Json& j, std::size_t position);
// Accepts an array or an object with a "statements" array.
std::vector<PreferenceStatement> parse_statements(const Json& j, std::size_t first_position = 1);
SortingSpec parse_sorting(const Json& j);

Json to_json(const PreferenceStatement& s);
Json to_json(const RelationMatrix& m);
Json to_json(const Error& e);
Json to_json(const std::optional<ClassInterval>& c);

// "classic", "strong", "weak" or "i,k".
QueryIndex parse_index(const std::string& text, int n);
std::string index_text(const QueryIndex& idx);
Family parse_family(const std::string& text);

Json parse_text(const std::string& text);
Json read_file(const std::string& path);
// Canonical text form: two-space indent, trailing newline.
std::string dump(const Json& j);

}  // namespace ror::io

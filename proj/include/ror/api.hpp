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

// JSON-level operations shared by the command line and the HTTP service, so
// both print the same bytes for the same inputs.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ror/io.hpp"
#include "ror/robustness.hpp"

namespace ror::api {

using io::Json;

// A problem with its statement log; `collapse` admits tables with missing
// cells, restricted to strong and weak queries.
struct Query {
  const io::ProblemDocument& doc;
  bool collapse = false;
};

// Index text is resolved against n, or against 2 for a collapsed table.
QueryIndex resolve_index(const Query& q, const std::string& text);

Json validate(const Query& q);
// Index "classic" selects normal dominance.
Json dominance(const Query& q, const std::string& index);
Json relations(const Query& q, Family f, const std::string& index);
// An empty coalition selects the whole roster.
Json group(const Query& q, Family outer, Family inner, const std::string& index,
           const std::vector<std::string>& coalition, bool exclude_incompatible);
// Ranking statements join the sorting rows only when `joint` is set.
Json sorting(const Query& q, const std::string& index, bool joint);
Json extreme_ranks(const Query& q, const std::string& index);
Json diagnose(const Query& q, const DiagnosisOptions& opts);
Json sweep(const Query& q, const std::string& index);
// relation: "dominance", "necessary" or "possible".
std::string dot(const Query& q, const std::string& relation, const std::string& index);

Json check_properties(std::uint64_t seed, int instances, int max_dms);

int http_status(ErrorCode code);
int exit_code(ErrorCode code);

}  // namespace ror::api

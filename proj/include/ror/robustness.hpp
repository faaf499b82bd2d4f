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

// Extreme ranking analysis and diagnosis of incompatible statement sets.
// Both work on the increment form with a fixed strictness slack.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ror/lp.hpp"
#include "ror/ror_engine.hpp"
#include "ror/value_model.hpp"

namespace ror {

struct RankInterval {
  int best = 1;
  int worst = 1;
  bool operator==(const RankInterval&) const = default;
};

// Rank of a under U: 1 + #{b != a : U(b') - U(a') > kStrictness +
// kResidualTol}, where a' is a^(i) and b' is b^(k) (whole alternatives for
// the classic index). The analysis ranges over value functions whose
// statement slack is at least kStrictness. The worst rank counts b only
// when it clears the threshold by a further kResidualTol.
RankInterval extreme_ranks(const RorEngine& engine, std::size_t a,
                           const QueryIndex& idx = QueryIndex::whole(),
                           const lp::MilpOptions& opts = {});

std::vector<RankInterval> extreme_ranks_all(const RorEngine& engine,
                                            const QueryIndex& idx = QueryIndex::whole(),
                                            const lp::MilpOptions& opts = {});

// Explicit-variable vertices of the same polytope, one per random linear
// objective.
std::vector<std::vector<double>> sample_vertices(const RorEngine& engine, int count,
                                                 std::uint64_t seed);

// Rank of a at one explicit solution, under the definition above.
int rank_at(const RorEngine& engine, std::size_t a, const QueryIndex& idx,
            const std::vector<double>& values);

struct InconsistencyReport {
  // Statement ids, each set in insertion order.
  std::vector<std::vector<std::string>> minimal_sets;
  // True when every minimal set was enumerated.
  bool exhaustive = true;
};

struct DiagnosisOptions {
  int max_sets = 16;
  long node_budget = 200000;  // branch-and-bound nodes across all solves
};

// Each reported set S restores compatibility when removed, and no proper
// subset of S does. Sets are enumerated by increasing size and, among sets
// of one size, lexicographically by statement position.
InconsistencyReport find_inconsistencies(const PerformanceTable& table,
                                         const std::vector<PreferenceStatement>& statements,
                                         const DiagnosisOptions& opts = {});

}  // namespace ror

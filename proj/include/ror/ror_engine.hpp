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

// Necessary and possible preference relations, classic and (i,k)-indexed,
// over the set of value functions compatible with a statement log.

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ror/model.hpp"
#include "ror/relation.hpp"
#include "ror/value_model.hpp"

namespace ror {

enum class Family { necessary, possible };

std::string_view to_string(Family f);

// Classic compares U(a) with U(b); indexed compares U(a^(i)) with U(b^(k)).
struct QueryIndex {
  bool classic = true;
  int i = 1;
  int k = 1;

  static QueryIndex whole() { return {}; }
  static QueryIndex pair(int i, int k) { return {false, i, k}; }
  static QueryIndex strong(int n) { return {false, 1, n}; }
  static QueryIndex weak(int n) { return {false, n, 1}; }

  // (i,k) -> (k,i); classic is its own swap.
  QueryIndex swapped() const { return classic ? *this : pair(k, i); }
  bool operator==(const QueryIndex&) const = default;
  auto operator<=>(const QueryIndex&) const = default;
};

// True when relation `x` is contained in relation `y` for every instance,
// within the same family.
bool index_included(const QueryIndex& x, const QueryIndex& y, int n);

struct EngineStats {
  long lp_calls = 0;
  long certificate_hits = 0;  // decided by a dominance certificate
  long inferred = 0;          // decided from inclusion, duality or a witness
  long cache_hits = 0;
  double max_residual = 0.0;  // over every accepted solve
};

struct BoundaryRecord {
  Family family;
  QueryIndex index;
  std::size_t a;
  std::size_t b;
  double epsilon;
};

struct EngineOptions {
  bool prune = true;
  // Tables with missing cells: collapse to two points and serve strong/weak
  // queries only. Without it such tables are rejected.
  bool collapse_missing = false;
};

class RorEngine {
 public:
  // Throws MissingEvaluationUnsupported and any statement validation error.
  RorEngine(const PerformanceTable& table, std::vector<PreferenceStatement> statements,
            EngineOptions options = {});

  const PerformanceTable& table() const noexcept { return table_; }
  const std::vector<PreferenceStatement>& statements() const noexcept { return statements_; }
  bool compatible() const noexcept { return compatible_; }
  std::optional<double> epsilon() const noexcept { return epsilon_; }
  bool collapsed() const noexcept { return collapsed_; }

  // Throw IncompatibleSession, IndexOutOfRange, MissingEvaluationUnsupported.
  bool necessary(std::size_t a, std::size_t b, const QueryIndex& idx = QueryIndex::whole());
  bool possible(std::size_t a, std::size_t b, const QueryIndex& idx = QueryIndex::whole());
  bool query(Family f, std::size_t a, std::size_t b, const QueryIndex& idx);

  RelationMatrix relation(Family f, const QueryIndex& idx);

  // Utility expression of a under the index's left (i) or right (k) side.
  LinearExpr side_utility(std::size_t a, const QueryIndex& idx, bool left) const;

  const EngineStats& stats() const noexcept { return stats_; }
  const std::vector<BoundaryRecord>& boundary() const noexcept { return boundary_; }
  const std::shared_ptr<const ValueModel>& model() const noexcept { return model_; }
  const ReducedModel& reduced() const noexcept { return *reduced_; }

 private:
  PerformanceTable table_;
  std::vector<PreferenceStatement> statements_;
  EngineOptions options_;
  bool collapsed_ = false;
  bool compatible_ = false;
  std::optional<double> epsilon_;
  std::shared_ptr<const ValueModel> model_;
  std::unique_ptr<ReducedModel> reduced_;

  // -1 unknown, 0 false, 1 true; one table per (family, index).
  std::map<std::pair<Family, QueryIndex>, std::vector<std::int8_t>> known_;
  // Explicit solutions with statement slack above the threshold, and their
  // utilities per alternative and side.
  struct Witness {
    double slack;
    std::vector<double> values;
  };
  std::vector<Witness> witnesses_;
  EngineStats stats_;
  std::vector<BoundaryRecord> boundary_;

  void check_query(const QueryIndex& idx) const;
  std::vector<std::int8_t>& bits(Family f, const QueryIndex& idx);
  std::optional<bool> lookup(Family f, const QueryIndex& idx, std::size_t a, std::size_t b) const;
  std::optional<bool> certificate(Family f, const QueryIndex& idx, std::size_t a, std::size_t b) const;
  std::optional<bool> infer(Family f, const QueryIndex& idx, std::size_t a, std::size_t b) const;
  bool solve(Family f, const QueryIndex& idx, std::size_t a, std::size_t b);
  void remember_witness(const LpOutcome& out);
};

// Results for one credibility level: statements with credibility <= level.
struct CredibilityLevel {
  int level = 1;
  bool available = false;  // false once this or an earlier level is incompatible
  std::optional<RelationMatrix> necessary;
  std::optional<RelationMatrix> possible;
};

std::vector<CredibilityLevel> credibility_sweep(const PerformanceTable& table,
                                                const std::vector<PreferenceStatement>& statements,
                                                const QueryIndex& idx, EngineOptions options = {});

std::string relation_tag(Family f, const QueryIndex& idx);

}  // namespace ror

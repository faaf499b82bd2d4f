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

// Example-based sorting into ordered classes C_1 < ... < C_p. A compatible
// value function ranks every example strictly above each example whose
// interval lies entirely below its own.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ror/ror_engine.hpp"
#include "ror/value_model.hpp"

namespace ror {

struct ClassStructure {
  std::vector<std::string> labels;  // worst -> best
  int p() const noexcept { return static_cast<int>(labels.size()); }
};

struct AssignmentExample {
  std::string alternative;
  int lower = 1;  // 1-based class indices, lower <= upper
  int upper = 1;
};

struct ClassInterval {
  int lower = 1;
  int upper = 1;
  bool operator==(const ClassInterval&) const = default;
};

struct Assignment {
  std::optional<ClassInterval> possible;
  std::optional<ClassInterval> necessary;  // absent when empty
};

class SortingEngine {
 public:
  // Throws ValidationError (class count, bounds, duplicates) and
  // UnknownAlternative. `joint` statements are added to the CVF rows.
  SortingEngine(const PerformanceTable& table, ClassStructure classes,
                std::vector<AssignmentExample> examples,
                std::vector<PreferenceStatement> joint = {});

  bool compatible() const noexcept { return compatible_; }
  std::optional<double> epsilon() const noexcept { return epsilon_; }
  const ClassStructure& classes() const noexcept { return classes_; }
  const PerformanceTable& table() const noexcept { return model_->table(); }

  // h is possible iff some compatible U puts a^(i) strictly below every
  // example starting above h and strictly above every example ending below
  // h. The interval is the hull of the possible classes.
  std::optional<ClassInterval> possible(std::size_t a, const QueryIndex& idx = QueryIndex::whole());
  // Intersection over compatible U of [L^U, R^U]; absent when empty.
  std::optional<ClassInterval> necessary(std::size_t a, const QueryIndex& idx = QueryIndex::whole());
  Assignment assign(std::size_t a, const QueryIndex& idx = QueryIndex::whole());

  long lp_calls() const noexcept { return lp_calls_; }

 private:
  ClassStructure classes_;
  std::vector<std::pair<std::size_t, AssignmentExample>> examples_;
  std::shared_ptr<const ValueModel> model_;
  std::unique_ptr<ReducedModel> reduced_;
  bool compatible_ = false;
  std::optional<double> epsilon_;
  long lp_calls_ = 0;

  void require_compatible() const;
  LinearExpr side(std::size_t a, const QueryIndex& idx, bool left) const;
  double solve(std::vector<ConstraintRow> rows);
};

Compatibility sorting_compatible(const PerformanceTable& table, const ClassStructure& classes,
                                 const std::vector<AssignmentExample>& examples);

}  // namespace ror

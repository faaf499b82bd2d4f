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

// Problem data model: criteria and their scales, n-point interval
// evaluations, the performance table and fictitious realizations.
//
// All indicator indices in the public API are 1-based (1..n) and refer to
// the i-th point of an interval, worst to best. Qualitative labels are
// mapped to ranks 1..L at validation time; downstream code only sees
// numbers and every criterion is of gain type.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace ror {

enum class ScaleKind { quantitative, qualitative };

struct Scale {
  ScaleKind kind = ScaleKind::quantitative;
  // Qualitative only, ordered worst -> best.
  std::vector<std::string> labels;
  // Declared [worst, best] value range, used for missing evaluations.
  std::optional<std::pair<double, double>> range;

  static Scale quantitative(std::optional<std::pair<double, double>> range = {});
  static Scale qualitative(std::vector<std::string> labels);

  // 1-based rank of a label, nullopt if unknown.
  std::optional<double> rank_of(std::string_view label) const;
  // Range in rank space: the declared range or, for qualitative scales,
  // [1, L].
  std::optional<std::pair<double, double>> effective_range() const;

  bool operator==(const Scale&) const = default;
};

struct Criterion {
  std::string id;
  Scale scale;

  bool operator==(const Criterion&) const = default;
};

class IntervalEvaluation {
 public:
  IntervalEvaluation() = default;  // missing
  explicit IntervalEvaluation(std::vector<double> points);

  static IntervalEvaluation missing() { return {}; }

  bool is_missing() const noexcept { return missing_; }
  bool is_precise() const noexcept;
  std::span<const double> points() const noexcept { return points_; }
  // 1-based.
  double point(int index) const { return points_.at(static_cast<std::size_t>(index - 1)); }

  bool operator==(const IntervalEvaluation&) const = default;

 private:
  std::vector<double> points_;
  bool missing_ = true;
};

// Unvalidated input as it comes from JSON or from code.
using RawPoint = std::variant<double, std::string>;

struct RawAlternative {
  std::string id;
  // One cell per criterion, in criterion order; nullopt encodes missing.
  std::vector<std::optional<std::vector<RawPoint>>> cells;
};

struct RawProblem {
  int n = 1;
  std::vector<Criterion> criteria;
  std::vector<RawAlternative> alternatives;
  // Absent means every alternative is a reference alternative.
  std::optional<std::vector<std::string>> reference;
};

class PerformanceTable {
 public:
  int n() const noexcept { return n_; }
  std::size_t num_alternatives() const noexcept { return ids_.size(); }
  std::size_t num_criteria() const noexcept { return criteria_.size(); }

  const std::vector<Criterion>& criteria() const noexcept { return criteria_; }
  const std::vector<std::string>& alternative_ids() const noexcept { return ids_; }
  const std::string& alternative_id(std::size_t a) const { return ids_.at(a); }

  // Throws UnknownAlternative.
  std::size_t index_of(std::string_view id) const;
  std::optional<std::size_t> find(std::string_view id) const;
  // Throws UnknownCriterion.
  std::size_t criterion_index(std::string_view id) const;

  const IntervalEvaluation& evaluation(std::size_t a, std::size_t j) const {
    return cells_.at(a * criteria_.size() + j);
  }
  // g_j^i(a). Throws MissingEvaluationUnsupported on a missing cell and
  // IndexOutOfRange for i outside 1..n.
  double value(std::size_t a, std::size_t j, int i) const;

  bool has_missing() const noexcept;
  bool has_missing(std::size_t a) const;

  bool is_reference(std::size_t a) const { return reference_.at(a); }
  std::vector<std::size_t> reference_set() const;

  // Throws UnknownAlternative and MissingEvaluationUnsupported.
  void require_complete(std::size_t a) const;

  bool operator==(const PerformanceTable&) const = default;

 private:
  friend PerformanceTable validate_table(const RawProblem& raw);
  friend PerformanceTable collapse_to_two_point(const PerformanceTable& table);

  int n_ = 1;
  std::vector<Criterion> criteria_;
  std::vector<std::string> ids_;
  std::vector<IntervalEvaluation> cells_;  // row-major, alternative x criterion
  std::vector<bool> reference_;
};

// Throws ValidationError listing every violation found.
PerformanceTable validate_table(const RawProblem& raw);

// Numeric convenience constructor: rows of (id, per-criterion points).
// Every alternative is a reference alternative.
PerformanceTable numeric_table(
    int n, const std::vector<std::string>& criteria,
    const std::vector<std::pair<std::string, std::vector<std::vector<double>>>>& rows);

// A fictitious alternative: a uniform indicator index (a^(i)) or one index
// per criterion.
struct Realization {
  std::size_t base = 0;
  std::variant<int, std::vector<int>> selector = 1;

  static Realization uniform(std::size_t base, int i) { return {base, i}; }
  static Realization per_criterion(std::size_t base, std::vector<int> indices) {
    return {base, std::move(indices)};
  }
  int index_for(std::size_t criterion) const;
};

// Precise evaluation vector of a realization. Missing cells realize to the
// declared range endpoints for indices 1 and n only.
std::vector<double> realize(const PerformanceTable& table, const Realization& r);

// Reduces every interval to [g^1, g^n]; missing cells become the declared
// range [worst, best]. Throws RangeUndeclared.
PerformanceTable collapse_to_two_point(const PerformanceTable& table);

}  // namespace ror

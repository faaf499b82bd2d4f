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

#include "ror/sorting_engine.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "ror/error.hpp"

namespace ror {

SortingEngine::SortingEngine(const PerformanceTable& table, ClassStructure classes,
                             std::vector<AssignmentExample> examples,
                             std::vector<PreferenceStatement> joint)
    : classes_(std::move(classes)) {
  std::vector<std::string> problems;
  if (classes_.p() < 2) problems.push_back("at least 2 classes are required");
  std::set<std::string> seen_labels;
  for (const auto& l : classes_.labels)
    if (!seen_labels.insert(l).second) problems.push_back("duplicate class label '" + l + "'");
  std::set<std::size_t> seen;
  for (const auto& ex : examples) {
    auto a = table.find(ex.alternative);
    if (!a) throw Error(ErrorCode::unknown_alternative, "unknown alternative '" + ex.alternative + "'");
    if (ex.lower < 1 || ex.upper > classes_.p() || ex.lower > ex.upper)
      problems.push_back("example '" + ex.alternative + "': interval [" + std::to_string(ex.lower) +
                         "," + std::to_string(ex.upper) + "] outside 1.." +
                         std::to_string(classes_.p()) + " or reversed");
    if (!seen.insert(*a).second) problems.push_back("duplicate example for '" + ex.alternative + "'");
    examples_.emplace_back(*a, ex);
  }
  if (!problems.empty()) throw Error(ErrorCode::validation, problems.front(), problems);

  auto model = std::make_shared<ValueModel>(table, build_grid(table));
  for (const auto& s : joint) model->add_statement(s);
  for (const auto& [a, ea] : examples_)
    for (const auto& [b, eb] : examples_) {
      if (ea.lower <= eb.upper) continue;
      ConstraintRow row;
      row.expr = model->utility(a) - model->utility(b);
      row.expr.add(model->epsilon_var(), -1.0);
      row.expr.normalize();
      row.name = "cvf_" + ea.alternative + "_" + eb.alternative;
      model->add_row(std::move(row));
    }
  model_ = model;
  reduced_ = std::make_unique<ReducedModel>(model_);
  const LpOutcome out = reduced_->max_epsilon();
  ++lp_calls_;
  if (out.status == lp::Status::optimal) {
    epsilon_ = out.epsilon;
    compatible_ = out.epsilon > kStrictness;
  }
}

void SortingEngine::require_compatible() const {
  if (!compatible_)
    throw Error(ErrorCode::incompatible_sorting, "assignment examples admit no compatible value function");
}

LinearExpr SortingEngine::side(std::size_t a, const QueryIndex& idx, bool left) const {
  if (idx.classic) return model_->utility(a);
  const int n = model_->n();
  for (int v : {idx.i, idx.k})
    if (v < 1 || v > n)
      throw Error(ErrorCode::index_out_of_range,
                  "indicator index " + std::to_string(v) + " outside 1.." + std::to_string(n));
  return model_->utility(Realization::uniform(a, left ? idx.i : idx.k));
}

double SortingEngine::solve(std::vector<ConstraintRow> rows) {
  for (auto& r : rows) r.expr.normalize();
  const LpOutcome out = reduced_->max_epsilon(rows);
  ++lp_calls_;
  return out.status == lp::Status::optimal ? out.epsilon : -std::numeric_limits<double>::infinity();
}

std::optional<ClassInterval> SortingEngine::possible(std::size_t a, const QueryIndex& idx) {
  require_compatible();
  model_->table().require_complete(a);
  const LinearExpr ua = side(a, idx, true);
  std::optional<ClassInterval> hull;
  for (int h = 1; h <= classes_.p(); ++h) {
    std::vector<ConstraintRow> rows;
    for (const auto& [b, ex] : examples_) {
      ConstraintRow r;
      if (ex.lower > h)
        r.expr = side(b, idx, false) - ua;
      else if (ex.upper < h)
        r.expr = ua - side(b, idx, false);
      else
        continue;
      r.expr.add(model_->epsilon_var(), -1.0);
      rows.push_back(std::move(r));
    }
    if (solve(std::move(rows)) <= kStrictness) continue;
    if (!hull)
      hull = ClassInterval{h, h};
    else
      hull->upper = h;
  }
  return hull;
}

std::optional<ClassInterval> SortingEngine::necessary(std::size_t a, const QueryIndex& idx) {
  require_compatible();
  model_->table().require_complete(a);
  const LinearExpr ua = side(a, idx, true);
  int lo = 1, hi = classes_.p();
  for (const auto& [b, ex] : examples_) {
    const LinearExpr ub = side(b, idx, false);
    // Some compatible U with U(a^(i)) >= U(b^(k)) lifts the lower bound.
    if (ex.lower > lo) {
      ConstraintRow r;
      r.expr = ua - ub;
      if (solve({r}) > kStrictness) lo = ex.lower;
    }
    if (ex.upper < hi) {
      ConstraintRow r;
      r.expr = ub - ua;
      if (solve({r}) > kStrictness) hi = ex.upper;
    }
  }
  if (lo > hi) return std::nullopt;
  return ClassInterval{lo, hi};
}

Assignment SortingEngine::assign(std::size_t a, const QueryIndex& idx) {
  Assignment out;
  out.possible = possible(a, idx);
  out.necessary = necessary(a, idx);
  return out;
}

Compatibility sorting_compatible(const PerformanceTable& table, const ClassStructure& classes,
                                 const std::vector<AssignmentExample>& examples) {
  SortingEngine engine(table, classes, examples);
  return {engine.compatible(), engine.epsilon()};
}

}  // namespace ror

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

// Additive value model over sub-marginal value functions u_{j,i}, one per
// criterion j and indicator i, sampled on the characteristic grid of each
// criterion, plus the auxiliary slack variable epsilon.

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ror/lp.hpp"
#include "ror/model.hpp"

namespace ror {

// Strictness threshold: "epsilon > 0" is decided as epsilon > kStrictness.
inline constexpr double kStrictness = 1e-6;
// Upper bound on epsilon, keeps the LP bounded when no strict row exists.
inline constexpr double kEpsilonCap = 1.0;
// Primal feasibility residual required from every accepted solve.
inline constexpr double kResidualTol = 1e-8;

struct CharacteristicGrid {
  // Per criterion: sorted distinct evaluation points x_j^1 < ... < x_j^m.
  std::vector<std::vector<double>> values;

  std::size_t levels(std::size_t j) const { return values.at(j).size(); }
  // 0-based position of x in criterion j's grid; throws if absent.
  std::size_t level_of(std::size_t j, double x) const;
};

// Throws MissingEvaluationUnsupported.
CharacteristicGrid build_grid(const PerformanceTable& table);

struct LinearExpr {
  std::vector<lp::Term> terms;

  void add(int var, double coef) { terms.push_back({var, coef}); }
  LinearExpr& operator+=(const LinearExpr& o);
  LinearExpr& operator-=(const LinearExpr& o);
  // Sorts by variable and merges duplicates, dropping zeros.
  LinearExpr& normalize();
  double evaluate(std::span<const double> x) const;
};

LinearExpr operator+(LinearExpr a, const LinearExpr& b);
LinearExpr operator-(LinearExpr a, const LinearExpr& b);

struct ConstraintRow {
  LinearExpr expr;
  lp::Sense sense = lp::Sense::ge;
  double rhs = 0.0;
  std::string name;
};

enum class StatementKind {
  holistic_strict,
  holistic_indifferent,
  intensity_strict,
  intensity_indifferent,
  marginal_strict,
  marginal_indifferent,
  marginal_intensity_strict,
  marginal_intensity_indifferent,
};

std::string_view to_string(StatementKind k);
std::optional<StatementKind> parse_statement_kind(std::string_view s);
bool is_strict(StatementKind k);
bool is_marginal(StatementKind k);
bool is_intensity(StatementKind k);
std::size_t operand_count(StatementKind k);

// One preference assertion of a decision maker on reference alternatives.
// Intensity kinds read (a, b) vs (c, d): a over b at least as much as c
// over d.
struct PreferenceStatement {
  std::string id;
  StatementKind kind = StatementKind::holistic_strict;
  std::vector<std::string> operands;
  std::optional<std::string> criterion;
  int credibility = 1;  // 1 = most credible
  std::string author = "dm";
};

// Throws ValidationError, UnknownReferenceAlternative, UnknownCriterion.
void validate_statement(const PerformanceTable& table, const PreferenceStatement& s);

struct LpOutcome {
  lp::Status status = lp::Status::infeasible;
  double epsilon = 0.0;              // optimal only
  std::vector<double> values;        // explicit variables, optimal only
  double max_residual = 0.0;
};

class ValueModel {
 public:
  // Builds the variable grid with monotonicity, anchoring and
  // normalization rows; epsilon is free.
  ValueModel(PerformanceTable table, CharacteristicGrid grid);

  const PerformanceTable& table() const noexcept { return table_; }
  const CharacteristicGrid& grid() const noexcept { return grid_; }
  int n() const noexcept { return table_.n(); }

  std::size_t num_variables() const noexcept { return static_cast<std::size_t>(epsilon_var_) + 1; }
  // u_{j,i}(x_j^{level+1}); i is 1-based, level 0-based.
  int u_var(std::size_t j, int i, std::size_t level) const;
  int epsilon_var() const noexcept { return epsilon_var_; }

  std::size_t num_base_rows() const noexcept { return num_base_rows_; }
  const std::vector<ConstraintRow>& rows() const noexcept { return rows_; }

  // U(a) = sum_j sum_i u_{j,i}(g_j^i(a)).
  LinearExpr utility(std::size_t a) const;
  // U of a fictitious alternative: sum_j sum_r u_{j,r}(g_j^{sel(j)}(a)).
  LinearExpr utility(const Realization& r) const;
  // U_j(a) = sum_i u_{j,i}(g_j^i(a)).
  LinearExpr marginal_utility(std::size_t j, std::size_t a) const;

  // Throws UnknownReferenceAlternative, UnknownCriterion, ValidationError.
  std::vector<ConstraintRow> statement_constraints(const PreferenceStatement& s) const;
  void add_statement(const PreferenceStatement& s);
  void add_row(ConstraintRow row) { rows_.push_back(std::move(row)); }

  // Explicit LP: maximize epsilon, epsilon <= cap.
  lp::Problem to_problem() const;
  std::string to_lp_text() const { return lp::to_lp_format(to_problem()); }

 private:
  PerformanceTable table_;
  CharacteristicGrid grid_;
  std::vector<int> offset_;   // first u variable of criterion j
  std::vector<int> levels_;   // per (a, j, i): grid level of g_j^i(a); -1 if missing
  int epsilon_var_ = 0;
  std::size_t num_base_rows_ = 0;
  std::vector<ConstraintRow> rows_;

  int level_at(std::size_t a, std::size_t j, int i) const;
};

ValueModel base_constraints(const PerformanceTable& table, CharacteristicGrid grid);

// Maximizes epsilon over the explicit model. Throws SolverFailure on
// numerical breakdown (unbounded result or residual above kResidualTol).
LpOutcome max_epsilon(const ValueModel& model, const lp::Solver& solver = lp::default_solver());

// Increment form used for repeated solves: u_{j,i}(x^k) = sum_{l<=k} d_{j,i,l}
// with d >= 0, which eliminates monotonicity and anchoring rows. Solutions
// are mapped back and checked against every explicit row.
class ReducedModel {
 public:
  explicit ReducedModel(std::shared_ptr<const ValueModel> model);

  const ValueModel& model() const noexcept { return *model_; }

  // Maps an explicit-variable expression to increment variables.
  LinearExpr reduce(const LinearExpr& e) const;

  // Maximizes epsilon with the model rows plus `extra` (explicit space).
  LpOutcome max_epsilon(std::span<const ConstraintRow> extra = {},
                        const lp::Solver& solver = lp::default_solver()) const;

  // Base problem in increment space; callers may add rows and variables.
  const lp::Problem& problem() const noexcept { return problem_; }
  int epsilon_var() const noexcept { return epsilon_var_; }
  // Increment solution -> explicit variable vector.
  std::vector<double> expand(std::span<const double> reduced) const;
  // Largest violation of the explicit rows plus `extra` at `values`.
  double explicit_residual(std::span<const double> values, std::span<const ConstraintRow> extra) const;

 private:
  std::shared_ptr<const ValueModel> model_;
  lp::Problem problem_;
  int epsilon_var_ = 0;
  // Explicit u variable -> first increment variable of its (j,i) block and
  // its level; level 0 has no increments.
  std::vector<int> block_start_;
  std::vector<int> level_;
};

struct Compatibility {
  bool compatible = false;
  std::optional<double> epsilon;  // absent when the model is infeasible
};

Compatibility check_compatibility(const PerformanceTable& table,
                                  std::span<const PreferenceStatement> statements);

}  // namespace ror

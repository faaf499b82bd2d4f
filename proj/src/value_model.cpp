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

#include "ror/value_model.hpp"

#include <algorithm>
#include <cmath>

#include "ror/error.hpp"

namespace ror {

std::size_t CharacteristicGrid::level_of(std::size_t j, double x) const {
  const auto& v = values.at(j);
  auto it = std::lower_bound(v.begin(), v.end(), x);
  if (it == v.end() || *it != x)
    throw Error(ErrorCode::validation, "value not on characteristic grid");
  return static_cast<std::size_t>(it - v.begin());
}

CharacteristicGrid build_grid(const PerformanceTable& table) {
  CharacteristicGrid g;
  g.values.resize(table.num_criteria());
  for (std::size_t a = 0; a < table.num_alternatives(); ++a) table.require_complete(a);
  for (std::size_t j = 0; j < table.num_criteria(); ++j) {
    auto& v = g.values[j];
    for (std::size_t a = 0; a < table.num_alternatives(); ++a)
      for (double x : table.evaluation(a, j).points()) v.push_back(x);
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }
  return g;
}

LinearExpr& LinearExpr::operator+=(const LinearExpr& o) {
  terms.insert(terms.end(), o.terms.begin(), o.terms.end());
  return *this;
}

LinearExpr& LinearExpr::operator-=(const LinearExpr& o) {
  for (const auto& t : o.terms) terms.push_back({t.var, -t.coef});
  return *this;
}

LinearExpr& LinearExpr::normalize() {
  std::sort(terms.begin(), terms.end(), [](const lp::Term& a, const lp::Term& b) { return a.var < b.var; });
  std::vector<lp::Term> merged;
  for (const auto& t : terms) {
    if (!merged.empty() && merged.back().var == t.var)
      merged.back().coef += t.coef;
    else
      merged.push_back(t);
  }
  std::erase_if(merged, [](const lp::Term& t) { return t.coef == 0.0; });
  terms = std::move(merged);
  return *this;
}

double LinearExpr::evaluate(std::span<const double> x) const {
  double s = 0.0;
  for (const auto& t : terms) s += t.coef * x[static_cast<std::size_t>(t.var)];
  return s;
}

LinearExpr operator+(LinearExpr a, const LinearExpr& b) { return a += b; }
LinearExpr operator-(LinearExpr a, const LinearExpr& b) { return a -= b; }

namespace {

struct KindName {
  StatementKind kind;
  std::string_view name;
};

constexpr KindName kKindNames[] = {
    {StatementKind::holistic_strict, "holistic-strict"},
    {StatementKind::holistic_indifferent, "holistic-indiff"},
    {StatementKind::intensity_strict, "intensity-strict"},
    {StatementKind::intensity_indifferent, "intensity-indiff"},
    {StatementKind::marginal_strict, "marginal-strict"},
    {StatementKind::marginal_indifferent, "marginal-indiff"},
    {StatementKind::marginal_intensity_strict, "marginal-intensity-strict"},
    {StatementKind::marginal_intensity_indifferent, "marginal-intensity-indiff"},
};

}  // namespace

std::string_view to_string(StatementKind k) {
  for (const auto& kn : kKindNames)
    if (kn.kind == k) return kn.name;
  return "unknown";
}

std::optional<StatementKind> parse_statement_kind(std::string_view s) {
  std::string key(s);
  constexpr std::string_view kLong = "-indifferent";
  if (key.ends_with(kLong)) key.replace(key.size() - kLong.size(), kLong.size(), "-indiff");
  for (const auto& kn : kKindNames)
    if (kn.name == key) return kn.kind;
  return std::nullopt;
}

bool is_strict(StatementKind k) {
  return k == StatementKind::holistic_strict || k == StatementKind::intensity_strict ||
         k == StatementKind::marginal_strict || k == StatementKind::marginal_intensity_strict;
}

bool is_marginal(StatementKind k) {
  return k == StatementKind::marginal_strict || k == StatementKind::marginal_indifferent ||
         k == StatementKind::marginal_intensity_strict ||
         k == StatementKind::marginal_intensity_indifferent;
}

bool is_intensity(StatementKind k) {
  return k == StatementKind::intensity_strict || k == StatementKind::intensity_indifferent ||
         k == StatementKind::marginal_intensity_strict ||
         k == StatementKind::marginal_intensity_indifferent;
}

std::size_t operand_count(StatementKind k) { return is_intensity(k) ? 4 : 2; }

ValueModel::ValueModel(PerformanceTable table, CharacteristicGrid grid)
    : table_(std::move(table)), grid_(std::move(grid)) {
  const std::size_t m = table_.num_criteria();
  const int n = table_.n();
  if (grid_.values.size() != m)
    throw Error(ErrorCode::validation, "grid does not match the table's criteria");
  int next = 0;
  for (std::size_t j = 0; j < m; ++j) {
    offset_.push_back(next);
    next += n * static_cast<int>(grid_.levels(j));
  }
  epsilon_var_ = next;

  levels_.assign(table_.num_alternatives() * m * static_cast<std::size_t>(n), -1);
  for (std::size_t a = 0; a < table_.num_alternatives(); ++a)
    for (std::size_t j = 0; j < m; ++j) {
      const auto& cell = table_.evaluation(a, j);
      if (cell.is_missing()) continue;
      for (int i = 1; i <= n; ++i)
        levels_[(a * m + j) * static_cast<std::size_t>(n) + static_cast<std::size_t>(i - 1)] =
            static_cast<int>(grid_.level_of(j, cell.point(i)));
    }

  for (std::size_t j = 0; j < m; ++j)
    for (int i = 1; i <= n; ++i)
      for (std::size_t k = 1; k < grid_.levels(j); ++k) {
        ConstraintRow r;
        r.expr.add(u_var(j, i, k), 1.0);
        r.expr.add(u_var(j, i, k - 1), -1.0);
        r.name = "mono_" + std::to_string(j) + "_" + std::to_string(i) + "_" + std::to_string(k);
        rows_.push_back(std::move(r));
      }
  for (std::size_t j = 0; j < m; ++j)
    for (int i = 1; i <= n; ++i) {
      ConstraintRow r;
      r.expr.add(u_var(j, i, 0), 1.0);
      r.sense = lp::Sense::eq;
      r.name = "anchor_" + std::to_string(j) + "_" + std::to_string(i);
      rows_.push_back(std::move(r));
    }
  ConstraintRow norm;
  for (std::size_t j = 0; j < m; ++j)
    for (int i = 1; i <= n; ++i)
      if (grid_.levels(j) > 0) norm.expr.add(u_var(j, i, grid_.levels(j) - 1), 1.0);
  norm.sense = lp::Sense::eq;
  norm.rhs = 1.0;
  norm.name = "normalization";
  rows_.push_back(std::move(norm));
  num_base_rows_ = rows_.size();
}

int ValueModel::u_var(std::size_t j, int i, std::size_t level) const {
  return offset_.at(j) + (i - 1) * static_cast<int>(grid_.levels(j)) + static_cast<int>(level);
}

int ValueModel::level_at(std::size_t a, std::size_t j, int i) const {
  const int l = levels_.at((a * table_.num_criteria() + j) * static_cast<std::size_t>(n()) +
                           static_cast<std::size_t>(i - 1));
  if (l < 0)
    throw Error(ErrorCode::missing_evaluation_unsupported,
                "alternative '" + table_.alternative_id(a) + "' has a missing evaluation");
  return l;
}

LinearExpr ValueModel::utility(std::size_t a) const {
  LinearExpr e;
  for (std::size_t j = 0; j < table_.num_criteria(); ++j) e += marginal_utility(j, a);
  return e;
}

LinearExpr ValueModel::utility(const Realization& r) const {
  if (r.base >= table_.num_alternatives())
    throw Error(ErrorCode::unknown_alternative, "alternative index out of range");
  LinearExpr e;
  for (std::size_t j = 0; j < table_.num_criteria(); ++j) {
    const int sel = r.index_for(j);
    if (sel < 1 || sel > n())
      throw Error(ErrorCode::index_out_of_range,
                  "indicator index " + std::to_string(sel) + " outside 1.." + std::to_string(n()));
    const auto level = static_cast<std::size_t>(level_at(r.base, j, sel));
    for (int i = 1; i <= n(); ++i) e.add(u_var(j, i, level), 1.0);
  }
  return e;
}

LinearExpr ValueModel::marginal_utility(std::size_t j, std::size_t a) const {
  if (a >= table_.num_alternatives())
    throw Error(ErrorCode::unknown_alternative, "alternative index out of range");
  LinearExpr e;
  for (int i = 1; i <= n(); ++i)
    e.add(u_var(j, i, static_cast<std::size_t>(level_at(a, j, i))), 1.0);
  return e;
}

void validate_statement(const PerformanceTable& table, const PreferenceStatement& s) {
  const std::size_t want = operand_count(s.kind);
  if (s.operands.size() != want)
    throw Error(ErrorCode::validation, "statement '" + s.id + "' (" + std::string(to_string(s.kind)) +
                                           ") needs " + std::to_string(want) + " operands");
  if (s.credibility < 1)
    throw Error(ErrorCode::validation, "statement '" + s.id + "': credibility level must be >= 1");
  for (const auto& id : s.operands) {
    auto a = table.find(id);
    if (!a || !table.is_reference(*a))
      throw Error(ErrorCode::unknown_reference_alternative,
                  "statement '" + s.id + "': '" + id + "' is not a reference alternative");
  }
  if (is_marginal(s.kind)) {
    if (!s.criterion) throw Error(ErrorCode::validation, "statement '" + s.id + "' needs a criterion");
    table.criterion_index(*s.criterion);
  } else if (s.criterion) {
    throw Error(ErrorCode::validation,
                "statement '" + s.id + "': holistic statements take no criterion");
  }
}

std::vector<ConstraintRow> ValueModel::statement_constraints(const PreferenceStatement& s) const {
  validate_statement(table_, s);
  std::vector<std::size_t> ops;
  for (const auto& id : s.operands) ops.push_back(table_.index_of(id));
  std::optional<std::size_t> crit;
  if (s.criterion) crit = table_.criterion_index(*s.criterion);
  auto value = [&](std::size_t a) { return crit ? marginal_utility(*crit, a) : utility(a); };

  LinearExpr diff = value(ops[0]) - value(ops[1]);
  if (is_intensity(s.kind)) diff -= value(ops[2]) - value(ops[3]);
  if (is_strict(s.kind)) diff.add(epsilon_var_, -1.0);
  diff.normalize();

  ConstraintRow row;
  row.expr = std::move(diff);
  row.sense = is_strict(s.kind) ? lp::Sense::ge : lp::Sense::eq;
  row.name = "stmt_" + (s.id.empty() ? std::string("anon") : s.id);
  return {std::move(row)};
}

void ValueModel::add_statement(const PreferenceStatement& s) {
  for (auto& r : statement_constraints(s)) rows_.push_back(std::move(r));
}

lp::Problem ValueModel::to_problem() const {
  lp::Problem p;
  p.maximize = true;
  const std::size_t nv = num_variables();
  p.vars.resize(nv);
  for (std::size_t j = 0; j < table_.num_criteria(); ++j)
    for (int i = 1; i <= n(); ++i)
      for (std::size_t k = 0; k < grid_.levels(j); ++k) {
        auto& v = p.vars[static_cast<std::size_t>(u_var(j, i, k))];
        v.lower = -lp::kInf;
        v.name = "u_" + table_.criteria()[j].id + "_" + std::to_string(i) + "_" + std::to_string(k + 1);
      }
  auto& eps = p.vars[static_cast<std::size_t>(epsilon_var_)];
  eps.lower = -lp::kInf;
  eps.upper = kEpsilonCap;
  eps.name = "epsilon";
  p.objective = {{epsilon_var_, 1.0}};
  for (const auto& r : rows_) p.rows.push_back({r.expr.terms, r.sense, r.rhs, r.name});
  return p;
}

ValueModel base_constraints(const PerformanceTable& table, CharacteristicGrid grid) {
  return ValueModel(table, std::move(grid));
}

namespace {

LpOutcome finish(const lp::Solution& s, int eps_var, std::vector<double> values, double residual) {
  LpOutcome out;
  if (s.status == lp::Status::infeasible) return out;
  if (s.status == lp::Status::unbounded)
    throw Error(ErrorCode::solver_failure, "epsilon maximization reported unbounded");
  if (!(residual <= kResidualTol))
    throw Error(ErrorCode::solver_failure,
                "primal residual " + std::to_string(residual) + " exceeds tolerance");
  out.status = lp::Status::optimal;
  out.epsilon = values[static_cast<std::size_t>(eps_var)];
  out.values = std::move(values);
  out.max_residual = residual;
  return out;
}

}  // namespace

LpOutcome max_epsilon(const ValueModel& model, const lp::Solver& solver) {
  const lp::Problem p = model.to_problem();
  const lp::Solution s = solver.solve(p);
  if (s.status != lp::Status::optimal) return finish(s, model.epsilon_var(), {}, 0.0);
  const double res = lp::max_residual(p, s.x);
  return finish(s, model.epsilon_var(), s.x, res);
}

ReducedModel::ReducedModel(std::shared_ptr<const ValueModel> model) : model_(std::move(model)) {
  const ValueModel& vm = *model_;
  const auto& grid = vm.grid();
  const int n = vm.n();
  block_start_.assign(vm.num_variables(), -1);
  level_.assign(vm.num_variables(), 0);
  int next = 0;
  for (std::size_t j = 0; j < grid.values.size(); ++j)
    for (int i = 1; i <= n; ++i) {
      const std::size_t m = grid.levels(j);
      for (std::size_t k = 0; k < m; ++k) {
        const auto u = static_cast<std::size_t>(vm.u_var(j, i, k));
        block_start_[u] = next;
        level_[u] = static_cast<int>(k);
      }
      for (std::size_t k = 1; k < m; ++k) {
        lp::Variable v;
        v.name = "d_" + vm.table().criteria()[j].id + "_" + std::to_string(i) + "_" + std::to_string(k + 1);
        problem_.vars.push_back(std::move(v));
      }
      next += static_cast<int>(m > 0 ? m - 1 : 0);
    }
  epsilon_var_ = next;
  lp::Variable eps;
  eps.lower = -lp::kInf;
  eps.upper = kEpsilonCap;
  eps.name = "epsilon";
  problem_.vars.push_back(std::move(eps));
  problem_.maximize = true;
  problem_.objective = {{epsilon_var_, 1.0}};

  // Monotonicity and anchoring hold by construction; keep the remainder.
  const auto& rows = vm.rows();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const bool structural = r + 1 < vm.num_base_rows();
    if (structural) continue;
    LinearExpr e = reduce(rows[r].expr);
    problem_.rows.push_back({std::move(e.terms), rows[r].sense, rows[r].rhs, rows[r].name});
  }
}

LinearExpr ReducedModel::reduce(const LinearExpr& e) const {
  LinearExpr out;
  const int eps = model_->epsilon_var();
  for (const auto& t : e.terms) {
    if (t.var == eps) {
      out.add(epsilon_var_, t.coef);
      continue;
    }
    const auto u = static_cast<std::size_t>(t.var);
    const int start = block_start_.at(u);
    for (int l = 0; l < level_[u]; ++l) out.add(start + l, t.coef);
  }
  out.normalize();
  return out;
}

std::vector<double> ReducedModel::expand(std::span<const double> reduced) const {
  const ValueModel& vm = *model_;
  std::vector<double> x(vm.num_variables(), 0.0);
  for (std::size_t u = 0; u + 1 < x.size(); ++u) {
    double s = 0.0;
    const int start = block_start_[u];
    for (int l = 0; l < level_[u]; ++l) s += reduced[static_cast<std::size_t>(start + l)];
    x[u] = s;
  }
  x.back() = reduced[static_cast<std::size_t>(epsilon_var_)];
  return x;
}

double ReducedModel::explicit_residual(std::span<const double> values,
                                       std::span<const ConstraintRow> extra) const {
  double worst = 0.0;
  auto check = [&](const ConstraintRow& r) {
    const double lhs = r.expr.evaluate(values);
    double v = 0.0;
    switch (r.sense) {
      case lp::Sense::ge: v = r.rhs - lhs; break;
      case lp::Sense::le: v = lhs - r.rhs; break;
      case lp::Sense::eq: v = std::abs(lhs - r.rhs); break;
    }
    worst = std::max(worst, v);
  };
  for (const auto& r : model_->rows()) check(r);
  for (const auto& r : extra) check(r);
  worst = std::max(worst, values.back() - kEpsilonCap);
  return worst;
}

LpOutcome ReducedModel::max_epsilon(std::span<const ConstraintRow> extra, const lp::Solver& solver) const {
  lp::Problem p = problem_;
  for (const auto& r : extra) {
    LinearExpr e = reduce(r.expr);
    p.rows.push_back({std::move(e.terms), r.sense, r.rhs, r.name});
  }
  const lp::Solution s = solver.solve(p);
  if (s.status != lp::Status::optimal) return finish(s, model_->epsilon_var(), {}, 0.0);
  std::vector<double> x = expand(s.x);
  const double res = std::max(lp::max_residual(p, s.x), explicit_residual(x, extra));
  return finish(s, model_->epsilon_var(), std::move(x), res);
}

Compatibility check_compatibility(const PerformanceTable& table,
                                  std::span<const PreferenceStatement> statements) {
  auto model = std::make_shared<ValueModel>(table, build_grid(table));
  for (const auto& s : statements) model->add_statement(s);
  const LpOutcome out = ReducedModel(model).max_epsilon();
  Compatibility c;
  if (out.status != lp::Status::optimal) return c;
  c.epsilon = out.epsilon;
  c.compatible = out.epsilon > kStrictness;
  return c;
}

}  // namespace ror

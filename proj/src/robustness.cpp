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

#include "ror/robustness.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "ror/error.hpp"

namespace ror {

namespace {

// Relaxation constants: every holistic or marginal row moves by at most 1
// over the normalized polytope, an intensity row by at most 2.
constexpr double kBigM = 2.0;
constexpr double kBigMIntensity = 3.0;
// Statement slack used while diagnosing; twice the strictness threshold so
// that every relaxed optimum is compatible under check_compatibility.
constexpr double kDiagnosisSlack = 2 * kStrictness;
// The big-M rows turn an integrality error e into a row error of M * e, so
// the indicator tolerance must sit far below the strictness threshold.
constexpr double kIndicatorTol = 1e-10;
// b counts above a when U(b') - U(a') exceeds this; the extra residual band
// keeps ties produced by tight statement rows out of the count.
constexpr double kRankThreshold = kStrictness + kResidualTol;

lp::Problem slack_polytope(const RorEngine& engine) {
  if (!engine.compatible())
    throw Error(ErrorCode::incompatible_session,
                "no value function is compatible with the preference information");
  lp::Problem p = engine.reduced().problem();
  auto& eps = p.vars[static_cast<std::size_t>(engine.reduced().epsilon_var())];
  eps.lower = kStrictness;
  p.objective.clear();
  return p;
}

lp::Row to_row(LinearExpr e, lp::Sense sense, double rhs, std::string name) {
  e.normalize();
  return {std::move(e.terms), sense, rhs, std::move(name)};
}

int rank_milp(const RorEngine& engine, std::size_t a, const QueryIndex& idx, bool best,
              const lp::MilpOptions& opts) {
  lp::Problem p = slack_polytope(engine);
  const ReducedModel& red = engine.reduced();
  const LinearExpr ua = red.reduce(engine.side_utility(a, idx, true));
  const std::size_t na = engine.table().num_alternatives();
  for (std::size_t b = 0; b < na; ++b) {
    if (b == a) continue;
    lp::Variable y;
    y.upper = 1.0;
    y.integer = true;
    y.name = "y_" + engine.table().alternative_id(b);
    const int yv = p.add_var(std::move(y));
    LinearExpr diff = red.reduce(engine.side_utility(b, idx, false)) - ua;
    diff.add(yv, -2.0);
    // best: y_b = 0 keeps b within the threshold of a.
    // worst: y_b = 1 requires b above the threshold by one more residual band.
    if (best)
      p.add_row(to_row(std::move(diff), lp::Sense::le, kRankThreshold, "rank_" + std::to_string(b)));
    else
      p.add_row(to_row(std::move(diff), lp::Sense::ge, kRankThreshold + kResidualTol - 2.0,
                       "rank_" + std::to_string(b)));
    p.objective.push_back({yv, 1.0});
  }
  p.maximize = !best;
  if (p.objective.empty()) return 1;
  lp::MilpOptions o = opts;
  o.integral_objective = true;
  o.integrality_tol = std::min(o.integrality_tol, kIndicatorTol);
  const lp::MilpSolution s = lp::solve_milp(p, lp::default_solver(), o);
  if (s.status != lp::Status::optimal || !s.proven)
    throw Error(ErrorCode::milp_failure, std::string("rank program for '") +
                                             engine.table().alternative_id(a) + "' ended " +
                                             (s.proven ? lp::to_string(s.status) : "at the node limit"));
  return 1 + static_cast<int>(std::lround(s.objective));
}

}  // namespace

RankInterval extreme_ranks(const RorEngine& engine, std::size_t a, const QueryIndex& idx,
                           const lp::MilpOptions& opts) {
  engine.table().require_complete(a);
  return {rank_milp(engine, a, idx, true, opts), rank_milp(engine, a, idx, false, opts)};
}

std::vector<RankInterval> extreme_ranks_all(const RorEngine& engine, const QueryIndex& idx,
                                            const lp::MilpOptions& opts) {
  std::vector<RankInterval> out;
  for (std::size_t a = 0; a < engine.table().num_alternatives(); ++a)
    out.push_back(extreme_ranks(engine, a, idx, opts));
  return out;
}

std::vector<std::vector<double>> sample_vertices(const RorEngine& engine, int count,
                                                 std::uint64_t seed) {
  lp::Problem p = slack_polytope(engine);
  p.maximize = true;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  const int eps = engine.reduced().epsilon_var();
  std::vector<std::vector<double>> out;
  for (int s = 0; s < count; ++s) {
    p.objective.clear();
    for (int v = 0; v < eps; ++v) p.objective.push_back({v, coef(rng)});
    const lp::Solution sol = lp::default_solver().solve(p);
    if (sol.status != lp::Status::optimal)
      throw Error(ErrorCode::solver_failure, "vertex sampling LP not optimal");
    out.push_back(engine.reduced().expand(sol.x));
  }
  return out;
}

int rank_at(const RorEngine& engine, std::size_t a, const QueryIndex& idx,
            const std::vector<double>& values) {
  const double ua = engine.side_utility(a, idx, true).evaluate(values);
  int rank = 1;
  for (std::size_t b = 0; b < engine.table().num_alternatives(); ++b)
    if (b != a && engine.side_utility(b, idx, false).evaluate(values) - ua > kRankThreshold) ++rank;
  return rank;
}

namespace {

struct Diagnosis {
  lp::Problem problem;
  std::vector<int> v;  // indicator per statement
};

Diagnosis relaxed_program(const PerformanceTable& table,
                          const std::vector<PreferenceStatement>& statements) {
  auto model = std::make_shared<ValueModel>(table, build_grid(table));
  ReducedModel red(model);
  Diagnosis d;
  d.problem = red.problem();
  auto& eps = d.problem.vars[static_cast<std::size_t>(red.epsilon_var())];
  eps.lower = eps.upper = kDiagnosisSlack;
  d.problem.objective.clear();
  for (std::size_t s = 0; s < statements.size(); ++s) {
    lp::Variable var;
    var.upper = 1.0;
    var.integer = true;
    var.name = "v_" + statements[s].id;
    const int v = d.problem.add_var(std::move(var));
    d.v.push_back(v);
    d.problem.objective.push_back({v, 1.0});
    const double big = is_intensity(statements[s].kind) ? kBigMIntensity : kBigM;
    for (const auto& row : model->statement_constraints(statements[s])) {
      LinearExpr e = red.reduce(row.expr);
      if (row.sense != lp::Sense::le) {
        LinearExpr ge = e;
        ge.add(v, big);
        d.problem.add_row(to_row(std::move(ge), lp::Sense::ge, row.rhs, row.name + "_ge"));
      }
      if (row.sense != lp::Sense::ge) {
        LinearExpr le = e;
        le.add(v, -big);
        d.problem.add_row(to_row(std::move(le), lp::Sense::le, row.rhs, row.name + "_le"));
      }
    }
  }
  return d;
}

std::vector<PreferenceStatement> without(const std::vector<PreferenceStatement>& all,
                                         const std::vector<std::size_t>& drop) {
  std::vector<PreferenceStatement> out;
  for (std::size_t s = 0; s < all.size(); ++s)
    if (std::find(drop.begin(), drop.end(), s) == drop.end()) out.push_back(all[s]);
  return out;
}

bool compatible_without(const PerformanceTable& table, const std::vector<PreferenceStatement>& all,
                        const std::vector<std::size_t>& drop) {
  const auto rest = without(all, drop);
  return check_compatibility(table, rest).compatible;
}

}  // namespace

InconsistencyReport find_inconsistencies(const PerformanceTable& table,
                                         const std::vector<PreferenceStatement>& statements,
                                         const DiagnosisOptions& opts) {
  InconsistencyReport report;
  if (check_compatibility(table, statements).compatible) return report;

  Diagnosis d = relaxed_program(table, statements);
  long nodes_left = opts.node_budget;
  std::vector<std::vector<std::size_t>> found;

  // Returns nullopt on budget exhaustion; status infeasible ends enumeration.
  auto run = [&](const lp::Problem& p) -> std::optional<lp::MilpSolution> {
    if (nodes_left <= 0) return std::nullopt;
    lp::MilpOptions o;
    o.node_limit = nodes_left;
    o.integral_objective = true;
    o.integrality_tol = kIndicatorTol;
    lp::MilpSolution s = lp::solve_milp(p, lp::default_solver(), o);
    nodes_left -= s.nodes;
    if (!s.proven) return std::nullopt;
    return s;
  };

  while (static_cast<int>(found.size()) < opts.max_sets) {
    d.problem.maximize = false;
    auto first = run(d.problem);
    if (!first) {
      report.exhaustive = false;
      break;
    }
    if (first->status != lp::Status::optimal) break;
    const double card = std::round(first->objective);

    // Lexicographic tie-break: admit statements in insertion order whenever
    // an optimum of the same size still contains them.
    lp::Problem fixed = d.problem;
    lp::Row cardinality{{}, lp::Sense::eq, card, "cardinality"};
    for (int v : d.v) cardinality.terms.push_back({v, 1.0});
    fixed.add_row(cardinality);
    std::vector<std::size_t> chosen;
    bool budget_hit = false;
    for (std::size_t s = 0; s < d.v.size() && static_cast<double>(chosen.size()) < card; ++s) {
      auto& var = fixed.vars[static_cast<std::size_t>(d.v[s])];
      var.lower = 1.0;
      auto trial = run(fixed);
      if (!trial) {
        budget_hit = true;
        break;
      }
      if (trial->status == lp::Status::optimal) {
        chosen.push_back(s);
      } else {
        var.lower = 0.0;
        var.upper = 0.0;
      }
    }
    if (budget_hit) {
      report.exhaustive = false;
      break;
    }

    if (compatible_without(table, statements, chosen)) {
      for (std::size_t i = 0; i < chosen.size();) {
        auto smaller = chosen;
        smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(i));
        if (compatible_without(table, statements, smaller))
          chosen = std::move(smaller);
        else
          ++i;
      }
      found.push_back(chosen);
    }
    lp::Row cut{{}, lp::Sense::le, static_cast<double>(chosen.size()) - 1.0, "nogood"};
    for (std::size_t s : chosen) cut.terms.push_back({d.v[s], 1.0});
    d.problem.add_row(std::move(cut));
  }
  if (static_cast<int>(found.size()) >= opts.max_sets) {
    // Enumeration is complete only if no further set exists.
    d.problem.maximize = false;
    auto more = run(d.problem);
    report.exhaustive = more && more->status != lp::Status::optimal;
  }

  for (std::size_t i = 0; i < found.size(); ++i) {
    bool contains_other = false;
    for (std::size_t j = 0; j < found.size(); ++j)
      if (i != j && found[j].size() < found[i].size() &&
          std::includes(found[i].begin(), found[i].end(), found[j].begin(), found[j].end()))
        contains_other = true;
    if (contains_other) continue;
    std::vector<std::string> ids;
    for (std::size_t s : found[i]) ids.push_back(statements[s].id);
    report.minimal_sets.push_back(std::move(ids));
  }
  return report;
}

}  // namespace ror

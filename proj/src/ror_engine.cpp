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

#include "ror/ror_engine.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "ror/dominance.hpp"
#include "ror/error.hpp"

namespace ror {

namespace {

// A stored solution proves a bit only with this much room above the
// strictness threshold, which absorbs the solver's residual.
constexpr double kWitnessMargin = 1e-7;
constexpr double kWitnessTieTol = 1e-9;
constexpr std::size_t kMaxWitnesses = 256;

}  // namespace

std::string_view to_string(Family f) { return f == Family::necessary ? "necessary" : "possible"; }

std::string relation_tag(Family f, const QueryIndex& idx) {
  std::string tag = f == Family::necessary ? "nec" : "pos";
  if (!idx.classic) tag += "(" + std::to_string(idx.i) + "," + std::to_string(idx.k) + ")";
  return tag;
}

bool index_included(const QueryIndex& x, const QueryIndex& y, int n) {
  if (x.classic && y.classic) return true;
  if (!x.classic && !y.classic) return x.i <= y.i && x.k >= y.k;
  if (!x.classic) return x.i == 1 && x.k == n;
  return y.i == n && y.k == 1;
}

RorEngine::RorEngine(const PerformanceTable& table, std::vector<PreferenceStatement> statements,
                     EngineOptions options)
    : table_(table), statements_(std::move(statements)), options_(options) {
  if (table_.has_missing()) {
    if (!options_.collapse_missing)
      throw Error(ErrorCode::missing_evaluation_unsupported,
                  "table has missing evaluations; collapse to two points to query strong or weak "
                  "relations");
    table_ = collapse_to_two_point(table_);
    collapsed_ = true;
  }
  auto model = std::make_shared<ValueModel>(table_, build_grid(table_));
  for (const auto& s : statements_) model->add_statement(s);
  model_ = model;
  reduced_ = std::make_unique<ReducedModel>(model_);
  const LpOutcome out = reduced_->max_epsilon();
  ++stats_.lp_calls;
  stats_.max_residual = std::max(stats_.max_residual, out.max_residual);
  if (out.status == lp::Status::optimal) {
    epsilon_ = out.epsilon;
    compatible_ = out.epsilon > kStrictness;
    remember_witness(out);
  }
}

void RorEngine::check_query(const QueryIndex& idx) const {
  if (!compatible_)
    throw Error(ErrorCode::incompatible_session,
                "no value function is compatible with the preference information");
  if (idx.classic) {
    if (collapsed_)
      throw Error(ErrorCode::missing_evaluation_unsupported,
                  "only strong and weak relations are available with missing evaluations");
    return;
  }
  const int n = table_.n();
  for (int v : {idx.i, idx.k})
    if (v < 1 || v > n)
      throw Error(ErrorCode::index_out_of_range,
                  "indicator index " + std::to_string(v) + " outside 1.." + std::to_string(n));
  if (collapsed_ && idx.i == idx.k)
    throw Error(ErrorCode::missing_evaluation_unsupported,
                "only strong and weak relations are available with missing evaluations");
}

LinearExpr RorEngine::side_utility(std::size_t a, const QueryIndex& idx, bool left) const {
  if (idx.classic) return model_->utility(a);
  return model_->utility(Realization::uniform(a, left ? idx.i : idx.k));
}

std::vector<std::int8_t>& RorEngine::bits(Family f, const QueryIndex& idx) {
  auto& v = known_[{f, idx}];
  if (v.empty()) v.assign(table_.num_alternatives() * table_.num_alternatives(), -1);
  return v;
}

std::optional<bool> RorEngine::lookup(Family f, const QueryIndex& idx, std::size_t a,
                                      std::size_t b) const {
  auto it = known_.find({f, idx});
  if (it == known_.end()) return std::nullopt;
  const auto v = it->second[a * table_.num_alternatives() + b];
  if (v < 0) return std::nullopt;
  return v == 1;
}

std::optional<bool> RorEngine::certificate(Family, const QueryIndex& idx, std::size_t a,
                                           std::size_t b) const {
  // Dominance forces U(a') >= U(b') on the whole base polytope, so the
  // necessary bit holds and the possible LP reaches the session optimum.
  const bool dom = idx.classic ? dominates(table_, a, b) : ik_dominates(table_, a, b, idx.i, idx.k);
  if (dom) return true;
  return std::nullopt;
}

std::optional<bool> RorEngine::infer(Family f, const QueryIndex& idx, std::size_t a,
                                     std::size_t b) const {
  const std::size_t na = table_.num_alternatives();
  const int n = table_.n();
  for (const auto& [key, v] : known_) {
    const auto& [fam, y] = key;
    if (fam == f) {
      const auto bit = v[a * na + b];
      if (bit == 1 && index_included(y, idx, n)) return true;
      if (bit == 0 && index_included(idx, y, n)) return false;
    } else if (v[b * na + a] == 0 && index_included(y.swapped(), idx, n)) {
      // not P_y(b,a) => N_y'(a,b); not N_y(b,a) => P_y'(a,b).
      return true;
    }
  }
  if (witnesses_.empty()) return std::nullopt;
  const LinearExpr left = side_utility(a, idx, true);
  const LinearExpr right = side_utility(b, idx, false);
  for (const auto& w : witnesses_) {
    const double diff = left.evaluate(w.values) - right.evaluate(w.values);
    if (f == Family::possible && diff >= -kWitnessTieTol) return true;
    if (f == Family::necessary && std::min(w.slack, -diff) > kStrictness + kWitnessMargin) return false;
  }
  return std::nullopt;
}

void RorEngine::remember_witness(const LpOutcome& out) {
  if (out.status != lp::Status::optimal || witnesses_.size() >= kMaxWitnesses) return;
  const auto& x = out.values;
  const double eps = x[static_cast<std::size_t>(model_->epsilon_var())];
  double slack = kEpsilonCap;
  const auto& rows = model_->rows();
  for (std::size_t r = model_->num_base_rows(); r < rows.size(); ++r) {
    if (rows[r].sense == lp::Sense::eq) continue;
    slack = std::min(slack, rows[r].expr.evaluate(x) + eps);
  }
  if (slack <= kStrictness + kWitnessMargin) return;
  witnesses_.push_back({slack, x});
}

bool RorEngine::solve(Family f, const QueryIndex& idx, std::size_t a, std::size_t b) {
  ConstraintRow row;
  if (f == Family::necessary) {
    row.expr = side_utility(b, idx, false) - side_utility(a, idx, true);
    row.expr.add(model_->epsilon_var(), -1.0);
    row.name = "query_necessary";
  } else {
    row.expr = side_utility(a, idx, true) - side_utility(b, idx, false);
    row.name = "query_possible";
  }
  row.expr.normalize();
  const ConstraintRow extra[] = {row};
  const LpOutcome out = reduced_->max_epsilon(extra);
  ++stats_.lp_calls;
  stats_.max_residual = std::max(stats_.max_residual, out.max_residual);
  if (out.status != lp::Status::optimal) return f == Family::necessary;
  if (std::abs(out.epsilon) <= kStrictness) boundary_.push_back({f, idx, a, b, out.epsilon});
  remember_witness(out);
  return f == Family::necessary ? out.epsilon <= kStrictness : out.epsilon > kStrictness;
}

bool RorEngine::query(Family f, std::size_t a, std::size_t b, const QueryIndex& idx) {
  table_.require_complete(a);
  table_.require_complete(b);
  check_query(idx);
  if (!options_.prune) return solve(f, idx, a, b);

  if (auto v = lookup(f, idx, a, b)) {
    ++stats_.cache_hits;
    return *v;
  }
  std::optional<bool> v = certificate(f, idx, a, b);
  if (v) {
    ++stats_.certificate_hits;
  } else if ((v = infer(f, idx, a, b))) {
    ++stats_.inferred;
  } else {
    v = solve(f, idx, a, b);
  }
  bits(f, idx)[a * table_.num_alternatives() + b] = *v ? 1 : 0;
  return *v;
}

bool RorEngine::necessary(std::size_t a, std::size_t b, const QueryIndex& idx) {
  return query(Family::necessary, a, b, idx);
}

bool RorEngine::possible(std::size_t a, std::size_t b, const QueryIndex& idx) {
  return query(Family::possible, a, b, idx);
}

RelationMatrix RorEngine::relation(Family f, const QueryIndex& idx) {
  check_query(idx);
  RelationMatrix m(relation_tag(f, idx), table_.alternative_ids());
  const std::size_t na = table_.num_alternatives();
  for (std::size_t a = 0; a < na; ++a)
    for (std::size_t b = 0; b < na; ++b) m.set(a, b, query(f, a, b, idx));
  return m;
}

std::vector<CredibilityLevel> credibility_sweep(const PerformanceTable& table,
                                                const std::vector<PreferenceStatement>& statements,
                                                const QueryIndex& idx, EngineOptions options) {
  std::set<int> levels;
  for (const auto& s : statements) levels.insert(s.credibility);
  if (levels.empty()) levels.insert(1);
  std::vector<CredibilityLevel> out;
  bool broken = false;
  for (int t : levels) {
    CredibilityLevel lvl;
    lvl.level = t;
    if (!broken) {
      std::vector<PreferenceStatement> upto;
      for (const auto& s : statements)
        if (s.credibility <= t) upto.push_back(s);
      RorEngine engine(table, std::move(upto), options);
      if (engine.compatible()) {
        lvl.available = true;
        lvl.necessary = engine.relation(Family::necessary, idx);
        lvl.possible = engine.relation(Family::possible, idx);
      } else {
        broken = true;
      }
    }
    out.push_back(std::move(lvl));
  }
  return out;
}

}  // namespace ror

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

#include "ror/api.hpp"

#include "ror/dominance.hpp"
#include "ror/group_engine.hpp"
#include "ror/properties.hpp"
#include "ror/relation.hpp"

namespace ror::api {

namespace {

Json epsilon_json(const std::optional<double>& e) { return e ? Json(*e) : Json(nullptr); }

EngineOptions engine_options(const Query& q) {
  EngineOptions o;
  o.collapse_missing = q.collapse;
  return o;
}

void require_collapsible(const Query& q) {
  if (q.doc.table.has_missing() && !q.collapse)
    throw Error(ErrorCode::missing_evaluation_unsupported,
                "table has missing evaluations; collapse to two points to query strong or weak "
                "relations");
}

// Only the strong and weak indices survive a collapse.
void require_extreme_index(const Query& q, const QueryIndex& idx) {
  if (q.doc.table.has_missing() && (idx.classic || idx.i == idx.k))
    throw Error(ErrorCode::missing_evaluation_unsupported,
                "only strong and weak relations are available with missing evaluations");
}

Json boundary_json(const RorEngine& e, Family f, const QueryIndex& idx) {
  Json out = Json::array();
  for (const auto& r : e.boundary()) {
    if (r.family != f || r.index != idx) continue;
    Json j;
    j["a"] = e.table().alternative_id(r.a);
    j["b"] = e.table().alternative_id(r.b);
    j["epsilon"] = r.epsilon;
    out.push_back(std::move(j));
  }
  return out;
}

RelationMatrix dominance_of(const Query& q, const std::string& index) {
  require_collapsible(q);
  const bool collapsed = q.doc.table.has_missing();
  const PerformanceTable table = collapsed ? collapse_to_two_point(q.doc.table) : q.doc.table;
  const QueryIndex idx = resolve_index(q, index);
  require_extreme_index(q, idx);
  return dominance_matrix(table, idx.classic ? DominanceQuery::normal() : DominanceQuery::pair(idx.i, idx.k));
}

}  // namespace

QueryIndex resolve_index(const Query& q, const std::string& text) {
  const int n = q.collapse && q.doc.table.has_missing() ? 2 : q.doc.table.n();
  return io::parse_index(text, n);
}

Json validate(const Query& q) {
  const PerformanceTable& t = q.doc.table;
  Json j;
  j["valid"] = true;
  j["n"] = t.n();
  j["alternatives"] = t.alternative_ids();
  Json crits = Json::array();
  for (const auto& c : t.criteria()) crits.push_back(c.id);
  j["criteria"] = std::move(crits);
  Json ref = Json::array();
  for (std::size_t a : t.reference_set()) ref.push_back(t.alternative_id(a));
  j["reference"] = std::move(ref);
  j["missing"] = t.has_missing();
  j["statements"] = q.doc.statements.size();
  if (t.has_missing() && !q.collapse) {
    j["compatible"] = nullptr;
    j["epsilon"] = nullptr;
  } else {
    const RorEngine e(t, q.doc.statements, engine_options(q));
    j["compatible"] = e.compatible();
    j["epsilon"] = epsilon_json(e.epsilon());
  }
  return j;
}

Json dominance(const Query& q, const std::string& index) {
  Json j;
  j["collapsed"] = q.doc.table.has_missing();
  j["relation"] = io::to_json(dominance_of(q, index));
  return j;
}

Json relations(const Query& q, Family f, const std::string& index) {
  RorEngine e(q.doc.table, q.doc.statements, engine_options(q));
  const QueryIndex idx = resolve_index(q, index);
  const RelationMatrix m = e.relation(f, idx);
  Json j;
  j["compatible"] = e.compatible();
  j["epsilon"] = epsilon_json(e.epsilon());
  j["collapsed"] = e.collapsed();
  j["relation"] = io::to_json(m);
  j["boundary"] = boundary_json(e, f, idx);
  return j;
}

Json group(const Query& q, Family outer, Family inner, const std::string& index,
           const std::vector<std::string>& coalition, bool exclude_incompatible) {
  GroupOptions o;
  o.exclude_incompatible = exclude_incompatible;
  o.engine = engine_options(q);
  GroupEngine g(q.doc.table, q.doc.statements, std::nullopt, o);
  const std::vector<std::string> members = coalition.empty() ? g.roster() : coalition;
  const RelationMatrix m = g.relation(members, outer, inner, resolve_index(q, index));
  Json j;
  j["coalition"] = members;
  j["excluded"] = g.excluded();
  j["relation"] = io::to_json(m);
  return j;
}

Json sorting(const Query& q, const std::string& index, bool joint) {
  if (!q.doc.sorting) throw Error(ErrorCode::bad_request, "problem has no sorting section");
  require_collapsible(q);
  const QueryIndex idx = resolve_index(q, index);
  // Sorting works on complete tables; collapse first when cells are missing.
  const PerformanceTable table = q.doc.table.has_missing() ? collapse_to_two_point(q.doc.table) : q.doc.table;
  require_extreme_index(q, idx);
  SortingEngine s(table, q.doc.sorting->classes, q.doc.sorting->examples,
                  joint ? q.doc.statements : std::vector<PreferenceStatement>{});
  Json j = Json::object();
  for (std::size_t a = 0; a < table.num_alternatives(); ++a) {
    const Assignment as = s.assign(a, idx);
    Json row;
    row["possible"] = io::to_json(as.possible);
    row["necessary"] = io::to_json(as.necessary);
    j[table.alternative_id(a)] = std::move(row);
  }
  return j;
}

Json extreme_ranks(const Query& q, const std::string& index) {
  RorEngine e(q.doc.table, q.doc.statements, engine_options(q));
  const QueryIndex idx = resolve_index(q, index);
  require_extreme_index(q, idx);
  const auto ranks = extreme_ranks_all(e, idx);
  Json j;
  j["index"] = io::index_text(idx);
  Json rows = Json::object();
  for (std::size_t a = 0; a < ranks.size(); ++a)
    rows[e.table().alternative_id(a)] = Json{{"best", ranks[a].best}, {"worst", ranks[a].worst}};
  j["ranks"] = std::move(rows);
  return j;
}

Json diagnose(const Query& q, const DiagnosisOptions& opts) {
  require_collapsible(q);
  const PerformanceTable table = q.doc.table.has_missing() ? collapse_to_two_point(q.doc.table) : q.doc.table;
  const bool compatible = check_compatibility(table, q.doc.statements).compatible;
  const InconsistencyReport r = find_inconsistencies(table, q.doc.statements, opts);
  Json j;
  j["compatible"] = compatible;
  j["minimal_sets"] = r.minimal_sets;
  j["exhaustive"] = r.exhaustive;
  return j;
}

Json sweep(const Query& q, const std::string& index) {
  const QueryIndex idx = resolve_index(q, index);
  Json levels = Json::array();
  for (const auto& l : credibility_sweep(q.doc.table, q.doc.statements, idx, engine_options(q))) {
    Json j;
    j["level"] = l.level;
    j["available"] = l.available;
    j["necessary"] = l.necessary ? io::to_json(*l.necessary) : Json(nullptr);
    j["possible"] = l.possible ? io::to_json(*l.possible) : Json(nullptr);
    levels.push_back(std::move(j));
  }
  Json j;
  j["index"] = io::index_text(idx);
  j["levels"] = std::move(levels);
  return j;
}

std::string dot(const Query& q, const std::string& relation, const std::string& index) {
  if (relation == "dominance") return to_dot(dominance_of(q, index));
  const Family f = io::parse_family(relation);
  RorEngine e(q.doc.table, q.doc.statements, engine_options(q));
  return to_dot(e.relation(f, resolve_index(q, index)));
}

Json check_properties(std::uint64_t seed, int instances, int max_dms) {
  if (instances < 1) throw Error(ErrorCode::bad_request, "instances must be positive");
  PropertyOptions o;
  o.generator.max_dms = std::max(1, max_dms);
  const PropertyReport r = ror::check_properties(seed, instances, o);
  Json j;
  j["status"] = r.passed() ? "PASS" : "FAIL";
  j["seed"] = seed;
  j["instances"] = r.instances;
  j["lp_calls"] = r.lp_calls;
  Json groups = Json::object();
  for (const char* g : {"dominance", "preference", "lattice", "group"}) {
    long clauses = 0, checks = 0, failures = 0;
    for (const auto& c : r.clauses)
      if (c.name.starts_with(std::string(g) + ":")) {
        ++clauses;
        checks += c.checks;
        failures += c.failures;
      }
    groups[g] = Json{{"clauses", clauses}, {"checks", checks}, {"failures", failures}};
  }
  j["groups"] = std::move(groups);
  Json clauses = Json::array();
  for (const auto& c : r.clauses) {
    Json cj;
    cj["name"] = c.name;
    cj["checks"] = c.checks;
    cj["failures"] = c.failures;
    if (c.failures) cj["first_failure"] = c.first_failure;
    clauses.push_back(std::move(cj));
  }
  j["clauses"] = std::move(clauses);
  return j;
}

int http_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::unknown_session:
      return 404;
    case ErrorCode::missing_evaluation_unsupported:
    case ErrorCode::incompatible_session:
    case ErrorCode::incompatible_sorting:
    case ErrorCode::level_incompatible:
    case ErrorCode::dm_incompatible:
      return 409;
    case ErrorCode::solver_failure:
    case ErrorCode::milp_failure:
      return 500;
    default:
      return 400;
  }
}

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::incompatible_session:
    case ErrorCode::incompatible_sorting:
    case ErrorCode::level_incompatible:
    case ErrorCode::dm_incompatible:
      return 2;
    case ErrorCode::solver_failure:
    case ErrorCode::milp_failure:
      return 4;
    default:
      return 3;
  }
}

}  // namespace ror::api

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

// Acceptance run: one PASS/FAIL line per top-level criterion, exit status 1
// if any line fails.

#define DOCTEST_CONFIG_DISABLE
#include "oracles.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "ror/dominance.hpp"
#include "ror/properties.hpp"
#include "ror/robustness.hpp"
#include "ror/ror_engine.hpp"
#include "ror/sorting_engine.hpp"

using namespace ror;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Collects failures of one criterion; the first few are printed.
struct Verdict {
  std::vector<std::string> problems;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  }
};

int failed = 0;

void report(const std::string& name, const std::function<void(Verdict&)>& body) {
  Verdict v;
  const auto t0 = Clock::now();
  try {
    body(v);
  } catch (const std::exception& e) {
    v.problems.push_back(std::string("exception: ") + e.what());
  }
  const double secs = seconds_since(t0);
  const bool ok = v.problems.empty();
  if (!ok) ++failed;
  std::cout << (ok ? "PASS " : "FAIL ") << name << " (" << v.detail.str() << (v.detail.str().empty() ? "" : ", ")
            << secs << " s)\n";
  for (std::size_t i = 0; i < v.problems.size() && i < 5; ++i) std::cout << "    " << v.problems[i] << "\n";
  std::cout.flush();
}

std::vector<QueryIndex> all_indices(int n) {
  std::vector<QueryIndex> out = {QueryIndex::whole()};
  for (int i = 1; i <= n; ++i)
    for (int k = 1; k <= n; ++k) out.push_back(QueryIndex::pair(i, k));
  return out;
}

bool oracle_dominates(const PerformanceTable& t, std::size_t a, std::size_t b, const QueryIndex& idx) {
  return idx.classic ? oracle::normal(t, a, b) : oracle::ik(t, a, b, idx.i, idx.k);
}

void didactic(Verdict& v) {
  const auto doc = oracle::students_problem();
  const auto& t = doc.table;
  const std::size_t na = t.num_alternatives();

  const auto t0 = Clock::now();
  const std::vector<std::pair<DominanceQuery, std::function<bool(std::size_t, std::size_t)>>> kinds = {
      {DominanceQuery::strong(), [](std::size_t a, std::size_t b) { return oracle::student_ik(a, b, 1, 2); }},
      {DominanceQuery::normal(), [](std::size_t a, std::size_t b) { return oracle::student_normal(a, b); }},
      {DominanceQuery::weak(), [](std::size_t a, std::size_t b) { return oracle::student_ik(a, b, 2, 1); }}};
  // Table position -> position in the hand-coded oracle rows.
  std::vector<std::size_t> row(na);
  for (std::size_t r = 0; r < oracle::students().size(); ++r) row[t.index_of(oracle::students()[r].id)] = r;
  for (const auto& [q, expect] : kinds) {
    const auto m = dominance_matrix(t, q);
    for (std::size_t a = 0; a < na; ++a)
      for (std::size_t b = 0; b < na; ++b)
        v.require(m(a, b) == expect(row[a], row[b]),
                  m.kind() + " differs at " + t.alternative_id(a) + "," + t.alternative_id(b));
  }
  const double dom_secs = seconds_since(t0);
  v.require(dom_secs < 1.0, "dominance took " + std::to_string(dom_secs) + " s");

  const auto t1 = Clock::now();
  std::vector<RelationMatrix> chain;
  for (const char* file : {"c1.json", "c2.json", "c3.json"}) {
    RorEngine e(t, oracle::students_statements(file));
    v.require(e.compatible(), std::string(file) + " incompatible");
    chain.push_back(e.relation(Family::necessary, QueryIndex::whole()));
  }
  const auto M = t.index_of("M"), D = t.index_of("D");
  v.require(chain[0](M, D), "necessary(M,D) false after C1");
  v.require(chain[0].subset_of(chain[1]), "N1 not within N2");
  v.require(chain[1].subset_of(chain[2]), "N2 not within N3");
  const double chain_secs = seconds_since(t1);
  v.require(chain_secs < 30.0, "chain took " + std::to_string(chain_secs) + " s");

  std::vector<std::string> top;
  for (std::size_t a = 0; a < na; ++a) {
    bool beaten = false;
    for (std::size_t x = 0; x < na; ++x) beaten = beaten || (chain[2](x, a) && !chain[2](a, x));
    if (!beaten) top.push_back(t.alternative_id(a));
  }
  const bool a_top = std::find(top.begin(), top.end(), "A") != top.end();
  const bool e_top = std::find(top.begin(), top.end(), "E") != top.end();
  v.require(a_top && e_top, "A or E is beaten at the final stage");
  std::string joined;
  for (const auto& s : top) joined += (joined.empty() ? "" : " ") + s;
  v.detail << "dominance " << dom_secs << " s, chain " << chain_secs << " s, maximal {" << joined << "}";
}

void property_suite(Verdict& v) {
  PropertyOptions o;
  o.generator.max_dms = 3;
  const auto r = check_properties(42, 50, o);
  long checks = 0;
  for (const auto& c : r.clauses) {
    checks += c.checks;
    if (c.failures > 0) v.require(false, c.name + ": " + c.first_failure);
  }
  v.require(r.instances >= 50, "fewer than 50 instances");
  v.detail << r.instances << " instances, seed 42, " << r.clauses.size() << " clauses, " << checks << " checks";
}

void lp_sanity(Verdict& v) {
  std::mt19937_64 rng(2024);
  GeneratorOptions g;
  long pairs = 0, solves = 0;
  double worst = 0.0;
  for (int rep = 0; rep < 20; ++rep) {
    const Instance inst = random_instance(rng, g);
    const auto& t = inst.table;
    RorEngine certified(t, inst.statements);
    const long before = certified.stats().lp_calls;
    for (const auto& idx : all_indices(t.n()))
      for (std::size_t a = 0; a < t.num_alternatives(); ++a)
        for (std::size_t b = 0; b < t.num_alternatives(); ++b)
          if (oracle_dominates(t, a, b, idx)) {
            ++pairs;
            v.require(certified.necessary(a, b, idx), "dominating pair not necessary");
          }
    v.require(certified.stats().lp_calls == before, "LP solved for a dominating pair");

    RorEngine raw(t, inst.statements, EngineOptions{false, false});
    for (const auto& idx : all_indices(t.n()))
      for (Family f : {Family::necessary, Family::possible}) raw.relation(f, idx);
    solves += raw.stats().lp_calls;
    worst = std::max({worst, raw.stats().max_residual, certified.stats().max_residual});
  }
  v.require(worst <= kResidualTol, "residual " + std::to_string(worst));

  int growing = 0;
  for (int rep = 0; rep < 20; ++rep) {
    const auto t = oracle::random_table(rng, 6, 1 + rep % 4, 1 + rep % 3);
    std::vector<PreferenceStatement> st;
    double last = kEpsilonCap;
    for (int s = 0; s < 8; ++s) {
      const auto a = rng() % 6, b = (a + 1 + rng() % 5) % 6;
      st.push_back(oracle::prefer("s" + std::to_string(s), t.alternative_id(a), t.alternative_id(b)));
      const auto c = check_compatibility(t, st);
      const double eps = c.epsilon.value_or(-kEpsilonCap - 1);
      v.require(eps <= last + 1e-9, "epsilon grew under statement addition");
      last = eps;
    }
    ++growing;
  }
  v.detail << pairs << " dominating pairs, " << solves << " raw solves, max residual " << worst << ", " << growing
           << " growing sessions";
}

void sorting(Verdict& v) {
  std::mt19937_64 rng(5);
  const ClassStructure three{{"C1", "C2", "C3"}};
  long queries = 0;
  for (int rep = 0; rep < 10; ++rep) {
    const auto t = oracle::random_table(rng, 6, 2, 1 + rep % 3);
    SortingEngine empty(t, three, {});
    for (std::size_t a = 0; a < t.num_alternatives(); ++a)
      v.require(empty.possible(a) == ClassInterval{1, 3}, "zero-example possible is not [1,p]");

    std::vector<AssignmentExample> ex;
    for (std::size_t a = 0; a < 3; ++a) {
      const int lo = 1 + static_cast<int>(rng() % 3);
      ex.push_back({t.alternative_id(a), lo, lo + static_cast<int>(rng() % (4 - lo))});
    }
    SortingEngine s(t, three, ex);
    if (!s.compatible()) continue;
    for (std::size_t a = 0; a < t.num_alternatives(); ++a)
      for (const auto& idx : all_indices(t.n())) {
        const auto r = s.assign(a, idx);
        ++queries;
        if (!r.necessary) continue;
        v.require(r.possible && r.possible->lower <= r.necessary->lower && r.necessary->upper <= r.possible->upper,
                  "necessary interval outside possible interval");
      }
  }

  const auto t = numeric_table(2, {"g1", "g2"}, {{"a", {{5, 6}, {5, 7}}}, {"b", {{2, 4}, {3, 5}}}, {"c", {{0, 9}, {1, 2}}}});
  SortingEngine strong(t, three, {{"b", 3, 3}});
  const auto n = strong.necessary(0, QueryIndex::strong(2));
  v.require(n && n->lower == 3 && n->upper == 3, "strong-dominance example is not necessarily [3,3]");
  v.detail << queries << " interval queries, strong example necessary [" << (n ? n->lower : 0) << ","
           << (n ? n->upper : 0) << "]";
}

void inconsistency(Verdict& v) {
  const auto t = numeric_table(2, {"g1", "g2"}, {{"a", {{1, 3}, {2, 2}}}, {"b", {{2, 2}, {1, 3}}}, {"c", {{0, 4}, {1, 2}}}});
  const std::vector<PreferenceStatement> st = {oracle::prefer("ab", "a", "b"), oracle::prefer("bc", "b", "c"),
                                               oracle::prefer("ca", "c", "a")};
  auto sets = find_inconsistencies(t, st).minimal_sets;
  for (auto& s : sets) std::sort(s.begin(), s.end());
  std::sort(sets.begin(), sets.end());
  const std::vector<std::vector<std::string>> singletons = {{"ab"}, {"bc"}, {"ca"}};
  v.require(sets == singletons, "diagnosis is not the three singletons");
  v.require(sets == oracle::minimal_removals(t, st), "diagnosis differs from the subset oracle");
  v.detail << sets.size() << " minimal sets";
}

void rank_containment(Verdict& v) {
  std::mt19937_64 rng(77);
  GeneratorOptions g;
  long samples = 0;
  for (int rep = 0; rep < 20; ++rep) {
    const Instance inst = random_instance(rng, g);
    RorEngine e(inst.table, inst.statements);
    const auto ranks = extreme_ranks_all(e);
    for (const auto& x : sample_vertices(e, 200, static_cast<std::uint64_t>(rep)))
      for (std::size_t a = 0; a < inst.table.num_alternatives(); ++a) {
        const int r = rank_at(e, a, QueryIndex::whole(), x);
        ++samples;
        v.require(ranks[a].best <= r && r <= ranks[a].worst,
                  "sampled rank " + std::to_string(r) + " outside [" + std::to_string(ranks[a].best) + "," +
                      std::to_string(ranks[a].worst) + "]");
      }
  }
  v.detail << "20 instances, " << samples << " sampled ranks";
}

}  // namespace

int main() {
  std::cout.precision(3);
  report("didactic-example", didactic);
  report("property-suite", property_suite);
  report("lp-sanity", lp_sanity);
  report("sorting", sorting);
  report("inconsistency", inconsistency);
  report("extreme-ranks", rank_containment);
  std::cout << (failed == 0 ? "ALL PASS" : std::to_string(failed) + " FAILED") << "\n";
  return failed == 0 ? 0 : 1;
}

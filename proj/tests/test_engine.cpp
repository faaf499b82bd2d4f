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

#include <doctest.h>

#include "oracles.hpp"
#include "ror/dominance.hpp"
#include "ror/robustness.hpp"
#include "ror/ror_engine.hpp"

using namespace ror;
using oracle::code_of;

namespace {

std::vector<QueryIndex> all_indices(int n) {
  std::vector<QueryIndex> out = {QueryIndex::whole()};
  for (int i = 1; i <= n; ++i)
    for (int k = 1; k <= n; ++k) out.push_back(QueryIndex::pair(i, k));
  return out;
}

RorEngine students(const std::string& file = "") {
  const auto doc = oracle::students_problem();
  return RorEngine(doc.table, file.empty() ? std::vector<PreferenceStatement>{} : oracle::students_statements(file));
}

}  // namespace

TEST_CASE("students queries without statements") {
  auto e = students();
  const auto& t = e.table();
  const auto A = t.index_of("A"), B = t.index_of("B"), M = t.index_of("M");
  CHECK(e.compatible());
  CHECK(e.possible(B, A));
  CHECK_FALSE(e.necessary(B, A));
  CHECK(e.necessary(A, M));
  for (std::size_t a = 0; a < t.num_alternatives(); ++a) CHECK(e.possible(a, a));
}

TEST_CASE("students queries with the first statement") {
  auto e = students("c1.json");
  const auto& t = e.table();
  const auto D = t.index_of("D"), M = t.index_of("M");
  CHECK(e.necessary(M, D));
  CHECK_FALSE(e.possible(D, M));
}

TEST_CASE("strong necessity implies classic necessity at the final stage") {
  auto e = students("c3.json");
  const auto& t = e.table();
  const auto D = t.index_of("D"), M = t.index_of("M");
  if (e.necessary(M, D, QueryIndex::strong(2))) CHECK(e.necessary(M, D));
  CHECK(e.necessary(M, D));
  // C and M are indifferent for every compatible function.
  CHECK(e.necessary(t.index_of("C"), M));
  CHECK(e.necessary(M, t.index_of("C")));
}

TEST_CASE("dominating pairs are decided without solving") {
  std::mt19937_64 rng(21);
  for (int rep = 0; rep < 30; ++rep) {
    const auto t = oracle::random_table(rng, 6, 1 + rep % 3, 1 + rep % 3);
    RorEngine e(t, oracle::consistent_statements(rng, t, 3));
    const long before = e.stats().lp_calls;
    for (const auto& idx : all_indices(t.n()))
      for (std::size_t a = 0; a < t.num_alternatives(); ++a)
        for (std::size_t b = 0; b < t.num_alternatives(); ++b) {
          const bool dom = idx.classic ? oracle::normal(t, a, b) : oracle::ik(t, a, b, idx.i, idx.k);
          if (dom) CHECK(e.necessary(a, b, idx));
        }
    CHECK(e.stats().lp_calls == before);
  }
}

TEST_CASE("pruned relations equal raw LP relations") {
  std::mt19937_64 rng(8);
  for (int rep = 0; rep < 25; ++rep) {
    const auto t = oracle::random_table(rng, 4 + rep % 4, 1 + rep % 3, 1 + rep % 3);
    const auto st = oracle::consistent_statements(rng, t, 4);
    RorEngine fast(t, st);
    RorEngine raw(t, st, EngineOptions{false, false});
    for (const auto& idx : all_indices(t.n()))
      for (Family f : {Family::necessary, Family::possible}) {
        const auto x = fast.relation(f, idx);
        const auto y = raw.relation(f, idx);
        CHECK_MESSAGE(x.same_bits(y), relation_tag(f, idx));
      }
    CHECK(fast.stats().lp_calls <= raw.stats().lp_calls);
    CHECK(fast.stats().max_residual <= kResidualTol);
    CHECK(raw.stats().max_residual <= kResidualTol);
  }
}

TEST_CASE("relations agree with sampled compatible functions") {
  std::mt19937_64 rng(4);
  for (int rep = 0; rep < 15; ++rep) {
    const auto t = oracle::random_table(rng, 5, 2, 1 + rep % 3);
    RorEngine e(t, oracle::consistent_statements(rng, t, 3));
    const auto vertices = sample_vertices(e, 30, rep);
    for (const auto& idx : all_indices(t.n())) {
      const auto N = e.relation(Family::necessary, idx);
      const auto P = e.relation(Family::possible, idx);
      for (const auto& v : vertices)
        for (std::size_t a = 0; a < t.num_alternatives(); ++a)
          for (std::size_t b = 0; b < t.num_alternatives(); ++b) {
            const double ua = e.side_utility(a, idx, true).evaluate(v);
            const double ub = e.side_utility(b, idx, false).evaluate(v);
            if (N(a, b)) CHECK(ua - ub >= -kStrictness - 1e-9);
            if (!P(a, b)) CHECK(ua < ub + 1e-9);
          }
    }
  }
}

TEST_CASE("possible relation is strongly complete and contains necessity") {
  std::mt19937_64 rng(13);
  for (int rep = 0; rep < 10; ++rep) {
    const auto t = oracle::random_table(rng, 6, 2, 2);
    RorEngine e(t, oracle::consistent_statements(rng, t, 4));
    const auto N = e.relation(Family::necessary, QueryIndex::whole());
    const auto P = e.relation(Family::possible, QueryIndex::whole());
    CHECK(N.subset_of(P));
    CHECK(P.is_strongly_complete());
    CHECK(N.is_reflexive());
    CHECK(N.is_transitive());
    CHECK(dominance_matrix(t, DominanceQuery::normal()).subset_of(N));
  }
}

TEST_CASE("query errors") {
  auto e = students();
  CHECK(code_of([&] { e.necessary(0, 1, QueryIndex::pair(3, 1)); }) == ErrorCode::index_out_of_range);
  CHECK(code_of([&] { e.possible(0, 1, QueryIndex::pair(1, 0)); }) == ErrorCode::index_out_of_range);

  const auto doc = oracle::students_problem();
  const std::vector<PreferenceStatement> cycle = {oracle::prefer("x", "M", "D"), oracle::prefer("y", "D", "M")};
  RorEngine bad(doc.table, cycle);
  CHECK_FALSE(bad.compatible());
  CHECK(code_of([&] { bad.necessary(0, 1); }) == ErrorCode::incompatible_session);
  CHECK(code_of([&] { RorEngine(doc.table, {oracle::prefer("x", "M", "Z")}); }) ==
        ErrorCode::unknown_reference_alternative);
}

TEST_CASE("missing cells need the two-point collapse") {
  const auto doc = io::parse_problem(io::Json::parse(R"({
    "n": 3,
    "criteria": [{"id": "g1"}, {"id": "g2", "scale": {"kind": "quantitative", "range": [0, 10]}}],
    "alternatives": {
      "a": {"g1": [1, 2, 3], "g2": null},
      "b": {"g1": [4, 5, 6], "g2": [2, 3, 4]},
      "c": {"g1": [0, 0, 1], "g2": [0, 1, 1]}
    }
  })"));
  CHECK(code_of([&] { RorEngine(doc.table, {}); }) == ErrorCode::missing_evaluation_unsupported);
  RorEngine e(doc.table, {}, EngineOptions{true, true});
  CHECK(e.collapsed());
  CHECK(e.table().n() == 2);
  CHECK(code_of([&] { e.necessary(0, 1); }) == ErrorCode::missing_evaluation_unsupported);
  CHECK(code_of([&] { e.necessary(0, 1, QueryIndex::pair(2, 2)); }) == ErrorCode::missing_evaluation_unsupported);
  // b is at least c everywhere in the worst case.
  CHECK(e.necessary(1, 2, QueryIndex::strong(2)));
  CHECK_FALSE(e.necessary(0, 2, QueryIndex::strong(2)));
  CHECK(e.possible(0, 2, QueryIndex::weak(2)));
}

TEST_CASE("credibility sweep on the students chain") {
  const auto doc = oracle::students_problem();
  auto st = oracle::students_statements("c3.json");
  for (std::size_t s = 0; s < st.size(); ++s) st[s].credibility = static_cast<int>(s) + 1;
  const auto levels = credibility_sweep(doc.table, st, QueryIndex::whole());
  REQUIRE(levels.size() == 3);
  for (const auto& l : levels) REQUIRE(l.available);
  CHECK(levels[0].necessary->subset_of(*levels[1].necessary));
  CHECK(levels[1].necessary->subset_of(*levels[2].necessary));
  CHECK(levels[1].possible->subset_of(*levels[0].possible));
  CHECK(levels[2].possible->subset_of(*levels[1].possible));

  // One level is the plain relation.
  auto one = st;
  for (auto& s : one) s.credibility = 1;
  const auto single = credibility_sweep(doc.table, one, QueryIndex::whole());
  REQUIRE(single.size() == 1);
  RorEngine e(doc.table, one);
  CHECK(single[0].necessary->same_bits(e.relation(Family::necessary, QueryIndex::whole())));

  // A contradiction at level 2 keeps level 1 and flags the rest.
  auto broken = oracle::students_statements("c1.json");
  broken.push_back(oracle::prefer("rev", "D", "M"));
  broken.push_back(oracle::prefer("late", "A", "B"));
  broken[1].credibility = 2;
  broken[2].credibility = 3;
  const auto partial = credibility_sweep(doc.table, broken, QueryIndex::whole());
  REQUIRE(partial.size() == 3);
  CHECK(partial[0].available);
  CHECK_FALSE(partial[1].available);
  CHECK_FALSE(partial[2].available);
  CHECK_FALSE(partial[1].necessary.has_value());
}

TEST_CASE("students final stage leaves A and E on top") {
  auto e = students("c3.json");
  const auto& t = e.table();
  const auto N = e.relation(Family::necessary, QueryIndex::whole());
  std::vector<std::string> top;
  for (std::size_t a = 0; a < t.num_alternatives(); ++a) {
    bool beaten = false;
    for (std::size_t x = 0; x < t.num_alternatives(); ++x) beaten = beaten || (N(x, a) && !N(a, x));
    if (!beaten) top.push_back(t.alternative_id(a));
  }
  CHECK(top == std::vector<std::string>{"A", "E"});
}

TEST_CASE("epsilon never grows as statements are added") {
  std::mt19937_64 rng(17);
  for (int rep = 0; rep < 20; ++rep) {
    const auto t = oracle::random_table(rng, 6, 2, 2);
    std::vector<PreferenceStatement> st;
    double last = kEpsilonCap + 1;
    for (int s = 0; s < 6; ++s) {
      const auto a = rng() % 6, b = (a + 1 + rng() % 5) % 6;
      st.push_back(oracle::prefer("s" + std::to_string(s), t.alternative_id(a), t.alternative_id(b)));
      const auto c = check_compatibility(t, st);
      const double eps = c.epsilon.value_or(-1e9);
      CHECK(eps <= last + 1e-9);
      last = eps;
    }
  }
}

TEST_CASE("boundary records are kept for degenerate solves") {
  const auto t = numeric_table(1, {"g"}, {{"a", {{1}}}, {"b", {{1}}}, {"c", {{2}}}});
  RorEngine e(t, {}, EngineOptions{false, false});
  // a and b share every evaluation, so the strict LP sits on the boundary.
  CHECK(e.necessary(0, 1));
  CHECK(e.necessary(1, 0));
  bool seen = false;
  for (const auto& r : e.boundary()) seen = seen || (r.a == 0 && r.b == 1);
  CHECK(seen);
}

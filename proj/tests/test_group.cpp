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
#include "ror/group_engine.hpp"

using namespace ror;
using oracle::code_of;
using oracle::prefer;

namespace {

const QueryIndex kWhole = QueryIndex::whole();

// Three alternatives on two criteria with trade-offs, so statements matter.
PerformanceTable tradeoff() {
  return numeric_table(2, {"g1", "g2"},
                       {{"a", {{4, 5}, {1, 2}}}, {"b", {{1, 2}, {4, 5}}}, {"c", {{2, 3}, {2, 3}}}, {"d", {{0, 1}, {0, 1}}}});
}

}  // namespace

TEST_CASE("a singleton coalition is its DM") {
  const auto t = tradeoff();
  const std::vector<PreferenceStatement> st = {prefer("s1", "a", "b", "ann"), prefer("s2", "b", "c", "bob")};
  GroupEngine g(t, st);
  CHECK(g.roster() == std::vector<std::string>{"ann", "bob"});
  for (const auto& dm : g.roster()) {
    const auto own = g.engine(dm).relation(Family::necessary, kWhole);
    CHECK(g.relation({dm}, Family::necessary, Family::necessary, kWhole).same_bits(own));
    CHECK(g.relation({dm}, Family::necessary, Family::possible, kWhole).same_bits(own));
  }
}

TEST_CASE("opposing DMs split the inner quantifier") {
  const auto t = tradeoff();
  const std::vector<PreferenceStatement> st = {prefer("s1", "a", "b", "ann"), prefer("s2", "b", "a", "bob")};
  GroupEngine g(t, st);
  const auto NN = g.relation({"ann", "bob"}, Family::necessary, Family::necessary, kWhole);
  const auto NP = g.relation({"ann", "bob"}, Family::necessary, Family::possible, kWhole);
  CHECK(NP(0, 1));
  CHECK_FALSE(NN(0, 1));
  CHECK(NP(1, 0));
  CHECK_FALSE(NN(1, 0));
}

TEST_CASE("dominance survives every coalition") {
  const auto t = tradeoff();
  const std::vector<PreferenceStatement> st = {prefer("s1", "a", "b", "ann"), prefer("s2", "b", "a", "bob"),
                                               prefer("s3", "c", "a", "cid")};
  GroupEngine g(t, st);
  const auto dom = dominance_matrix(t, DominanceQuery::normal());
  for (unsigned mask = 1; mask < 8; ++mask) {
    std::vector<std::string> coalition;
    for (unsigned d = 0; d < 3; ++d)
      if (mask & (1u << d)) coalition.push_back(g.roster()[d]);
    CHECK(dom.subset_of(g.relation(coalition, Family::necessary, Family::necessary, kWhole)));
  }
}

TEST_CASE("group relations nest across outer and inner families") {
  std::mt19937_64 rng(31);
  for (int rep = 0; rep < 10; ++rep) {
    const auto t = oracle::random_table(rng, 5, 2, 2);
    std::vector<PreferenceStatement> st;
    for (const char* dm : {"d1", "d2", "d3"}) {
      auto own = oracle::consistent_statements(rng, t, 2);
      for (auto& s : own) {
        s.id = std::string(dm) + s.id;
        s.author = dm;
      }
      st.insert(st.end(), own.begin(), own.end());
    }
    GroupEngine g(t, st, std::vector<std::string>{"d1", "d2", "d3"});
    const std::vector<std::string> all = g.roster();
    for (const auto& idx : {kWhole, QueryIndex::pair(1, 2), QueryIndex::pair(2, 1)}) {
      const auto NN = g.relation(all, Family::necessary, Family::necessary, idx);
      const auto NP = g.relation(all, Family::necessary, Family::possible, idx);
      const auto PN = g.relation(all, Family::possible, Family::necessary, idx);
      const auto PP = g.relation(all, Family::possible, Family::possible, idx);
      CHECK(NN.subset_of(NP));
      CHECK(NP.subset_of(PP));
      CHECK(NN.subset_of(PN));
      CHECK(PN.subset_of(PP));
    }
  }
}

TEST_CASE("a DM without statements sees the whole polytope") {
  const auto t = tradeoff();
  GroupEngine g(t, {prefer("s1", "a", "b", "ann")}, std::vector<std::string>{"ann", "eve"});
  const auto eve = g.relation({"eve"}, Family::necessary, Family::necessary, kWhole);
  CHECK(eve.same_bits(RorEngine(t, {}).relation(Family::necessary, kWhole)));
}

TEST_CASE("coalition errors and explicit exclusion") {
  const auto t = tradeoff();
  const std::vector<PreferenceStatement> st = {prefer("s1", "a", "b", "ann"), prefer("s2", "b", "a", "bob"),
                                               prefer("s3", "a", "b", "bob")};
  GroupEngine g(t, st);
  CHECK_FALSE(g.dm_compatible("bob"));
  CHECK(code_of([&] { g.relation({}, Family::necessary, Family::necessary, kWhole); }) ==
        ErrorCode::empty_coalition);
  CHECK(code_of([&] { g.relation({"zed"}, Family::necessary, Family::necessary, kWhole); }) ==
        ErrorCode::unknown_dm);
  CHECK(code_of([&] { g.relation({"ann", "bob"}, Family::necessary, Family::necessary, kWhole); }) ==
        ErrorCode::dm_incompatible);

  GroupOptions o;
  o.exclude_incompatible = true;
  GroupEngine lenient(t, st, std::nullopt, o);
  const auto r = lenient.relation({"ann", "bob"}, Family::necessary, Family::necessary, kWhole);
  CHECK(lenient.excluded() == std::vector<std::string>{"bob"});
  CHECK(r.same_bits(lenient.engine("ann").relation(Family::necessary, kWhole)));
  CHECK(code_of([&] { lenient.relation({"bob"}, Family::necessary, Family::necessary, kWhole); }) ==
        ErrorCode::empty_coalition);
}

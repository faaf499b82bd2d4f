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

#include <set>

#include "oracles.hpp"
#include "ror/properties.hpp"

using namespace ror;

TEST_CASE("law suite passes on a short seeded run") {
  PropertyOptions o;
  o.generator.max_dms = 3;
  const auto report = check_properties(7, 40, o);
  CHECK(report.instances == 40);
  CHECK(report.lp_calls > 0);
  for (const auto& c : report.clauses)
    if (c.failures > 0) FAIL_CHECK(c.name << ": " << c.first_failure);
  CHECK(report.failures() == 0);
  CHECK(report.passed());
}

TEST_CASE("law suite covers every clause family") {
  PropertyOptions o;
  o.generator.max_dms = 3;
  const auto report = check_properties(42, 10, o);
  std::map<std::string, int> per_group;
  std::set<std::string> names;
  for (const auto& c : report.clauses) {
    per_group[c.name.substr(0, c.name.find(':') + 1)]++;
    CHECK(names.insert(c.name).second);
  }
  CHECK(per_group["dominance:"] == 11);
  CHECK(per_group["preference:"] == 49);
  CHECK(per_group["lattice:"] == 54);
  CHECK(per_group["group:"] == 11);
  for (const char* g : {"dominance:", "preference:", "lattice:", "group:"}) CHECK(report.passed(g));
}

TEST_CASE("generated instances respect the size limits") {
  std::mt19937_64 rng(3);
  GeneratorOptions g;
  g.max_dms = 3;
  for (int rep = 0; rep < 100; ++rep) {
    const auto inst = random_instance(rng, g);
    CHECK(inst.table.num_alternatives() >= 2);
    CHECK(inst.table.num_alternatives() <= 8);
    CHECK(inst.table.num_criteria() <= 4);
    CHECK(inst.table.n() <= 3);
    CHECK(inst.dms.size() <= 3);
    for (const auto& dm : inst.dms) {
      std::vector<PreferenceStatement> own;
      for (const auto& s : inst.statements)
        if (s.author == dm) own.push_back(s);
      CHECK(own.size() <= 5);
      CHECK(check_compatibility(inst.table, own).compatible);
    }
  }
}

TEST_CASE("the students session satisfies every law") {
  const auto doc = oracle::students_problem();
  Instance inst{doc.table, oracle::students_statements("c3.json"), {"dean"}};
  PropertyReport r;
  check_instance(inst, r, 1);
  CHECK(r.instances == 1);
  for (const auto& c : r.clauses)
    if (c.failures > 0) FAIL_CHECK(c.name << ": " << c.first_failure);
  CHECK(r.passed());
}

TEST_CASE("a failing clause fails the report") {
  PropertyReport r;
  r.clauses.push_back({"dominance:x", 3, 1, "a,b"});
  r.clauses.push_back({"lattice:y", 3, 0, ""});
  CHECK_FALSE(r.passed());
  CHECK(r.failures() == 1);
  CHECK_FALSE(r.passed("dominance:"));
  CHECK(r.passed("lattice:"));
}

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

// Independent reference computations for the tests. Nothing here calls the
// engines except check_compatibility in the subset oracle.

#include <doctest.h>

#include <algorithm>
#include <functional>
#include <array>
#include <random>
#include <string>
#include <vector>

#include "ror/io.hpp"
#include "ror/model.hpp"
#include "ror/value_model.hpp"

namespace oracle {

// Code of the ror::Error thrown by f; fails the test when nothing is thrown.
inline ror::ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const ror::Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ror::ErrorCode::bad_request;
}

// The student table by hand, ranks Very Bad = 1 .. Very Good = 5, lower
// and upper point per subject (Mat, Phy, Com).
struct Student {
  const char* id;
  std::array<std::array<int, 2>, 3> g;
};

inline const std::vector<Student>& students() {
  static const std::vector<Student> s = {
      {"A", {{{3, 3}, {5, 5}, {5, 5}}}}, {"B", {{{4, 5}, {1, 3}, {2, 4}}}},
      {"C", {{{2, 5}, {4, 4}, {3, 4}}}}, {"D", {{{4, 5}, {3, 4}, {3, 4}}}},
      {"E", {{{5, 5}, {1, 4}, {3, 4}}}}, {"F", {{{1, 4}, {2, 3}, {2, 3}}}},
      {"H", {{{3, 4}, {3, 4}, {3, 4}}}}, {"I", {{{5, 5}, {3, 5}, {2, 2}}}},
      {"L", {{{1, 2}, {2, 3}, {1, 3}}}}, {"M", {{{1, 2}, {4, 5}, {5, 5}}}},
  };
  return s;
}

inline std::string data_file(const std::string& name) { return std::string(ROR_DATA_DIR) + "/" + name; }

inline ror::io::ProblemDocument students_problem() {
  return ror::io::parse_problem(ror::io::read_file(data_file("students.json")));
}

inline std::vector<ror::PreferenceStatement> students_statements(const std::string& file) {
  return ror::io::parse_statements(ror::io::read_file(data_file(file)));
}

// Student a (i,k)-dominates b, straight from the definition.
inline bool student_ik(std::size_t a, std::size_t b, int i, int k) {
  const auto& s = students();
  for (int j = 0; j < 3; ++j)
    if (s[a].g[j][i - 1] < s[b].g[j][k - 1]) return false;
  return true;
}

inline bool student_normal(std::size_t a, std::size_t b) {
  return student_ik(a, b, 1, 1) && student_ik(a, b, 2, 2);
}

// Componentwise definition on any complete table.
inline bool ik(const ror::PerformanceTable& t, std::size_t a, std::size_t b, int i, int k) {
  for (std::size_t j = 0; j < t.num_criteria(); ++j)
    if (t.value(a, j, i) < t.value(b, j, k)) return false;
  return true;
}

inline bool normal(const ror::PerformanceTable& t, std::size_t a, std::size_t b) {
  for (int i = 1; i <= t.n(); ++i)
    if (!ik(t, a, b, i, i)) return false;
  return true;
}

inline ror::PerformanceTable random_table(std::mt19937_64& rng, int na, int m, int n, int span = 6) {
  std::uniform_int_distribution<int> v(0, span);
  std::vector<std::string> crits;
  for (int j = 0; j < m; ++j) crits.push_back("g" + std::to_string(j + 1));
  std::vector<std::pair<std::string, std::vector<std::vector<double>>>> rows;
  for (int a = 0; a < na; ++a) {
    std::vector<std::vector<double>> cells;
    for (int j = 0; j < m; ++j) {
      std::vector<double> pts;
      for (int i = 0; i < n; ++i) pts.push_back(v(rng));
      std::sort(pts.begin(), pts.end());
      cells.push_back(pts);
    }
    rows.emplace_back(std::string(1, static_cast<char>('a' + a)), cells);
  }
  return ror::numeric_table(n, crits, rows);
}

inline ror::PreferenceStatement prefer(const std::string& id, const std::string& a, const std::string& b,
                                       const std::string& dm = "dm") {
  ror::PreferenceStatement s;
  s.id = id;
  s.kind = ror::StatementKind::holistic_strict;
  s.operands = {a, b};
  s.author = dm;
  return s;
}

// Up to `count` random holistic statements, each kept only when the set stays
// compatible.
inline std::vector<ror::PreferenceStatement> consistent_statements(std::mt19937_64& rng,
                                                                   const ror::PerformanceTable& t, int count) {
  std::vector<ror::PreferenceStatement> out;
  const std::size_t na = t.num_alternatives();
  for (int s = 0; s < count; ++s) {
    const std::size_t a = rng() % na;
    const std::size_t b = (a + 1 + rng() % (na - 1)) % na;
    auto st = prefer("s" + std::to_string(s + 1), t.alternative_id(a), t.alternative_id(b));
    if (rng() % 4 == 0) st.kind = ror::StatementKind::holistic_indifferent;
    out.push_back(st);
    if (!ror::check_compatibility(t, out).compatible) out.pop_back();
  }
  return out;
}

// Every minimal statement set whose removal restores compatibility, by
// enumerating subsets. Sets are returned as sorted id lists.
inline std::vector<std::vector<std::string>> minimal_removals(const ror::PerformanceTable& t,
                                                              const std::vector<ror::PreferenceStatement>& st) {
  const std::size_t s = st.size();
  std::vector<char> fixes(std::size_t{1} << s, 0);
  for (std::size_t mask = 0; mask < fixes.size(); ++mask) {
    std::vector<ror::PreferenceStatement> rest;
    for (std::size_t i = 0; i < s; ++i)
      if (!(mask & (std::size_t{1} << i))) rest.push_back(st[i]);
    fixes[mask] = ror::check_compatibility(t, rest).compatible;
  }
  std::vector<std::vector<std::string>> out;
  for (std::size_t mask = 0; mask < fixes.size(); ++mask) {
    if (!fixes[mask]) continue;
    bool minimal = true;
    for (std::size_t i = 0; i < s; ++i)
      if ((mask & (std::size_t{1} << i)) && fixes[mask & ~(std::size_t{1} << i)]) minimal = false;
    if (!minimal) continue;
    std::vector<std::string> ids;
    for (std::size_t i = 0; i < s; ++i)
      if (mask & (std::size_t{1} << i)) ids.push_back(st[i].id);
    out.push_back(ids);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oracle

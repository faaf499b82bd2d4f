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

#include <filesystem>
#include <random>
#include <thread>

#include "oracles.hpp"
#include "ror/api.hpp"
#include "ror/session.hpp"

using namespace ror;
using io::Json;
using oracle::code_of;

namespace {

Json students_json() { return io::read_file(oracle::data_file("students.json")); }

Json statement(int c) {
  return io::read_file(oracle::data_file("c3.json")).at("statements").at(c - 1);
}

std::string necessary(const io::ProblemDocument& d) {
  return io::dump(api::relations({d}, Family::necessary, "classic"));
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    std::random_device rd;
    path = std::filesystem::temp_directory_path() / ("ror_sessions_" + std::to_string(rd()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_CASE("sessions grow, cache and revert") {
  SessionStore store;
  const Json created = store.create(students_json());
  const std::string id = created.at("id");
  CHECK(created.at("version") == 0);

  const std::string before = store.query(id, "n", necessary);
  const Json added = store.add_statement(id, statement(1));
  CHECK(added.at("version") == 1);
  CHECK(added.at("compatible") == true);
  const std::string after = store.query(id, "n", necessary);
  CHECK(after != before);
  CHECK(store.stats().misses == 2);

  // Same key, same version: served from the cache byte for byte.
  CHECK(store.query(id, "n", necessary) == after);
  CHECK(store.stats().hits == 1);

  store.add_statement(id, statement(2));
  CHECK(store.version(id) == 2);
  CHECK(store.revert(id, 0).at("version") == 0);
  CHECK(store.query(id, "n", necessary) == before);
  CHECK(store.describe(id).at("log").empty());
}

TEST_CASE("embedded statements open the log") {
  SessionStore store;
  Json p = students_json();
  p["statements"] = Json::array({statement(1), statement(2)});
  const Json created = store.create(p);
  CHECK(created.at("version") == 2);
  const Json d = store.describe(created.at("id"));
  REQUIRE(d.at("log").size() == 2);
  CHECK(d.at("log")[0].at("id") == "C1");
  CHECK(d.at("log")[0].contains("timestamp"));
}

TEST_CASE("incompatible statements stay in the log") {
  SessionStore store;
  const std::string id = store.create(students_json()).at("id");
  store.add_statement(id, statement(1));
  Json reverse = statement(1);
  reverse["id"] = "R";
  reverse["operands"] = Json::array({"D", "M"});
  const Json r = store.add_statement(id, reverse);
  CHECK(r.at("compatible") == false);
  CHECK(r.at("version") == 2);
  CHECK(code_of([&] { store.query(id, "n", necessary); }) == ErrorCode::incompatible_session);
  store.revert(id, 1);
  CHECK_NOTHROW(store.query(id, "n", necessary));
}

TEST_CASE("session errors") {
  SessionStore store;
  CHECK(code_of([&] { store.describe("nope"); }) == ErrorCode::unknown_session);
  CHECK(code_of([&] { store.create(Json{{"n", 2}}); }) == ErrorCode::validation);
  const std::string id = store.create(students_json()).at("id");
  store.add_statement(id, statement(1));
  CHECK(code_of([&] { store.add_statement(id, statement(1)); }) == ErrorCode::validation);
  Json unknown = statement(1);
  unknown["id"] = "Z";
  unknown["operands"] = Json::array({"M", "Q"});
  // The session surface reports every statement problem as validation.
  CHECK(code_of([&] { store.add_statement(id, unknown); }) == ErrorCode::validation);
  CHECK(store.version(id) == 1);
  CHECK(store.revert(id, 1).at("version") == 1);
  CHECK(code_of([&] { store.revert(id, 5); }) == ErrorCode::bad_request);
  CHECK(code_of([&] { store.revert(id, -1); }) == ErrorCode::bad_request);
}

TEST_CASE("persisted sessions replay to identical results") {
  TempDir dir;
  std::string id, body;
  {
    SessionStore store(dir.path);
    id = store.create(students_json()).at("id");
    for (int c = 1; c <= 3; ++c) store.add_statement(id, statement(c));
    store.revert(id, 2);
    body = store.query(id, "n", necessary);
    CHECK(std::filesystem::exists(dir.path / (id + ".json")));
  }
  SessionStore reloaded(dir.path);
  CHECK(reloaded.ids() == std::vector<std::string>{id});
  CHECK(reloaded.version(id) == 2);
  CHECK(reloaded.query(id, "n", necessary) == body);
  // New sessions do not reuse loaded ids.
  CHECK(reloaded.create(students_json()).at("id") != id);
}

TEST_CASE("concurrent readers and one writer") {
  SessionStore store;
  const std::string id = store.create(students_json()).at("id");
  std::vector<std::thread> readers;
  std::atomic<int> errors{0};
  for (int t = 0; t < 4; ++t)
    readers.emplace_back([&] {
      for (int r = 0; r < 5; ++r) {
        try {
          store.query(id, "n", necessary);
        } catch (...) {
          ++errors;
        }
      }
    });
  for (int c = 1; c <= 3; ++c) store.add_statement(id, statement(c));
  for (auto& r : readers) r.join();
  CHECK(errors == 0);
  CHECK(store.version(id) == 3);
}

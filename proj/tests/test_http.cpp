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

#include <httplib.h>

#include <thread>

#include "oracles.hpp"
#include "ror/http.hpp"

using namespace ror;
using io::Json;

namespace {

// One server per test case on an ephemeral port.
struct Fixture {
  SessionStore store;
  HttpServer server{store};
  std::thread thread;
  std::unique_ptr<httplib::Client> client;

  Fixture() {
    const int port = server.bind("127.0.0.1", 0);
    REQUIRE(port > 0);
    thread = std::thread([this] { server.run(); });
    client = std::make_unique<httplib::Client>("127.0.0.1", port);
    client->set_read_timeout(60, 0);
  }
  ~Fixture() {
    server.stop();
    thread.join();
  }

  httplib::Result post(const std::string& path, const Json& body) {
    return client->Post(path, io::dump(body), "application/json");
  }
  httplib::Result get(const std::string& path) { return client->Get(path); }

  std::string create(const Json& problem) {
    auto r = post("/problems", problem);
    REQUIRE(r);
    REQUIRE(r->status == 201);
    return io::parse_text(r->body).at("id");
  }
};

Json students() { return io::read_file(oracle::data_file("students.json")); }

Json statement(int c) { return io::read_file(oracle::data_file("c3.json")).at("statements").at(c - 1); }

bool bit(const Json& relation, const std::string& a, const std::string& b) {
  const auto order = relation.at("order").get<std::vector<std::string>>();
  const auto ia = std::find(order.begin(), order.end(), a) - order.begin();
  const auto ib = std::find(order.begin(), order.end(), b) - order.begin();
  return relation.at("bits")[ia][ib].get<int>() != 0;
}

}  // namespace

TEST_CASE("students elicitation over HTTP") {
  Fixture f;
  const std::string id = f.create(students());
  const std::string base = "/sessions/" + id;

  auto r = f.get(base + "/relations?family=necessary");
  REQUIRE(r);
  CHECK(r->status == 200);
  CHECK_FALSE(bit(io::parse_text(r->body).at("relation"), "M", "D"));

  r = f.post(base + "/statements", statement(1));
  REQUIRE(r);
  CHECK(r->status == 200);
  CHECK(io::parse_text(r->body).at("version") == 1);

  r = f.get(base + "/relations?family=necessary");
  const std::string first = r->body;
  CHECK(bit(io::parse_text(first).at("relation"), "M", "D"));
  // Cached at the same version, byte for byte.
  CHECK(f.get(base + "/relations?family=necessary")->body == first);
  CHECK(f.store.stats().hits >= 1);

  r = f.post(base + "/revert", Json{{"version", 0}});
  CHECK(r->status == 200);
  CHECK_FALSE(bit(io::parse_text(f.get(base + "/relations?family=necessary")->body).at("relation"), "M", "D"));

  r = f.get(base);
  CHECK(r->status == 200);
  CHECK(io::parse_text(r->body).at("version") == 0);
}

TEST_CASE("analysis endpoints answer") {
  Fixture f;
  Json p = students();
  p["statements"] = io::read_file(oracle::data_file("c3.json")).at("statements");
  p["sorting"] = Json{{"classes", {"low", "mid", "high"}}, {"examples", {{{"alt", "A"}, {"L", 3}, {"R", 3}}}}};
  const std::string base = "/sessions/" + f.create(p);

  auto r = f.get(base + "/dominance?kind=strong");
  REQUIRE(r->status == 200);
  CHECK(bit(io::parse_text(r->body).at("relation"), "D", "F"));
  CHECK(f.get(base + "/dominance?kind=ik&i=1&k=2")->body == r->body);

  r = f.get(base + "/group?outer=necessary&inner=necessary&dms=dean");
  REQUIRE(r->status == 200);
  CHECK(bit(io::parse_text(r->body).at("relation"), "M", "D"));

  r = f.get(base + "/sorting");
  REQUIRE(r->status == 200);
  CHECK(io::parse_text(r->body).at("A").at("possible") == Json::array({3, 3}));

  r = f.get(base + "/extreme-ranks");
  REQUIRE(r->status == 200);
  CHECK(io::parse_text(r->body).at("ranks").at("A").at("best") == 1);

  r = f.get(base + "/diagnose");
  REQUIRE(r->status == 200);
  CHECK(io::parse_text(r->body).at("compatible") == true);

  r = f.get(base + "/sweep");
  REQUIRE(r->status == 200);
  CHECK(io::parse_text(r->body).at("levels").size() == 1);

  r = f.get(base + "/export/dot?relation=necessary");
  REQUIRE(r->status == 200);
  CHECK(r->get_header_value("Content-Type").find("graphviz") != std::string::npos);
  CHECK(r->body.find("digraph") != std::string::npos);
}

TEST_CASE("incompatible sessions report their conflicts") {
  Fixture f;
  const std::string base = "/sessions/" + f.create(students());
  f.post(base + "/statements", statement(1));
  Json reverse = statement(1);
  reverse["id"] = "R";
  reverse["operands"] = Json::array({"D", "M"});
  auto r = f.post(base + "/statements", reverse);
  REQUIRE(r->status == 200);
  CHECK(io::parse_text(r->body).at("compatible") == false);

  CHECK(f.get(base + "/relations")->status == 409);
  r = f.get(base + "/diagnose");
  REQUIRE(r->status == 200);
  const Json sets = io::parse_text(r->body).at("minimal_sets");
  CHECK(sets == Json::parse(R"([["C1"], ["R"]])"));
}

TEST_CASE("HTTP error statuses") {
  Fixture f;
  CHECK(f.get("/sessions/999")->status == 404);
  CHECK(f.post("/problems", Json{{"n", 2}})->status == 400);
  auto r = f.client->Post("/problems", "{not json", "application/json");
  CHECK(r->status == 400);

  const std::string base = "/sessions/" + f.create(students());
  CHECK(f.get(base + "/relations?index=3,1")->status == 400);
  CHECK(f.get(base + "/relations?family=sometimes")->status == 400);
  CHECK(f.get(base + "/dominance?kind=ik")->status == 400);
  CHECK(f.get(base + "/sorting")->status == 400);
  CHECK(f.get(base + "/group?dms=nobody")->status == 400);
  CHECK(f.post(base + "/revert", Json{{"version", 4}})->status == 400);
  r = f.get(base + "/relations?index=3,1");
  CHECK(io::parse_text(r->body).at("code") == "IndexOutOfRange");

  const Json missing = Json::parse(R"({
    "n": 2,
    "criteria": [{"id": "g1"}, {"id": "g2", "scale": {"kind": "quantitative", "range": [0, 10]}}],
    "alternatives": {"a": {"g1": [1, 2], "g2": null}, "b": {"g1": [3, 4], "g2": [2, 5]}}
  })");
  const std::string m = "/sessions/" + f.create(missing);
  r = f.get(m + "/dominance");
  CHECK(r->status == 409);
  CHECK(io::parse_text(r->body).at("code") == "MissingEvaluationUnsupported");
  CHECK(f.get(m + "/dominance?kind=strong&collapse=true")->status == 200);
  CHECK(f.get(m + "/relations?index=strong&collapse=true")->status == 200);
}

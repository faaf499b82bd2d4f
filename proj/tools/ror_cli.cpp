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

// Command-line front end. Every subcommand prints the same JSON document the
// HTTP service returns for the equivalent request.

#include <CLI11.hpp>

#include <csignal>
#include <fstream>
#include <iostream>

#include "ror/api.hpp"
#include "ror/http.hpp"

namespace {

using ror::io::Json;

struct Inputs {
  std::string problem;
  std::string statements;
  std::string relation = "necessary";
  std::string index = "classic";
  std::string dot_out;
  std::string json_out;
  bool collapse = false;
};

ror::io::ProblemDocument load(const Inputs& in) {
  if (in.problem.empty()) throw ror::Error(ror::ErrorCode::bad_request, "--problem is required");
  ror::io::ProblemDocument doc = ror::io::parse_problem(ror::io::read_file(in.problem));
  if (!in.statements.empty()) {
    auto extra = ror::io::parse_statements(ror::io::read_file(in.statements), doc.statements.size() + 1);
    for (const auto& s : extra) ror::validate_statement(doc.table, s);
    doc.statements.insert(doc.statements.end(), extra.begin(), extra.end());
  }
  return doc;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::trunc);
  out << text;
  if (!out) throw ror::Error(ror::ErrorCode::bad_request, "cannot write '" + path + "'");
}

void emit(const Inputs& in, const Json& j) {
  const std::string text = ror::io::dump(j);
  std::cout << text;
  if (!in.json_out.empty()) write_file(in.json_out, text);
}

ror::HttpServer* active_server = nullptr;

void on_signal(int) {
  if (active_server) active_server->stop();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Robust ordinal regression with n-point imprecise evaluations"};
  app.require_subcommand(1);
  Inputs in;

  auto common = [&](CLI::App* sub, bool relation_flags) {
    sub->add_option("--problem", in.problem, "problem JSON file")->required();
    sub->add_option("--statements", in.statements, "statements JSON file, appended to the problem's own");
    sub->add_option("--json", in.json_out, "also write the JSON result to this file");
    sub->add_flag("--collapse", in.collapse, "collapse missing cells to two points (strong/weak only)");
    if (relation_flags) {
      sub->add_option("--index", in.index, "classic, strong, weak or i,k");
      sub->add_option("--dot", in.dot_out, "write the relation as a DOT digraph");
    }
  };

  auto* validate = app.add_subcommand("validate", "validate a problem and its statements");
  common(validate, false);
  auto* dominance = app.add_subcommand("dominance", "dominance relation");
  common(dominance, true);
  auto* relations = app.add_subcommand("relations", "necessary or possible preference relation");
  common(relations, true);
  relations->add_option("--relation", in.relation, "necessary or possible");

  auto* group = app.add_subcommand("group", "group relation over a coalition");
  common(group, true);
  std::string outer = "necessary", inner = "necessary";
  std::vector<std::string> dms;
  bool exclude = false;
  group->add_option("--relation,--outer", outer, "per-DM family: necessary or possible");
  group->add_option("--inner", inner, "necessary (every DM) or possible (some DM)");
  group->add_option("--dms", dms, "coalition members (default: every author)")->delimiter(',');
  group->add_flag("--exclude-incompatible", exclude, "drop DMs whose own statements are incompatible");

  auto* sort = app.add_subcommand("sort", "possible and necessary class assignments");
  common(sort, false);
  sort->add_option("--index", in.index, "classic, strong, weak or i,k");
  bool joint = false;
  sort->add_flag("--joint", joint, "add the ranking statements to the sorting model");

  auto* ranks = app.add_subcommand("extreme-ranks", "best and worst rank of every alternative");
  common(ranks, false);
  ranks->add_option("--index", in.index, "classic, strong, weak or i,k");
  int ri = 0, rk = 0;
  ranks->add_option("--i", ri, "left indicator index");
  ranks->add_option("--k", rk, "right indicator index");

  auto* diagnose = app.add_subcommand("diagnose", "minimal sets of conflicting statements");
  common(diagnose, false);
  ror::DiagnosisOptions dopts;
  diagnose->add_option("--max-sets", dopts.max_sets, "stop after this many sets");
  diagnose->add_option("--budget", dopts.node_budget, "branch-and-bound node budget");

  auto* sweep = app.add_subcommand("sweep-credibility", "relations per credibility level");
  common(sweep, false);
  sweep->add_option("--index", in.index, "classic, strong, weak or i,k");

  auto* props = app.add_subcommand("check-properties", "run the law suite on random instances");
  std::uint64_t seed = 42;
  int instances = 50, max_dms = 3;
  props->add_option("--seed", seed, "generator seed");
  props->add_option("--instances", instances, "number of random instances");
  props->add_option("--max-dms", max_dms, "decision makers per instance, at most");
  props->add_option("--json", in.json_out, "write the full JSON report to this file");

  auto* serve = app.add_subcommand("serve", "run the HTTP service");
  std::string host = "127.0.0.1", data_dir;
  int port = 8080;
  serve->add_option("--host", host, "listen address");
  serve->add_option("--port", port, "listen port (0 picks one)");
  serve->add_option("--data", data_dir, "session directory (default: in memory)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*props) {
      const Json report = ror::api::check_properties(seed, instances, max_dms);
      for (const auto& [name, g] : report.at("groups").items())
        std::cout << (g.at("failures").get<long>() == 0 ? "PASS " : "FAIL ") << name << ": "
                  << g.at("clauses") << " clauses, " << g.at("checks") << " checks, " << g.at("failures")
                  << " failures\n";
      for (const auto& c : report.at("clauses"))
        if (c.at("failures").get<long>() > 0)
          std::cout << "  " << c.at("name").get<std::string>() << ": " << c.at("first_failure").get<std::string>()
                    << "\n";
      std::cout << report.at("status").get<std::string>() << " " << report.at("instances") << " instances, seed "
                << seed << "\n";
      if (!in.json_out.empty()) write_file(in.json_out, ror::io::dump(report));
      return report.at("status") == "PASS" ? 0 : 1;
    }
    if (*serve) {
      ror::SessionStore store(data_dir.empty() ? std::nullopt : std::optional<std::filesystem::path>(data_dir));
      ror::HttpServer server(store);
      const int bound = server.bind(host, port);
      if (bound < 0) throw ror::Error(ror::ErrorCode::bad_request, "cannot bind " + host + ":" + std::to_string(port));
      std::cout << "listening on " << host << ":" << bound << std::endl;
      active_server = &server;
      std::signal(SIGINT, on_signal);
      std::signal(SIGTERM, on_signal);
      server.run();
      active_server = nullptr;
      return 0;
    }

    const ror::io::ProblemDocument doc = load(in);
    const ror::api::Query q{doc, in.collapse};
    if (*validate) {
      emit(in, ror::api::validate(q));
    } else if (*dominance || *relations) {
      const std::string what = *dominance ? "dominance" : in.relation;
      emit(in, *dominance ? ror::api::dominance(q, in.index)
                          : ror::api::relations(q, ror::io::parse_family(in.relation), in.index));
      if (!in.dot_out.empty()) write_file(in.dot_out, ror::api::dot(q, what, in.index));
    } else if (*group) {
      const Json j = ror::api::group(q, ror::io::parse_family(outer), ror::io::parse_family(inner), in.index,
                                     dms, exclude);
      emit(in, j);
      if (!in.dot_out.empty()) {
        ror::RelationMatrix m(j.at("relation").at("kind").get<std::string>(),
                              j.at("relation").at("order").get<std::vector<std::string>>());
        const auto& bits = j.at("relation").at("bits");
        for (std::size_t a = 0; a < m.size(); ++a)
          for (std::size_t b = 0; b < m.size(); ++b) m.set(a, b, bits[a][b].get<int>() != 0);
        write_file(in.dot_out, ror::to_dot(m));
      }
    } else if (*sort) {
      emit(in, ror::api::sorting(q, in.index, joint));
    } else if (*ranks) {
      const std::string index = (ri || rk) ? std::to_string(ri) + "," + std::to_string(rk) : in.index;
      emit(in, ror::api::extreme_ranks(q, index));
    } else if (*diagnose) {
      emit(in, ror::api::diagnose(q, dopts));
    } else if (*sweep) {
      emit(in, ror::api::sweep(q, in.index));
    }
    return 0;
  } catch (const ror::Error& e) {
    std::cerr << ror::io::dump(ror::io::to_json(e));
    return ror::api::exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << ror::io::dump(Json{{"code", "Internal"}, {"message", e.what()}, {"details", Json::array()}});
    return 1;
  }
}

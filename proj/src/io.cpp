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

#include "ror/io.hpp"

#include <fstream>
#include <sstream>

namespace ror::io {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw Error(ErrorCode::validation, msg, {msg}); }

const Json& member(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) fail(where + ": missing \"" + key + "\"");
  return j.at(key);
}

std::string as_string(const Json& j, const std::string& where) {
  if (!j.is_string()) fail(where + ": expected a string");
  return j.get<std::string>();
}

int as_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where + ": expected an integer");
  return j.get<int>();
}

RawPoint as_point(const Json& j, const std::string& where) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) return j.get<std::string>();
  fail(where + ": expected a number or a label");
}

Scale parse_scale(const Json& j, const std::string& where) {
  const std::string kind = as_string(member(j, "kind", where), where + ".kind");
  Scale s;
  if (kind == "qualitative") {
    const Json& labels = member(j, "labels", where);
    if (!labels.is_array()) fail(where + ".labels: expected an array");
    std::vector<std::string> ls;
    for (const auto& l : labels) ls.push_back(as_string(l, where + ".labels"));
    s = Scale::qualitative(std::move(ls));
  } else if (kind == "quantitative") {
    s = Scale::quantitative();
  } else {
    fail(where + ".kind: unknown scale kind '" + kind + "'");
  }
  if (j.contains("range")) {
    const Json& r = j.at("range");
    if (!r.is_array() || r.size() != 2 || !r[0].is_number() || !r[1].is_number())
      fail(where + ".range: expected [worst, best]");
    s.range = std::make_pair(r[0].get<double>(), r[1].get<double>());
  }
  return s;
}

}  // namespace

RawProblem parse_raw_problem(const Json& j) {
  if (!j.is_object()) fail("problem: expected an object");
  RawProblem raw;
  raw.n = as_int(member(j, "n", "problem"), "problem.n");
  const Json& crits = member(j, "criteria", "problem");
  if (!crits.is_array()) fail("problem.criteria: expected an array");
  for (std::size_t c = 0; c < crits.size(); ++c) {
    const std::string where = "criteria[" + std::to_string(c) + "]";
    Criterion crit;
    crit.id = as_string(member(crits[c], "id", where), where + ".id");
    crit.scale = crits[c].contains("scale") ? parse_scale(crits[c].at("scale"), where + ".scale")
                                            : Scale::quantitative();
    raw.criteria.push_back(std::move(crit));
  }
  const Json& alts = member(j, "alternatives", "problem");
  if (!alts.is_object()) fail("problem.alternatives: expected an object keyed by alternative id");
  for (const auto& [id, row] : alts.items()) {
    const std::string where = "alternatives." + id;
    if (!row.is_object()) fail(where + ": expected an object keyed by criterion id");
    RawAlternative alt;
    alt.id = id;
    for (const auto& crit : raw.criteria) {
      if (!row.contains(crit.id)) fail(where + ": no evaluation for criterion '" + crit.id + "'");
      const Json& cell = row.at(crit.id);
      const std::string cw = where + "." + crit.id;
      if (cell.is_null()) {
        alt.cells.emplace_back(std::nullopt);
      } else if (cell.is_array()) {
        std::vector<RawPoint> pts;
        for (const auto& p : cell) pts.push_back(as_point(p, cw));
        alt.cells.emplace_back(std::move(pts));
      } else {
        alt.cells.emplace_back(std::vector<RawPoint>(static_cast<std::size_t>(std::max(raw.n, 1)),
                                                     as_point(cell, cw)));
      }
    }
    for (const auto& [key, _] : row.items()) {
      bool known = false;
      for (const auto& crit : raw.criteria) known = known || crit.id == key;
      if (!known) fail(where + ": unknown criterion '" + key + "'");
    }
    raw.alternatives.push_back(std::move(alt));
  }
  if (j.contains("reference") && !j.at("reference").is_null()) {
    const Json& ref = j.at("reference");
    if (!ref.is_array()) fail("problem.reference: expected an array");
    std::vector<std::string> ids;
    for (const auto& r : ref) ids.push_back(as_string(r, "problem.reference"));
    raw.reference = std::move(ids);
  }
  return raw;
}

ProblemDocument parse_problem(const Json& j) {
  ProblemDocument doc{validate_table(parse_raw_problem(j)), {}, std::nullopt};
  if (j.contains("statements")) {
    doc.statements = parse_statements(j.at("statements"));
    for (const auto& s : doc.statements) validate_statement(doc.table, s);
  }
  if (j.contains("sorting") && !j.at("sorting").is_null()) doc.sorting = parse_sorting(j.at("sorting"));
  return doc;
}

PreferenceStatement parse_statement(const Json& j, std::size_t position) {
  const std::string where = "statement " + std::to_string(position);
  if (!j.is_object()) fail(where + ": expected an object");
  PreferenceStatement s;
  s.id = j.contains("id") ? as_string(j.at("id"), where + ".id") : "s" + std::to_string(position);
  const std::string kind = as_string(member(j, "kind", where), where + ".kind");
  auto k = parse_statement_kind(kind);
  if (!k) fail(where + ": unknown statement kind '" + kind + "'");
  s.kind = *k;
  const Json& ops = member(j, "operands", where);
  if (!ops.is_array()) fail(where + ".operands: expected an array");
  for (const auto& o : ops) s.operands.push_back(as_string(o, where + ".operands"));
  if (j.contains("criterion") && !j.at("criterion").is_null())
    s.criterion = as_string(j.at("criterion"), where + ".criterion");
  if (j.contains("credibility")) s.credibility = as_int(j.at("credibility"), where + ".credibility");
  if (j.contains("dm")) s.author = as_string(j.at("dm"), where + ".dm");
  return s;
}

std::vector<PreferenceStatement> parse_statements(const Json& j, std::size_t first_position) {
  const Json* arr = &j;
  if (j.is_object()) arr = &member(j, "statements", "statements document");
  if (!arr->is_array()) fail("statements: expected an array");
  std::vector<PreferenceStatement> out;
  for (std::size_t i = 0; i < arr->size(); ++i) out.push_back(parse_statement((*arr)[i], first_position + i));
  std::vector<std::string> ids;
  for (const auto& s : out) {
    for (const auto& id : ids)
      if (id == s.id) fail("statements: duplicate id '" + s.id + "'");
    ids.push_back(s.id);
  }
  return out;
}

SortingSpec parse_sorting(const Json& j) {
  SortingSpec spec;
  const Json& classes = member(j, "classes", "sorting");
  if (!classes.is_array()) fail("sorting.classes: expected an array");
  for (const auto& c : classes) spec.classes.labels.push_back(as_string(c, "sorting.classes"));
  if (j.contains("examples")) {
    const Json& ex = j.at("examples");
    if (!ex.is_array()) fail("sorting.examples: expected an array");
    for (std::size_t i = 0; i < ex.size(); ++i) {
      const std::string where = "sorting.examples[" + std::to_string(i) + "]";
      AssignmentExample e;
      e.alternative = as_string(member(ex[i], "alt", where), where + ".alt");
      e.lower = as_int(member(ex[i], "L", where), where + ".L");
      e.upper = as_int(member(ex[i], "R", where), where + ".R");
      spec.examples.push_back(std::move(e));
    }
  }
  return spec;
}

Json to_json(const PreferenceStatement& s) {
  Json j;
  j["id"] = s.id;
  j["kind"] = std::string(to_string(s.kind));
  j["operands"] = s.operands;
  if (s.criterion) j["criterion"] = *s.criterion;
  j["credibility"] = s.credibility;
  j["dm"] = s.author;
  return j;
}

Json to_json(const RelationMatrix& m) {
  Json j;
  j["kind"] = m.kind();
  j["order"] = m.order();
  Json bits = Json::array();
  for (std::size_t a = 0; a < m.size(); ++a) {
    Json row = Json::array();
    for (std::size_t b = 0; b < m.size(); ++b) row.push_back(m(a, b) ? 1 : 0);
    bits.push_back(std::move(row));
  }
  j["bits"] = std::move(bits);
  return j;
}

Json to_json(const Error& e) {
  Json j;
  j["code"] = std::string(to_string(e.code()));
  j["message"] = e.what();
  j["details"] = e.details();
  return j;
}

Json to_json(const std::optional<ClassInterval>& c) {
  if (!c) return nullptr;
  return Json::array({c->lower, c->upper});
}

QueryIndex parse_index(const std::string& text, int n) {
  if (text == "classic") return QueryIndex::whole();
  if (text == "strong") return QueryIndex::strong(n);
  if (text == "weak") return QueryIndex::weak(n);
  const auto comma = text.find(',');
  if (comma != std::string::npos) {
    try {
      std::size_t used_i = 0, used_k = 0;
      const int i = std::stoi(text.substr(0, comma), &used_i);
      const int k = std::stoi(text.substr(comma + 1), &used_k);
      if (used_i == comma && used_k == text.size() - comma - 1) return QueryIndex::pair(i, k);
    } catch (const std::exception&) {
    }
  }
  throw Error(ErrorCode::bad_request, "index must be classic, strong, weak or i,k; got '" + text + "'");
}

std::string index_text(const QueryIndex& idx) {
  if (idx.classic) return "classic";
  return std::to_string(idx.i) + "," + std::to_string(idx.k);
}

Family parse_family(const std::string& text) {
  if (text == "necessary" || text == "N") return Family::necessary;
  if (text == "possible" || text == "P") return Family::possible;
  throw Error(ErrorCode::bad_request, "relation must be necessary or possible; got '" + text + "'");
}

Json parse_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::bad_request, std::string("malformed JSON: ") + e.what());
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::bad_request, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_text(ss.str());
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace ror::io

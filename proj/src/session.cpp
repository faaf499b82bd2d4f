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

#include "ror/session.hpp"

#include <chrono>
#include <ctime>
#include <fstream>

namespace ror {

namespace {

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

[[noreturn]] void unknown(const std::string& id) {
  throw Error(ErrorCode::unknown_session, "unknown session '" + id + "'");
}

// Statements with missing cells are checked on the two-point collapse when
// the criterion ranges allow it.
Compatibility compatibility(const io::ProblemDocument& doc) {
  if (!doc.table.has_missing()) return check_compatibility(doc.table, doc.statements);
  return check_compatibility(collapse_to_two_point(doc.table), doc.statements);
}

io::Json entry_json(const LogEntry& e) {
  io::Json j = io::to_json(e.statement);
  j["timestamp"] = e.timestamp;
  return j;
}

// Statement errors of any flavour surface as validation errors.
PreferenceStatement checked_statement(const io::Json& j, std::size_t position,
                                      const PerformanceTable& table,
                                      const std::vector<LogEntry>& log) {
  try {
    PreferenceStatement s = io::parse_statement(j, position);
    validate_statement(table, s);
    for (const auto& e : log)
      if (e.statement.id == s.id) throw Error(ErrorCode::validation, "duplicate statement id '" + s.id + "'");
    return s;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::validation) throw;
    throw Error(ErrorCode::validation, e.what(), e.details());
  }
}

}  // namespace

SessionStore::SessionStore(std::optional<std::filesystem::path> dir) : dir_(std::move(dir)) {
  if (!dir_) return;
  std::filesystem::create_directories(*dir_);
  for (const auto& f : std::filesystem::directory_iterator(*dir_))
    if (f.path().extension() == ".json") load(f.path());
}

void SessionStore::load(const std::filesystem::path& file) {
  const io::Json j = io::read_file(file.string());
  auto s = std::make_unique<Session>();
  s->id = j.at("id").get<std::string>();
  s->problem = j.at("problem");
  s->base = io::parse_problem(s->problem);
  const io::Json& log = j.at("log");
  for (std::size_t i = 0; i < log.size(); ++i)
    s->log.push_back({io::parse_statement(log[i], i + 1), log[i].value("timestamp", std::string())});
  try {
    next_id_ = std::max(next_id_, std::stol(s->id) + 1);
  } catch (const std::exception&) {
  }
  sessions_.emplace(s->id, std::move(s));
}

void SessionStore::persist(const Session& s) const {
  if (!dir_) return;
  io::Json j;
  j["id"] = s.id;
  j["problem"] = s.problem;
  io::Json log = io::Json::array();
  for (const auto& e : s.log) log.push_back(entry_json(e));
  j["log"] = std::move(log);
  const auto target = *dir_ / (s.id + ".json");
  const auto tmp = *dir_ / (s.id + ".json.tmp");
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << io::dump(j);
    if (!out) throw Error(ErrorCode::solver_failure, "cannot write session file '" + tmp.string() + "'");
  }
  std::filesystem::rename(tmp, target);
}

SessionStore::Session& SessionStore::get(const std::string& id) const {
  std::lock_guard g(store_lock_);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) unknown(id);
  return *it->second;
}

io::ProblemDocument SessionStore::document(const Session& s) {
  io::ProblemDocument doc = s.base;
  for (const auto& e : s.log) doc.statements.push_back(e.statement);
  return doc;
}

io::Json SessionStore::create(const io::Json& problem) {
  io::Json stripped = problem;
  io::Json embedded = io::Json::array();
  if (stripped.is_object() && stripped.contains("statements")) {
    embedded = stripped.at("statements");
    if (embedded.is_object()) embedded = embedded.value("statements", io::Json::array());
    stripped.erase("statements");
  }
  auto s = std::make_unique<Session>();
  s->problem = stripped;
  s->base = io::parse_problem(stripped);
  if (!embedded.is_array()) throw Error(ErrorCode::validation, "statements: expected an array");
  const std::string now = utc_now();
  for (std::size_t i = 0; i < embedded.size(); ++i)
    s->log.push_back({checked_statement(embedded[i], i + 1, s->base.table, s->log), now});

  std::lock_guard g(store_lock_);
  s->id = std::to_string(next_id_++);
  persist(*s);
  io::Json out;
  out["id"] = s->id;
  out["version"] = s->log.size();
  sessions_.emplace(s->id, std::move(s));
  return out;
}

io::Json SessionStore::add_statement(const std::string& id, const io::Json& statement) {
  Session& s = get(id);
  std::unique_lock w(s.lock);
  PreferenceStatement st = checked_statement(statement, s.log.size() + 1, s.base.table, s.log);
  io::ProblemDocument doc = document(s);
  doc.statements.push_back(st);
  const Compatibility c = compatibility(doc);
  s.log.push_back({std::move(st), utc_now()});
  persist(s);
  io::Json out;
  out["version"] = s.log.size();
  out["compatible"] = c.compatible;
  out["epsilon"] = c.epsilon ? io::Json(*c.epsilon) : io::Json(nullptr);
  return out;
}

io::Json SessionStore::revert(const std::string& id, long version) {
  Session& s = get(id);
  std::unique_lock w(s.lock);
  if (version < 0 || version > static_cast<long>(s.log.size()))
    throw Error(ErrorCode::bad_request, "cannot revert to version " + std::to_string(version) +
                                            "; current version is " + std::to_string(s.log.size()));
  s.log.resize(static_cast<std::size_t>(version));
  {
    std::lock_guard c(s.cache_lock);
    std::erase_if(s.cache, [&](const auto& kv) { return kv.second.first > version; });
  }
  persist(s);
  return io::Json{{"version", version}};
}

io::Json SessionStore::describe(const std::string& id) const {
  const Session& s = get(id);
  std::shared_lock r(s.lock);
  io::Json log = io::Json::array();
  for (const auto& e : s.log) log.push_back(entry_json(e));
  io::Json j;
  j["id"] = s.id;
  j["version"] = s.log.size();
  j["log"] = std::move(log);
  return j;
}

long SessionStore::version(const std::string& id) const {
  const Session& s = get(id);
  std::shared_lock r(s.lock);
  return static_cast<long>(s.log.size());
}

std::vector<std::string> SessionStore::ids() const {
  std::lock_guard g(store_lock_);
  std::vector<std::string> out;
  for (const auto& [id, _] : sessions_) out.push_back(id);
  return out;
}

std::string SessionStore::query(const std::string& id, const std::string& key,
                                const std::function<std::string(const io::ProblemDocument&)>& compute) {
  Session& s = get(id);
  std::shared_lock r(s.lock);
  // Revert drops entries above its target, so a cached version always
  // names the current log prefix.
  const long version = static_cast<long>(s.log.size());
  {
    std::lock_guard c(s.cache_lock);
    auto it = s.cache.find(key);
    if (it != s.cache.end() && it->second.first == version) {
      std::lock_guard st(stats_lock_);
      ++stats_.hits;
      return it->second.second;
    }
  }
  std::string body = compute(document(s));
  {
    std::lock_guard c(s.cache_lock);
    s.cache[key] = {version, body};
  }
  std::lock_guard st(stats_lock_);
  ++stats_.misses;
  return body;
}

SessionStore::Stats SessionStore::stats() const {
  std::lock_guard st(stats_lock_);
  return stats_;
}

}  // namespace ror

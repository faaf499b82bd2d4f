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

// Sessions: a validated problem plus an append-only statement log with
// explicit revert, a per-version result cache and optional persistence as
// one JSON document per session.

#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "ror/io.hpp"

namespace ror {

struct LogEntry {
  PreferenceStatement statement;
  std::string timestamp;  // UTC, ISO 8601
};

class SessionStore {
 public:
  // Without a directory sessions live in memory only. With one, existing
  // session files are loaded and every mutation is written through.
  explicit SessionStore(std::optional<std::filesystem::path> dir = std::nullopt);

  // Statements embedded in the problem become the first log entries.
  // Returns {id, version}.
  io::Json create(const io::Json& problem);
  // Returns {version, compatible, epsilon}. An incompatible statement stays
  // in the log.
  io::Json add_statement(const std::string& id, const io::Json& statement);
  // Keeps the first `version` entries. Returns {version}.
  io::Json revert(const std::string& id, long version);
  // {id, version, log}.
  io::Json describe(const std::string& id) const;

  long version(const std::string& id) const;
  std::vector<std::string> ids() const;

  // Runs `compute` on the document at the current version, or returns the
  // body cached under the same key at that version.
  std::string query(const std::string& id, const std::string& key,
                    const std::function<std::string(const io::ProblemDocument&)>& compute);

  struct Stats {
    long hits = 0;
    long misses = 0;
  };
  Stats stats() const;

 private:
  struct Session {
    std::string id;
    io::Json problem;  // as uploaded, without statements
    io::ProblemDocument base;
    std::vector<LogEntry> log;
    std::map<std::string, std::pair<long, std::string>> cache;  // key -> (version, body)
    mutable std::shared_mutex lock;
    std::mutex cache_lock;
  };

  std::optional<std::filesystem::path> dir_;
  mutable std::mutex store_lock_;
  std::map<std::string, std::unique_ptr<Session>> sessions_;
  long next_id_ = 1;
  mutable std::mutex stats_lock_;
  Stats stats_;

  Session& get(const std::string& id) const;
  void persist(const Session& s) const;
  void load(const std::filesystem::path& file);
  static io::ProblemDocument document(const Session& s);
};

}  // namespace ror

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

#include "ror/group_engine.hpp"

#include <algorithm>

#include "ror/error.hpp"

namespace ror {

namespace {

char letter(Family f) { return f == Family::necessary ? 'N' : 'P'; }

}  // namespace

std::string group_tag(Family outer, Family inner, const QueryIndex& idx,
                      const std::vector<std::string>& coalition) {
  std::string tag = "group(";
  tag += letter(outer);
  tag += ',';
  tag += letter(inner);
  tag += ')';
  if (!idx.classic) tag += "(" + std::to_string(idx.i) + "," + std::to_string(idx.k) + ")";
  tag += '{';
  for (std::size_t i = 0; i < coalition.size(); ++i) {
    if (i) tag += ',';
    tag += coalition[i];
  }
  tag += '}';
  return tag;
}

GroupEngine::GroupEngine(const PerformanceTable& table,
                         const std::vector<PreferenceStatement>& statements,
                         std::optional<std::vector<std::string>> roster, GroupOptions options)
    : table_(table), options_(options) {
  if (roster) {
    roster_ = *roster;
  } else {
    for (const auto& s : statements)
      if (std::find(roster_.begin(), roster_.end(), s.author) == roster_.end())
        roster_.push_back(s.author);
  }
  for (const auto& dm : roster_) logs_[dm];
  for (const auto& s : statements) {
    auto it = logs_.find(s.author);
    if (it == logs_.end())
      throw Error(ErrorCode::unknown_dm, "statement '" + s.id + "' names unknown DM '" + s.author + "'");
    it->second.push_back(s);
  }
}

RorEngine& GroupEngine::engine(const std::string& dm) {
  auto log = logs_.find(dm);
  if (log == logs_.end()) throw Error(ErrorCode::unknown_dm, "unknown DM '" + dm + "'");
  auto& slot = engines_[dm];
  if (!slot) slot = std::make_unique<RorEngine>(table_, log->second, options_.engine);
  return *slot;
}

bool GroupEngine::dm_compatible(const std::string& dm) { return engine(dm).compatible(); }

RelationMatrix GroupEngine::relation(const std::vector<std::string>& coalition, Family outer,
                                     Family inner, const QueryIndex& idx) {
  excluded_.clear();
  if (coalition.empty()) throw Error(ErrorCode::empty_coalition, "coalition is empty");
  std::vector<std::string> members;
  for (const auto& dm : coalition) {
    if (std::find(members.begin(), members.end(), dm) != members.end()) continue;
    if (!dm_compatible(dm)) {
      if (!options_.exclude_incompatible)
        throw Error(ErrorCode::dm_incompatible, "DM '" + dm + "' has incompatible statements", {dm});
      excluded_.push_back(dm);
      continue;
    }
    members.push_back(dm);
  }
  if (members.empty())
    throw Error(ErrorCode::empty_coalition, "no compatible DM left in the coalition", excluded_);

  std::optional<RelationMatrix> acc;
  for (const auto& dm : members) {
    RelationMatrix m = engine(dm).relation(outer, idx);
    if (!acc)
      acc = std::move(m);
    else
      acc = inner == Family::necessary ? acc->intersect(m) : acc->unite(m);
  }
  acc->set_kind(group_tag(outer, inner, idx, members));
  return *acc;
}

}  // namespace ror

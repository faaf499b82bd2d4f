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

// Group relations: each DM's necessary or possible relation (outer),
// quantified over a coalition with "for all" (inner N) or "for at least
// one" (inner P). Built from per-DM matrices only.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ror/ror_engine.hpp"

namespace ror {

struct GroupOptions {
  // Drop DMs whose own statements are incompatible instead of failing.
  bool exclude_incompatible = false;
  EngineOptions engine;
};

class GroupEngine {
 public:
  // The roster defaults to the statement authors in first-appearance order;
  // a DM without statements works on the whole base polytope.
  GroupEngine(const PerformanceTable& table, const std::vector<PreferenceStatement>& statements,
              std::optional<std::vector<std::string>> roster = std::nullopt, GroupOptions options = {});

  const std::vector<std::string>& roster() const noexcept { return roster_; }
  // Throws UnknownDm.
  RorEngine& engine(const std::string& dm);
  bool dm_compatible(const std::string& dm);

  // Throws EmptyCoalition, UnknownDm, DmIncompatible.
  RelationMatrix relation(const std::vector<std::string>& coalition, Family outer, Family inner,
                          const QueryIndex& idx);

  // Coalition members that were dropped by the last relation() call.
  const std::vector<std::string>& excluded() const noexcept { return excluded_; }

 private:
  PerformanceTable table_;
  std::vector<std::string> roster_;
  std::map<std::string, std::vector<PreferenceStatement>> logs_;
  std::map<std::string, std::unique_ptr<RorEngine>> engines_;
  GroupOptions options_;
  std::vector<std::string> excluded_;
};

std::string group_tag(Family outer, Family inner, const QueryIndex& idx,
                      const std::vector<std::string>& coalition);

}  // namespace ror

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

#include <cstddef>
#include <string>

#include "ror/model.hpp"
#include "ror/relation.hpp"

namespace ror {

// a (i,k)-dominates b: g_j^i(a) >= g_j^k(b) on every criterion.
bool ik_dominates(const PerformanceTable& t, std::size_t a, std::size_t b, int i, int k);

// a normally dominates b: a (i,i)-dominates b for every i.
bool dominates(const PerformanceTable& t, std::size_t a, std::size_t b);

enum class DominanceKind { ik, normal, strong, weak };

struct DominanceQuery {
  DominanceKind kind = DominanceKind::normal;
  int i = 1;  // ik only
  int k = 1;

  static DominanceQuery normal() { return {DominanceKind::normal, 1, 1}; }
  static DominanceQuery strong() { return {DominanceKind::strong, 1, 1}; }
  static DominanceQuery weak() { return {DominanceKind::weak, 1, 1}; }
  static DominanceQuery pair(int i, int k) { return {DominanceKind::ik, i, k}; }
};

// Tag used as RelationMatrix::kind, e.g. "dom(1,2)" or "dom-normal".
std::string dominance_tag(const PerformanceTable& t, const DominanceQuery& q);

// strong = (1,n), weak = (n,1).
RelationMatrix dominance_matrix(const PerformanceTable& t, const DominanceQuery& q);

}  // namespace ror

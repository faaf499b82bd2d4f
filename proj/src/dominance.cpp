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

#include "ror/dominance.hpp"

#include "ror/error.hpp"

namespace ror {

namespace {

void check_index(const PerformanceTable& t, int i) {
  if (i < 1 || i > t.n())
    throw Error(ErrorCode::index_out_of_range,
                "indicator index " + std::to_string(i) + " outside 1.." + std::to_string(t.n()));
}

bool ik_unchecked(const PerformanceTable& t, std::size_t a, std::size_t b, int i, int k) {
  for (std::size_t j = 0; j < t.num_criteria(); ++j)
    if (t.evaluation(a, j).point(i) < t.evaluation(b, j).point(k)) return false;
  return true;
}

}  // namespace

bool ik_dominates(const PerformanceTable& t, std::size_t a, std::size_t b, int i, int k) {
  t.require_complete(a);
  t.require_complete(b);
  check_index(t, i);
  check_index(t, k);
  return ik_unchecked(t, a, b, i, k);
}

bool dominates(const PerformanceTable& t, std::size_t a, std::size_t b) {
  t.require_complete(a);
  t.require_complete(b);
  for (int i = 1; i <= t.n(); ++i)
    if (!ik_unchecked(t, a, b, i, i)) return false;
  return true;
}

std::string dominance_tag(const PerformanceTable& t, const DominanceQuery& q) {
  switch (q.kind) {
    case DominanceKind::normal: return "dom-normal";
    case DominanceKind::strong: return "dom(1," + std::to_string(t.n()) + ")";
    case DominanceKind::weak: return "dom(" + std::to_string(t.n()) + ",1)";
    case DominanceKind::ik: break;
  }
  return "dom(" + std::to_string(q.i) + "," + std::to_string(q.k) + ")";
}

RelationMatrix dominance_matrix(const PerformanceTable& t, const DominanceQuery& q) {
  for (std::size_t a = 0; a < t.num_alternatives(); ++a) t.require_complete(a);
  RelationMatrix m(dominance_tag(t, q), t.alternative_ids());
  const std::size_t n = t.num_alternatives();
  if (q.kind == DominanceKind::normal) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) m.set(a, b, dominates(t, a, b));
    return m;
  }
  int i = q.i, k = q.k;
  if (q.kind == DominanceKind::strong) i = 1, k = t.n();
  if (q.kind == DominanceKind::weak) i = t.n(), k = 1;
  check_index(t, i);
  check_index(t, k);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) m.set(a, b, ik_unchecked(t, a, b, i, k));
  return m;
}

}  // namespace ror

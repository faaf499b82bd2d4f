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

#include "ror/relation.hpp"

#include <algorithm>
#include <sstream>

#include "ror/error.hpp"

namespace ror {

RelationMatrix::RelationMatrix(std::string kind, std::vector<std::string> order)
    : kind_(std::move(kind)), order_(std::move(order)), bits_(order_.size() * order_.size(), 0) {}

std::size_t RelationMatrix::count() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

bool RelationMatrix::subset_of(const RelationMatrix& other) const {
  return first_not_in(other).first == size();
}

std::pair<std::size_t, std::size_t> RelationMatrix::first_not_in(const RelationMatrix& other) const {
  const std::size_t n = size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if ((*this)(a, b) && !other(a, b)) return {a, b};
  return {n, n};
}

RelationMatrix RelationMatrix::intersect(const RelationMatrix& other) const {
  RelationMatrix out(kind_, order_);
  for (std::size_t x = 0; x < bits_.size(); ++x) out.bits_[x] = bits_[x] & other.bits_[x];
  return out;
}

RelationMatrix RelationMatrix::unite(const RelationMatrix& other) const {
  RelationMatrix out(kind_, order_);
  for (std::size_t x = 0; x < bits_.size(); ++x) out.bits_[x] = bits_[x] | other.bits_[x];
  return out;
}

bool RelationMatrix::is_reflexive() const {
  for (std::size_t a = 0; a < size(); ++a)
    if (!(*this)(a, a)) return false;
  return true;
}

bool RelationMatrix::is_transitive() const {
  const std::size_t n = size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (!(*this)(a, b)) continue;
      for (std::size_t c = 0; c < n; ++c)
        if ((*this)(b, c) && !(*this)(a, c)) return false;
    }
  return true;
}

bool RelationMatrix::is_strongly_complete() const {
  const std::size_t n = size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b)
      if (!(*this)(a, b) && !(*this)(b, a)) return false;
  return true;
}

bool RelationMatrix::is_negatively_transitive() const {
  // not aRb and not bRc => not aRc
  const std::size_t n = size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if ((*this)(a, b)) continue;
      for (std::size_t c = 0; c < n; ++c)
        if (!(*this)(b, c) && (*this)(a, c)) return false;
    }
  return true;
}

HasseDiagram hasse(const RelationMatrix& m) {
  const std::size_t n = m.size();
  auto rel = [&](std::size_t a, std::size_t b) { return a == b || m(a, b); };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (!rel(a, b)) continue;
      for (std::size_t c = 0; c < n; ++c)
        if (rel(b, c) && !rel(a, c))
          throw Error(ErrorCode::not_transitive,
                      "relation '" + m.kind() + "' is not transitive: " + m.order()[a] +
                          " -> " + m.order()[b] + " -> " + m.order()[c]);
    }

  HasseDiagram h;
  std::vector<std::size_t> node_of(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    if (node_of[a] != n) continue;
    node_of[a] = h.nodes.size();
    h.nodes.push_back({a});
    for (std::size_t b = a + 1; b < n; ++b)
      if (node_of[b] == n && rel(a, b) && rel(b, a)) {
        node_of[b] = node_of[a];
        h.nodes.back().push_back(b);
      }
  }

  const std::size_t k = h.nodes.size();
  auto strict = [&](std::size_t x, std::size_t y) {
    const std::size_t a = h.nodes[x].front(), b = h.nodes[y].front();
    return x != y && rel(a, b) && !rel(b, a);
  };
  for (std::size_t x = 0; x < k; ++x)
    for (std::size_t y = 0; y < k; ++y) {
      if (!strict(x, y)) continue;
      bool covered = false;
      for (std::size_t z = 0; z < k && !covered; ++z)
        covered = strict(x, z) && strict(z, y);
      if (!covered) h.arcs.emplace_back(x, y);
    }
  return h;
}

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_dot(const RelationMatrix& m, bool reduce) {
  std::ostringstream os;
  os << "digraph " << quote(m.kind()) << " {\n";
  if (reduce && m.is_transitive()) {
    const HasseDiagram h = hasse(m);
    for (std::size_t x = 0; x < h.nodes.size(); ++x) {
      std::string label;
      for (std::size_t a : h.nodes[x]) {
        if (!label.empty()) label += ",";
        label += m.order()[a];
      }
      os << "  n" << x << " [label=" << quote(label) << "];\n";
    }
    for (auto [x, y] : h.arcs) os << "  n" << x << " -> n" << y << ";\n";
  } else {
    for (const auto& id : m.order()) os << "  " << quote(id) << ";\n";
    for (std::size_t a = 0; a < m.size(); ++a)
      for (std::size_t b = 0; b < m.size(); ++b)
        if (a != b && m(a, b)) os << "  " << quote(m.order()[a]) << " -> " << quote(m.order()[b]) << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace ror

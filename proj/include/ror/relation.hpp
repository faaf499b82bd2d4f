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
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ror {

// Boolean |A| x |A| matrix for one relation kind. bits(a, b) is true iff
// the tagged relation holds for the ordered pair (a, b).
class RelationMatrix {
 public:
  RelationMatrix() = default;
  RelationMatrix(std::string kind, std::vector<std::string> order);

  const std::string& kind() const noexcept { return kind_; }
  void set_kind(std::string kind) { kind_ = std::move(kind); }
  const std::vector<std::string>& order() const noexcept { return order_; }
  std::size_t size() const noexcept { return order_.size(); }

  bool operator()(std::size_t a, std::size_t b) const { return bits_[a * size() + b] != 0; }
  void set(std::size_t a, std::size_t b, bool v) { bits_[a * size() + b] = v ? 1 : 0; }

  std::size_t count() const;
  bool subset_of(const RelationMatrix& other) const;
  // First (a, b) in this but not in other, or {size, size}.
  std::pair<std::size_t, std::size_t> first_not_in(const RelationMatrix& other) const;
  RelationMatrix intersect(const RelationMatrix& other) const;
  RelationMatrix unite(const RelationMatrix& other) const;

  bool is_reflexive() const;
  bool is_transitive() const;
  bool is_strongly_complete() const;
  bool is_negatively_transitive() const;

  // Same bits, order and size; the kind tag is ignored.
  bool same_bits(const RelationMatrix& other) const { return bits_ == other.bits_ && order_ == other.order_; }

 private:
  std::string kind_;
  std::vector<std::string> order_;
  std::vector<std::uint8_t> bits_;
};

// Transitive reduction of the strict part with indifference classes merged.
struct HasseDiagram {
  // Each node is one indifference class, alternatives by table index.
  std::vector<std::vector<std::size_t>> nodes;
  // node -> node, better to worse.
  std::vector<std::pair<std::size_t, std::size_t>> arcs;
};

// Throws NotTransitive when the relation (diagonal taken as reflexive) is
// not transitive.
HasseDiagram hasse(const RelationMatrix& m);

// Graphviz digraph. Transitive relations are drawn as their Hasse diagram
// when `reduce` is set; otherwise (or for non-transitive relations) one arc
// per true off-diagonal bit.
std::string to_dot(const RelationMatrix& m, bool reduce = true);

}  // namespace ror

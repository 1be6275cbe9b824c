// Copyright 2026 The Authors.
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

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "rkout/model.hpp"

namespace rkout {

/// Dense membership set over ids 0..universe-1 with tracked cardinality.
template <typename Tag>
class DenseSet {
 public:
  DenseSet() = default;
  explicit DenseSet(std::size_t universe) : member_(universe, 0) {}
  DenseSet(std::size_t universe, std::initializer_list<std::uint32_t> ids) : DenseSet(universe) {
    for (const auto id : ids) insert(id);
  }

  [[nodiscard]] std::size_t universe() const { return member_.size(); }
  [[nodiscard]] std::size_t size() const { return size_; }
  [[nodiscard]] bool empty() const { return size_ == 0; }
  [[nodiscard]] bool contains(std::uint32_t id) const { return member_[id] != 0; }

  bool insert(std::uint32_t id) {
    if (member_[id]) return false;
    member_[id] = 1;
    ++size_;
    return true;
  }
  bool erase(std::uint32_t id) {
    if (!member_[id]) return false;
    member_[id] = 0;
    --size_;
    return true;
  }
  void clear() {
    std::fill(member_.begin(), member_.end(), 0);
    size_ = 0;
  }

  /// Members in increasing id order.
  [[nodiscard]] std::vector<std::uint32_t> members() const {
    std::vector<std::uint32_t> out;
    out.reserve(size_);
    for (std::uint32_t i = 0; i < member_.size(); ++i) {
      if (member_[i]) out.push_back(i);
    }
    return out;
  }

  friend bool operator==(const DenseSet& a, const DenseSet& b) { return a.member_ == b.member_; }

 private:
  std::vector<char> member_;
  std::size_t size_ = 0;
};

struct EdgeTag {};
struct ColourTag {};
using EdgeSet = DenseSet<EdgeTag>;
using ColourSet = DenseSet<ColourTag>;

/// Union-find with path compression and union by rank; tracks the number of
/// components.
class DisjointSetForest {
 public:
  explicit DisjointSetForest(std::uint32_t n);

  VertexId find(VertexId v);
  /// Returns false when u and v were already joined.
  bool unite(VertexId u, VertexId v);
  [[nodiscard]] std::uint32_t components() const { return components_; }

 private:
  std::vector<VertexId> parent_;
  std::vector<std::uint8_t> rank_;
  std::uint32_t components_;
};

/// Components of the spanning subgraph ([n], s); isolated vertices count.
std::uint32_t kappa(const MultiGraph& g, const EdgeSet& s);

/// Graphic-matroid rank: n - kappa. Loops contribute nothing.
std::uint32_t graphic_rank(const MultiGraph& g, const EdgeSet& s);

/// True iff s + e is a forest. `s` must itself be a forest.
bool graphic_independent(const MultiGraph& g, const EdgeSet& s, EdgeId e);

/// Partition-matroid rank: number of distinct colours occurring in s.
std::uint32_t partition_rank(const Colouring& c, const EdgeSet& s);

/// Edges whose colour lies in `colours`.
EdgeSet edges_with_colours(const Colouring& c, const ColourSet& colours);

}  // namespace rkout

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

#include "rkout/matroid.hpp"

#include <numeric>
#include <utility>

namespace rkout {

DisjointSetForest::DisjointSetForest(std::uint32_t n) : parent_(n), rank_(n, 0), components_(n) {
  std::iota(parent_.begin(), parent_.end(), 0u);
}

VertexId DisjointSetForest::find(VertexId v) {
  VertexId root = v;
  while (parent_[root] != root) root = parent_[root];
  while (parent_[v] != root) v = std::exchange(parent_[v], root);
  return root;
}

bool DisjointSetForest::unite(VertexId u, VertexId v) {
  u = find(u);
  v = find(v);
  if (u == v) return false;
  if (rank_[u] < rank_[v]) std::swap(u, v);
  parent_[v] = u;
  if (rank_[u] == rank_[v]) ++rank_[u];
  --components_;
  return true;
}

std::uint32_t kappa(const MultiGraph& g, const EdgeSet& s) {
  DisjointSetForest dsf(g.n);
  for (const Edge& e : g.edges) {
    if (s.contains(e.id)) dsf.unite(e.owner, e.target);
  }
  return dsf.components();
}

std::uint32_t graphic_rank(const MultiGraph& g, const EdgeSet& s) { return g.n - kappa(g, s); }

bool graphic_independent(const MultiGraph& g, const EdgeSet& s, EdgeId e) {
  const Edge& edge = g.edges[e];
  if (edge.owner == edge.target || s.contains(e)) return false;
  DisjointSetForest dsf(g.n);
  for (const Edge& f : g.edges) {
    if (s.contains(f.id)) dsf.unite(f.owner, f.target);
  }
  return dsf.find(edge.owner) != dsf.find(edge.target);
}

std::uint32_t partition_rank(const Colouring& c, const EdgeSet& s) {
  ColourSet seen(c.q);
  for (EdgeId e = 0; e < c.colour_of.size(); ++e) {
    if (s.contains(e)) seen.insert(c.colour_of[e]);
  }
  return static_cast<std::uint32_t>(seen.size());
}

EdgeSet edges_with_colours(const Colouring& c, const ColourSet& colours) {
  EdgeSet out(c.colour_of.size());
  for (EdgeId e = 0; e < c.colour_of.size(); ++e) {
    if (colours.contains(c.colour_of[e])) out.insert(e);
  }
  return out;
}

}  // namespace rkout

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

#include "rkout/intersect.hpp"

#include <algorithm>
#include <numeric>
#include <utility>
#include <string>

namespace rkout {

namespace {

constexpr std::uint32_t kUnset = static_cast<std::uint32_t>(-1);

bool is_loop(const Edge& e) { return e.owner == e.target; }

}  // namespace

RainbowForestSolver::RainbowForestSolver(const MultiGraph& g, const Colouring& c,
                                         SolverOptions options)
    : g_(g), c_(c), options_(options) {
  if (c.colour_of.size() != g.edge_count()) {
    throw std::invalid_argument("colouring covers " + std::to_string(c.colour_of.size()) +
                                " edges, graph has " + std::to_string(g.edge_count()));
  }
  solution_.edges = EdgeSet(g.edge_count());
  colour_holder_.assign(c.q, kNoEdge);
  edges_by_colour_.resize(c.q);
  for (EdgeId e = 0; e < g.edge_count(); ++e) edges_by_colour_[c.colour_of[e]].push_back(e);
  reached_ = EdgeSet(g.edge_count());
  pred_.assign(g.edge_count(), kNoEdge);
}

void RainbowForestSolver::greedy_start() {
  DisjointSetForest dsf(g_.n);
  for (const Edge& e : g_.edges) {
    const ColourId col = c_.colour_of[e.id];
    if (colour_holder_[col] != kNoEdge || is_loop(e)) continue;
    if (dsf.unite(e.owner, e.target)) {
      solution_.edges.insert(e.id);
      colour_holder_[col] = e.id;
    }
  }
  greedy_size_ = solution_.size();
}

const CommonIndependentSet& RainbowForestSolver::solve() {
  if (solved_) return solution_;
  greedy_start();
  if (options_.verify_augmentations) verify_solution(greedy_size_);
  const std::size_t target = g_.n == 0 ? 0 : g_.n - 1;
  while (solution_.size() < target) {
    build_forest();
    const EdgeId sink = search();
    if (sink == kNoEdge) break;
    const std::size_t before = solution_.size();
    augment(sink);
    ++augmentations_;
    if (options_.verify_augmentations) verify_solution(before + 1);
  }
  solved_ = true;
  return solution_;
}

void RainbowForestSolver::build_forest() {
  const std::uint32_t n = g_.n;
  // Compressed adjacency of the solution forest; buffers are reused across phases.
  adj_offset_.assign(std::size_t{n} + 1, 0);
  for (const EdgeId e : colour_holder_) {
    if (e == kNoEdge) continue;
    ++adj_offset_[g_.edges[e].owner + 1];
    ++adj_offset_[g_.edges[e].target + 1];
  }
  for (std::uint32_t v = 0; v < n; ++v) adj_offset_[v + 1] += adj_offset_[v];
  adj_edges_.resize(adj_offset_[n]);
  fill_.assign(adj_offset_.begin(), adj_offset_.end() - 1);
  for (const EdgeId e : colour_holder_) {
    if (e == kNoEdge) continue;
    adj_edges_[fill_[g_.edges[e].owner]++] = e;
    adj_edges_[fill_[g_.edges[e].target]++] = e;
  }

  component_.assign(n, kUnset);
  depth_.assign(n, 0);
  parent_vertex_.resize(n);
  parent_edge_.assign(n, kNoEdge);
  stack_.clear();
  for (VertexId root = 0; root < n; ++root) {
    if (component_[root] != kUnset) continue;
    component_[root] = root;
    parent_vertex_[root] = root;
    stack_.push_back(root);
    while (!stack_.empty()) {
      const VertexId v = stack_.back();
      stack_.pop_back();
      for (std::uint32_t i = adj_offset_[v]; i < adj_offset_[v + 1]; ++i) {
        const Edge& edge = g_.edges[adj_edges_[i]];
        const VertexId w = edge.owner == v ? edge.target : edge.owner;
        if (component_[w] != kUnset) continue;
        component_[w] = root;
        depth_[w] = depth_[v] + 1;
        parent_vertex_[w] = v;
        parent_edge_[w] = adj_edges_[i];
        stack_.push_back(w);
      }
    }
  }
}

// Nearest ancestor-or-self whose parent edge has not been discovered yet.
VertexId RainbowForestSolver::skip_find(VertexId v) {
  VertexId top = v;
  while (skip_[top] != top) top = skip_[top];
  while (skip_[v] != top) v = std::exchange(skip_[v], top);
  return top;
}

EdgeId RainbowForestSolver::search() {
  for (const EdgeId e : touched_) reached_.erase(e);
  touched_.clear();
  skip_.resize(g_.n);
  std::iota(skip_.begin(), skip_.end(), 0u);
  auto discover = [&](EdgeId e, EdgeId from) {
    reached_.insert(e);
    touched_.push_back(e);
    pred_[e] = from;
  };

  // Sources: every edge of a colour missing from the solution, in id order.
  for (ColourId col = 0; col < c_.q; ++col) {
    if (colour_holder_[col] != kNoEdge) continue;
    for (const EdgeId e : edges_by_colour_[col]) discover(e, kNoEdge);
  }
  std::sort(touched_.begin(), touched_.end());
  std::size_t head = 0;

  // touched_ doubles as the BFS queue.
  while (head < touched_.size()) {
    const EdgeId x = touched_[head++];
    if (solution_.edges.contains(x)) {
      // Solution edge: arcs to the non-solution edges of its colour.
      for (const EdgeId y : edges_by_colour_[c_.colour_of[x]]) {
        if (!solution_.edges.contains(y) && !reached_.contains(y)) discover(y, x);
      }
      continue;
    }
    const Edge& edge = g_.edges[x];
    if (component_[edge.owner] != component_[edge.target]) return x;
    // Every undiscovered solution edge on the forest path between the endpoints.
    VertexId a = skip_find(edge.owner);
    VertexId b = skip_find(edge.target);
    while (a != b) {
      if (depth_[a] < depth_[b]) std::swap(a, b);
      discover(parent_edge_[a], x);
      skip_[a] = parent_vertex_[a];
      a = skip_find(a);
    }
  }
  return kNoEdge;
}

void RainbowForestSolver::augment(EdgeId sink) {
  std::vector<EdgeId> path;
  for (EdgeId e = sink; e != kNoEdge; e = pred_[e]) path.push_back(e);
  for (const EdgeId e : path) {
    if (solution_.edges.contains(e)) {
      solution_.edges.erase(e);
      colour_holder_[c_.colour_of[e]] = kNoEdge;
    }
  }
  for (std::size_t i = 0; i < path.size(); i += 2) {
    solution_.edges.insert(path[i]);
    colour_holder_[c_.colour_of[path[i]]] = path[i];
  }
}

void RainbowForestSolver::verify_solution(std::size_t expected_size) const {
  if (solution_.size() != expected_size) {
    throw InternalInconsistency("augmentation changed the solution size by other than one");
  }
  DisjointSetForest dsf(g_.n);
  ColourSet colours(c_.q);
  for (const EdgeId e : solution_.edges.members()) {
    if (!dsf.unite(g_.edges[e].owner, g_.edges[e].target)) {
      throw InternalInconsistency("solution contains a cycle");
    }
    if (!colours.insert(c_.colour_of[e])) throw InternalInconsistency("solution repeats a colour");
  }
}

CommonIndependentSet max_rainbow_forest(const MultiGraph& g, const Colouring& c) {
  RainbowForestSolver solver(g, c);
  return solver.solve();
}

RainbowResult find_rst(const MultiGraph& g, const Colouring& c) {
  RainbowForestSolver solver(g, c);
  const auto& forest = solver.solve();
  if (g.n == 0 || forest.size() == g.n - 1) {
    return RainbowTree{forest.edges.members()};
  }
  return extract_certificate(g, c, solver);
}

Certificate extract_certificate(const MultiGraph& g, const Colouring& c,
                                const RainbowForestSolver& solver) {
  if (solver.solution().size() + 1 >= g.n) {
    throw std::logic_error("certificate requested for an instance that has a spanning forest");
  }
  const EdgeSet& reached = solver.last_reached();
  Certificate cert;
  cert.colours = ColourSet(c.q);
  for (ColourId col = 0; col < c.q; ++col) cert.colours.insert(col);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!reached.contains(e)) cert.colours.erase(c.colour_of[e]);
  }
  cert.kappa_value = kappa(g, edges_with_colours(c, cert.colours));
  cert.margin = static_cast<std::int64_t>(cert.kappa_value) -
                (static_cast<std::int64_t>(c.q) + 1 - static_cast<std::int64_t>(cert.colours.size()));
  if (cert.margin < 1) {
    throw InternalInconsistency("certificate re-verification failed: kappa(C_I) = " +
                                std::to_string(cert.kappa_value) + ", |I| = " +
                                std::to_string(cert.colours.size()) + ", q = " + std::to_string(c.q));
  }
  return cert;
}

bool check_condition(const MultiGraph& g, const Colouring& c, const ColourSet& colours) {
  const auto k = static_cast<std::int64_t>(kappa(g, edges_with_colours(c, colours)));
  return k <= static_cast<std::int64_t>(c.q) + 1 - static_cast<std::int64_t>(colours.size());
}

namespace {

struct BruteForce {
  const MultiGraph& g;
  const Colouring& c;
  std::vector<std::uint32_t> label;  // component label per vertex
  std::vector<char> colour_used;
  std::vector<EdgeId> current;
  std::vector<EdgeId> best;
  std::size_t cap;

  void run(std::size_t i) {
    if (current.size() > best.size()) best = current;
    if (best.size() == cap || i == g.edge_count()) return;
    if (current.size() + (g.edge_count() - i) <= best.size()) return;
    const Edge& e = g.edges[i];
    const ColourId col = c.colour_of[i];
    const std::uint32_t lu = label[e.owner];
    const std::uint32_t lv = label[e.target];
    if (!colour_used[col] && lu != lv) {
      const auto saved = label;
      for (auto& l : label) {
        if (l == lv) l = lu;
      }
      colour_used[col] = 1;
      current.push_back(e.id);
      run(i + 1);
      current.pop_back();
      colour_used[col] = 0;
      label = saved;
    }
    run(i + 1);
  }
};

}  // namespace

CommonIndependentSet brute_force_max_rainbow_forest(const MultiGraph& g, const Colouring& c) {
  if (g.edge_count() > 24) {
    throw std::invalid_argument("brute-force rainbow forest limited to 24 edges, got " +
                                std::to_string(g.edge_count()));
  }
  BruteForce bf{g, c, {}, std::vector<char>(c.q, 0), {}, {}, g.n == 0 ? 0 : g.n - 1u};
  bf.label.resize(g.n);
  for (VertexId v = 0; v < g.n; ++v) bf.label[v] = v;
  bf.run(0);
  CommonIndependentSet out{EdgeSet(g.edge_count())};
  for (const EdgeId e : bf.best) out.edges.insert(e);
  return out;
}

bool is_rainbow_spanning_tree(const MultiGraph& g, const Colouring& c,
                              const std::vector<EdgeId>& edges) {
  if (g.n == 0 || edges.size() != g.n - 1) return false;
  DisjointSetForest dsf(g.n);
  ColourSet colours(c.q);
  for (const EdgeId e : edges) {
    if (e >= g.edge_count()) return false;
    if (!dsf.unite(g.edges[e].owner, g.edges[e].target)) return false;
    if (!colours.insert(c.colour_of[e])) return false;
  }
  return dsf.components() == 1;
}

}  // namespace rkout

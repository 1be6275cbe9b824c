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

// Test-only reference computations. They share no code path with the solver
// beyond the instance types.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <vector>

#include "rkout/model.hpp"

namespace rkout::oracle {

/// Components of ([n], edges in mask) by breadth-first search on an adjacency
/// matrix; independent of the union-find used by the library.
inline std::uint32_t components(const MultiGraph& g, const std::vector<char>& in_set) {
  std::vector<std::vector<VertexId>> adj(g.n);
  for (const Edge& e : g.edges) {
    if (!in_set[e.id]) continue;
    adj[e.owner].push_back(e.target);
    adj[e.target].push_back(e.owner);
  }
  std::vector<char> seen(g.n, 0);
  std::uint32_t count = 0;
  for (VertexId s = 0; s < g.n; ++s) {
    if (seen[s]) continue;
    ++count;
    std::queue<VertexId> queue;
    queue.push(s);
    seen[s] = 1;
    while (!queue.empty()) {
      const VertexId v = queue.front();
      queue.pop();
      for (const VertexId w : adj[v]) {
        if (!seen[w]) {
          seen[w] = 1;
          queue.push(w);
        }
      }
    }
  }
  return count;
}

/// kappa(C_I) for the colour subset encoded in `mask`.
/// Relabels components on every merge; fine for the tiny graphs used here.
inline std::uint32_t kappa_of_colour_mask(const MultiGraph& g, const Colouring& c,
                                          std::uint64_t mask) {
  std::uint32_t label[64];
  for (VertexId v = 0; v < g.n; ++v) label[v] = v;
  std::uint32_t count = g.n;
  for (const Edge& e : g.edges) {
    if (!((mask >> c.colour_of[e.id]) & 1U)) continue;
    const std::uint32_t a = label[e.owner];
    const std::uint32_t b = label[e.target];
    if (a == b) continue;
    for (VertexId v = 0; v < g.n; ++v) {
      if (label[v] == b) label[v] = a;
    }
    --count;
  }
  return count;
}

/// min over I of (n - kappa(C_I)) + (q - |I|), by enumerating all 2^q subsets.
inline std::int64_t edmonds_min_by_enumeration(const MultiGraph& g, const Colouring& c) {
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << c.q); ++mask) {
    const std::int64_t size = __builtin_popcountll(mask);
    const std::int64_t value = (std::int64_t{g.n} - kappa_of_colour_mask(g, c, mask)) + (c.q - size);
    best = std::min(best, value);
  }
  return best;
}

/// Every colour subset I violating kappa(C_I) <= q + 1 - |I|.
inline std::vector<std::uint64_t> violating_colour_sets(const MultiGraph& g, const Colouring& c) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << c.q); ++mask) {
    const std::int64_t size = __builtin_popcountll(mask);
    if (std::int64_t{kappa_of_colour_mask(g, c, mask)} > std::int64_t{c.q} + 1 - size) {
      out.push_back(mask);
    }
  }
  return out;
}

/// Random instance for the oracle suites: n in [3, 8], k in {1, 2, 3} with
/// k <= n - 1 and kn <= 24, q in [max(1, n - 1), kn].
struct SmallInstance {
  MultiGraph graph;
  Colouring colouring;
};

inline SmallInstance random_small_instance(std::uint64_t seed, std::uint32_t max_n = 8) {
  Engine eng = make_engine(Seed{seed, 0xface});
  std::uint32_t n = 0;
  std::uint32_t k = 0;
  do {
    n = std::uniform_int_distribution<std::uint32_t>(3, max_n)(eng);
    k = std::uniform_int_distribution<std::uint32_t>(1, 3)(eng);
  } while (k > n - 1 || n * k > 24);
  const std::uint32_t q = std::uniform_int_distribution<std::uint32_t>(std::max(1u, n - 1), n * k)(eng);
  SmallInstance inst{generate_kout(n, k, Seed{seed, 1}), {}};
  inst.colouring = assign_balanced_colouring(inst.graph, q, Seed{seed, 2});
  return inst;
}

}  // namespace rkout::oracle

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

#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "rkout/matroid.hpp"

using namespace rkout;

namespace {

MultiGraph graph_from(std::uint32_t n, std::vector<std::pair<VertexId, VertexId>> pairs) {
  MultiGraph g;
  g.n = n;
  g.k = 1;
  for (const auto& [u, v] : pairs) g.edges.push_back(Edge{static_cast<EdgeId>(g.edges.size()), u, v});
  return g;
}

Colouring colouring_from(std::uint32_t q, std::vector<ColourId> colours) {
  Colouring c;
  c.q = q;
  c.colour_of = std::move(colours);
  c.special_edge_of.assign(q, kNoEdge);
  return c;
}

EdgeSet random_subset(std::size_t m, Engine& eng) {
  EdgeSet s(m);
  for (EdgeId e = 0; e < m; ++e) {
    if (eng() & 1U) s.insert(e);
  }
  return s;
}

}  // namespace

TEST_CASE("DenseSet tracks membership and size") {
  EdgeSet s(5, {1, 3});
  CHECK(s.size() == 2);
  CHECK(s.contains(3));
  CHECK_FALSE(s.insert(3));
  CHECK(s.erase(1));
  CHECK_FALSE(s.erase(1));
  CHECK(s.members() == std::vector<std::uint32_t>{3});
  s.clear();
  CHECK(s.empty());
}

TEST_CASE("DisjointSetForest counts components") {
  DisjointSetForest dsf(5);
  CHECK(dsf.components() == 5);
  CHECK(dsf.unite(0, 1));
  CHECK(dsf.unite(3, 4));
  CHECK_FALSE(dsf.unite(1, 0));
  CHECK(dsf.components() == 3);
  CHECK(dsf.find(0) == dsf.find(1));
  CHECK(dsf.find(2) != dsf.find(3));
}

TEST_CASE("kappa and graphic rank") {
  const MultiGraph star = graph_from(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  CHECK(kappa(star, EdgeSet(4)) == 5);
  CHECK(graphic_rank(star, EdgeSet(4)) == 0);
  CHECK(kappa(star, EdgeSet(4, {0, 1, 2, 3})) == 1);
  CHECK(graphic_rank(star, EdgeSet(4, {0, 1, 2, 3})) == 4);

  const MultiGraph parallel = graph_from(4, {{0, 1}, {1, 0}});
  CHECK(kappa(parallel, EdgeSet(2, {0, 1})) == 3);
  CHECK(graphic_rank(parallel, EdgeSet(2, {0, 1})) == 1);

  const MultiGraph loop = graph_from(3, {{1, 1}, {0, 1}});
  CHECK(graphic_rank(loop, EdgeSet(2, {0})) == 0);
  CHECK(graphic_rank(loop, EdgeSet(2, {0, 1})) == 1);
}

TEST_CASE("graphic_independent") {
  const MultiGraph g = graph_from(4, {{0, 1}, {1, 2}, {2, 0}, {1, 0}, {3, 3}});
  CHECK(graphic_independent(g, EdgeSet(5), 0));
  CHECK(graphic_independent(g, EdgeSet(5, {0}), 1));
  CHECK_FALSE(graphic_independent(g, EdgeSet(5, {0, 1}), 2));  // closes a triangle
  CHECK_FALSE(graphic_independent(g, EdgeSet(5, {0}), 3));     // second parallel copy
  CHECK_FALSE(graphic_independent(g, EdgeSet(5), 4));          // loop
}

TEST_CASE("partition rank") {
  const Colouring c = colouring_from(3, {0, 0, 1, 2, 2});
  CHECK(partition_rank(c, EdgeSet(5)) == 0);
  CHECK(partition_rank(c, EdgeSet(5, {0, 1})) == 1);
  CHECK(partition_rank(c, EdgeSet(5, {0, 2, 3})) == 3);
  CHECK(partition_rank(c, EdgeSet(5, {0, 1, 2, 3, 4})) == 3);
  CHECK(edges_with_colours(c, ColourSet(3, {2})).members() == std::vector<std::uint32_t>{3, 4});
}

TEST_CASE("ranks are bounded, monotone and submodular on random instances") {
  Engine eng = make_engine(Seed{2024, 0});
  for (int trial = 0; trial < 10000; ++trial) {
    const std::uint32_t n = 2 + trial % 6;
    const std::uint32_t k = 1 + trial % std::min<std::uint32_t>(n - 1, 3);
    const MultiGraph g = generate_kout(n, k, Seed{std::uint64_t(trial), 1});
    const std::uint32_t q = 1 + trial % (n * k);
    const Colouring c = assign_balanced_colouring(g, q, Seed{std::uint64_t(trial), 2});
    const std::size_t m = g.edge_count();
    const EdgeSet s = random_subset(m, eng);
    const EdgeSet t = random_subset(m, eng);
    EdgeSet uni(m), inter(m);
    for (EdgeId e = 0; e < m; ++e) {
      if (s.contains(e) || t.contains(e)) uni.insert(e);
      if (s.contains(e) && t.contains(e)) inter.insert(e);
    }
    const auto r1 = [&](const EdgeSet& x) { return graphic_rank(g, x); };
    const auto r2 = [&](const EdgeSet& x) { return partition_rank(c, x); };
    CHECK(r1(s) + r1(t) >= r1(uni) + r1(inter));
    CHECK(r2(s) + r2(t) >= r2(uni) + r2(inter));
    CHECK(r1(inter) <= r1(s));
    CHECK(r1(s) <= r1(uni));
    CHECK(r2(inter) <= r2(s));
    CHECK(r2(s) <= r2(uni));
    CHECK(r1(s) <= std::min<std::size_t>(s.size(), n - 1));
    CHECK(r2(s) <= std::min<std::size_t>(s.size(), q));

    // kappa against an independent breadth-first component count.
    std::vector<char> mask(m, 0);
    for (EdgeId e = 0; e < m; ++e) mask[e] = s.contains(e);
    CHECK(kappa(g, s) == oracle::components(g, mask));
  }
}

TEST_CASE("graphic_independent agrees with the rank increment") {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const MultiGraph g = generate_kout(6, 2, Seed{seed, 0});
    // Build a random forest, then test every edge against it.
    Engine eng = make_engine(Seed{seed, 1});
    EdgeSet forest(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if ((eng() & 1U) && graphic_independent(g, forest, e)) forest.insert(e);
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (forest.contains(e)) continue;
      EdgeSet plus = forest;
      plus.insert(e);
      CHECK(graphic_independent(g, forest, e) == (graphic_rank(g, plus) == graphic_rank(g, forest) + 1));
    }
  }
}

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

#include <cstdint>
#include <utility>
#include <vector>

#include "rkout/rng.hpp"

namespace rkout {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;
using ColourId = std::uint32_t;

inline constexpr EdgeId kNoEdge = static_cast<EdgeId>(-1);

struct Edge {
  EdgeId id = 0;
  VertexId owner = 0;
  VertexId target = 0;
};

/// Multigraph on vertices 0..n-1. A k-out sample owns k edges per vertex with
/// edge id = owner * k + slot; hand-written inputs may hold any edge list.
struct MultiGraph {
  std::uint32_t n = 0;
  std::uint32_t k = 0;
  std::vector<Edge> edges;

  [[nodiscard]] std::size_t edge_count() const { return edges.size(); }
};

/// Edge colouring with q colours. For the balanced profile every colour occurs
/// rho or rho + 1 times, and each colour occurring rho + 1 times (a popular
/// colour) has one special copy.
struct Colouring {
  std::uint32_t q = 0;
  std::uint32_t rho = 0;
  std::uint32_t num_popular = 0;
  std::vector<ColourId> colour_of;       // indexed by edge id
  std::vector<EdgeId> special_edge_of;   // indexed by colour id; kNoEdge if not popular

  [[nodiscard]] bool is_special(EdgeId e) const {
    return special_edge_of[colour_of[e]] == e;
  }
  /// Number of edges carrying each colour.
  [[nodiscard]] std::vector<std::uint32_t> multiplicities() const;
  /// Sorted multiplicity vector.
  [[nodiscard]] std::vector<std::uint32_t> histogram() const;
};

/// rho = floor(edges / q) and the number of colours that get rho + 1 copies.
struct ColourProfile {
  std::uint32_t rho = 0;
  std::uint32_t num_popular = 0;
};
ColourProfile balanced_profile(std::size_t edge_count, std::uint32_t q);

/// Throws std::invalid_argument naming the first violated k-out invariant.
void check_kout_invariants(const MultiGraph& g);
/// Throws std::invalid_argument naming the first violated balanced-colouring
/// invariant (histogram, popular count, special marks).
void check_balanced_colouring(const Colouring& c, std::size_t edge_count);

MultiGraph generate_kout(std::uint32_t n, std::uint32_t k, const Seed& seed);

Colouring assign_balanced_colouring(std::size_t edge_count, std::uint32_t q, const Seed& seed);
inline Colouring assign_balanced_colouring(const MultiGraph& g, std::uint32_t q,
                                           const Seed& seed) {
  return assign_balanced_colouring(g.edge_count(), q, seed);
}

enum class CouplingCase {
  kSameRho,        // floor(kn/(q+1)) == rho
  kRhoDropsByOne,  // floor(kn/(q+1)) == rho - 1
  kFullRedraw,     // rho drops by two or more, or rho > q + 1; no part survives
};

struct ColourCoupling {
  Colouring colouring;
  CouplingCase kind = CouplingCase::kSameRho;
  std::vector<EdgeId> freed_edges;  // sorted slots whose colour copy was redrawn
};

/// Refines a balanced colouring with q colours into one with q + 1 colours.
/// A uniformly chosen set of parts is replaced; the freed slots receive the
/// replacement parts through a fresh uniform bijection and every other slot
/// keeps its colour. The new colour id is q.
ColourCoupling couple_add_colour(const Colouring& c, const Seed& seed);

/// Vertex-colour incidence structure. Left vertices are the n graph vertices,
/// each with k points; right vertices are the q colours plus a dummy vertex
/// with id q that holds the special copies of popular colours.
struct BipartiteColourGraph {
  struct Incidence {
    std::uint32_t right = 0;   // colour id, or dummy() for a special copy
    ColourId colour = 0;       // the colour of the copy, also for dummy points
  };

  std::uint32_t n = 0;
  std::uint32_t k = 0;
  std::uint32_t q = 0;
  std::vector<Incidence> incidences;  // index v * k + j is point j of vertex v

  [[nodiscard]] std::uint32_t dummy() const { return q; }
  [[nodiscard]] std::vector<std::uint32_t> left_degrees() const;
  /// Size q + 1; the last entry is the dummy.
  [[nodiscard]] std::vector<std::uint32_t> right_degrees() const;
};

/// Configuration-model pairing of the k points of every left vertex with the
/// kn colour-copy points.
BipartiteColourGraph generate_gamma(std::uint32_t n, std::uint32_t k, std::uint32_t q,
                                    const Seed& seed);

/// Draws each vertex's k distinct targets and colours its j-th edge by its
/// j-th incidence in gamma.
std::pair<MultiGraph, Colouring> gamma_to_coloured_kout(const BipartiteColourGraph& gamma,
                                                        const Seed& seed);

/// Exact probability as a fraction.
struct Fraction {
  std::uint64_t num = 0;
  std::uint64_t den = 1;
};
inline bool operator>=(const Fraction& a, const Fraction& b) {
  return static_cast<unsigned __int128>(a.num) * b.den >=
         static_cast<unsigned __int128>(b.num) * a.den;
}

/// Probability that at least one member of `family` (subsets of 0..ground-1)
/// is rainbow when the balanced multiset of ground colour copies over q
/// colours is placed by a uniform bijection. Enumerates every arrangement, so
/// ground must be small (at most 10).
Fraction exact_rainbow_probability(const std::vector<std::vector<std::uint32_t>>& family,
                                   std::uint32_t ground, std::uint32_t q);

}  // namespace rkout

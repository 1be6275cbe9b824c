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

#include "rkout/model.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace rkout {

namespace {

std::uint32_t uniform_below(Engine& eng, std::uint32_t bound) {
  return std::uniform_int_distribution<std::uint32_t>(0, bound - 1)(eng);
}

void validate_kout_params(std::uint32_t n, std::uint32_t k) {
  if (n < 2) throw std::invalid_argument("k-out model needs n >= 2, got n = " + std::to_string(n));
  if (k < 1) throw std::invalid_argument("k-out model needs k >= 1");
  if (k > n - 1) {
    throw std::invalid_argument("k-out model needs k <= n - 1, got k = " + std::to_string(k) +
                                ", n = " + std::to_string(n));
  }
}

void validate_colour_count(std::size_t edge_count, std::uint32_t q) {
  if (q < 1 || q > edge_count) {
    throw std::invalid_argument("colour count q = " + std::to_string(q) +
                                " outside [1, kn] with kn = " + std::to_string(edge_count));
  }
}

// Writes k distinct uniform targets from [n] \ {v} into out.
void sample_targets(std::uint32_t n, std::uint32_t k, VertexId v, Engine& eng,
                    std::vector<VertexId>& out, std::vector<VertexId>& scratch) {
  out.clear();
  const std::uint32_t others = n - 1;
  auto lift = [v](std::uint32_t r) { return r < v ? r : r + 1; };
  if (2 * k <= others) {
    while (out.size() < k) {
      const VertexId t = lift(uniform_below(eng, others));
      if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
    }
    return;
  }
  // Dense case: partial Fisher-Yates over all candidates.
  scratch.resize(others);
  std::iota(scratch.begin(), scratch.end(), 0u);
  for (std::uint32_t i = 0; i < k; ++i) {
    const std::uint32_t j = i + uniform_below(eng, others - i);
    std::swap(scratch[i], scratch[j]);
    out.push_back(lift(scratch[i]));
  }
}

MultiGraph sample_kout(std::uint32_t n, std::uint32_t k, Engine& eng) {
  MultiGraph g;
  g.n = n;
  g.k = k;
  g.edges.reserve(static_cast<std::size_t>(n) * k);
  std::vector<VertexId> targets, scratch;
  targets.reserve(k);
  for (VertexId v = 0; v < n; ++v) {
    sample_targets(n, k, v, eng, targets, scratch);
    for (const VertexId t : targets) {
      g.edges.push_back(Edge{static_cast<EdgeId>(g.edges.size()), v, t});
    }
  }
  return g;
}

// Marks a uniformly chosen edge of every popular colour that has no special
// edge yet.
void mark_missing_specials(Colouring& c, Engine& eng) {
  const auto mult = c.multiplicities();
  std::vector<std::vector<EdgeId>> by_colour(c.q);
  for (EdgeId e = 0; e < c.colour_of.size(); ++e) {
    const ColourId col = c.colour_of[e];
    if (mult[col] == c.rho + 1 && c.special_edge_of[col] == kNoEdge) by_colour[col].push_back(e);
  }
  for (ColourId col = 0; col < c.q; ++col) {
    if (!by_colour[col].empty()) {
      c.special_edge_of[col] = by_colour[col][uniform_below(eng, by_colour[col].size())];
    }
  }
}

}  // namespace

std::vector<std::uint32_t> Colouring::multiplicities() const {
  std::vector<std::uint32_t> mult(q, 0);
  for (const ColourId col : colour_of) ++mult[col];
  return mult;
}

std::vector<std::uint32_t> Colouring::histogram() const {
  auto h = multiplicities();
  std::sort(h.begin(), h.end());
  return h;
}

ColourProfile balanced_profile(std::size_t edge_count, std::uint32_t q) {
  validate_colour_count(edge_count, q);
  const auto rho = static_cast<std::uint32_t>(edge_count / q);
  return ColourProfile{rho, static_cast<std::uint32_t>(edge_count - std::size_t{q} * rho)};
}

void check_kout_invariants(const MultiGraph& g) {
  validate_kout_params(g.n, g.k);
  if (g.edges.size() != std::size_t{g.n} * g.k) {
    throw std::invalid_argument("k-out graph must have exactly k*n edges");
  }
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const Edge& e = g.edges[i];
    if (e.id != i) throw std::invalid_argument("edge ids must be 0..kn-1 in order");
    if (e.owner != i / g.k) throw std::invalid_argument("edge " + std::to_string(i) + " has owner != id / k");
    if (e.target >= g.n) throw std::invalid_argument("edge " + std::to_string(i) + " target out of range");
    if (e.owner == e.target) throw std::invalid_argument("edge " + std::to_string(i) + " is a loop");
    for (std::size_t j = i - i % g.k; j < i; ++j) {
      if (g.edges[j].target == e.target) {
        throw std::invalid_argument("vertex " + std::to_string(e.owner) + " repeats target " +
                                    std::to_string(e.target));
      }
    }
  }
}

void check_balanced_colouring(const Colouring& c, std::size_t edge_count) {
  const ColourProfile p = balanced_profile(edge_count, c.q);
  if (c.rho != p.rho || c.num_popular != p.num_popular) {
    throw std::invalid_argument("colouring rho/num_popular disagree with floor(kn/q)");
  }
  if (c.colour_of.size() != edge_count) throw std::invalid_argument("colouring size != edge count");
  if (c.special_edge_of.size() != c.q) throw std::invalid_argument("special table size != q");
  for (const ColourId col : c.colour_of) {
    if (col >= c.q) throw std::invalid_argument("colour id out of range");
  }
  const auto mult = c.multiplicities();
  std::uint32_t popular = 0;
  for (ColourId col = 0; col < c.q; ++col) {
    if (mult[col] != c.rho && mult[col] != c.rho + 1) {
      throw std::invalid_argument("colour " + std::to_string(col) + " occurs " +
                                  std::to_string(mult[col]) + " times, expected rho or rho+1");
    }
    const bool is_popular = mult[col] == c.rho + 1;
    popular += is_popular ? 1 : 0;
    const EdgeId s = c.special_edge_of[col];
    if (is_popular) {
      if (s == kNoEdge || s >= edge_count || c.colour_of[s] != col) {
        throw std::invalid_argument("popular colour " + std::to_string(col) +
                                    " lacks a special edge of its own colour");
      }
    } else if (s != kNoEdge) {
      throw std::invalid_argument("unpopular colour " + std::to_string(col) + " has a special edge");
    }
  }
  if (popular != c.num_popular) throw std::invalid_argument("wrong number of popular colours");
}

MultiGraph generate_kout(std::uint32_t n, std::uint32_t k, const Seed& seed) {
  validate_kout_params(n, k);
  Engine eng = make_engine(seed);
  return sample_kout(n, k, eng);
}

Colouring assign_balanced_colouring(std::size_t edge_count, std::uint32_t q, const Seed& seed) {
  const ColourProfile p = balanced_profile(edge_count, q);
  Engine eng = make_engine(seed);
  Colouring c;
  c.q = q;
  c.rho = p.rho;
  c.num_popular = p.num_popular;
  c.colour_of.reserve(edge_count);
  // Colours q - num_popular .. q - 1 are the popular ones.
  for (ColourId col = 0; col < q; ++col) {
    const std::uint32_t copies = col >= q - p.num_popular ? p.rho + 1 : p.rho;
    c.colour_of.insert(c.colour_of.end(), copies, col);
  }
  std::shuffle(c.colour_of.begin(), c.colour_of.end(), eng);
  c.special_edge_of.assign(q, kNoEdge);
  mark_missing_specials(c, eng);
  return c;
}

ColourCoupling couple_add_colour(const Colouring& c, const Seed& seed) {
  const std::size_t m = c.colour_of.size();
  if (std::size_t{c.q} + 1 > m) {
    throw std::invalid_argument("cannot add a colour: q + 1 = " + std::to_string(c.q + 1) +
                                " exceeds kn = " + std::to_string(m));
  }
  const ColourProfile next = balanced_profile(m, c.q + 1);
  Engine eng = make_engine(seed);
  ColourCoupling out;

  // Only small q can get here: rho falls by two or more, or there are too few
  // small parts to break up.
  if (next.rho + 1 < c.rho || (next.rho < c.rho && c.rho > c.q + 1)) {
    out.kind = CouplingCase::kFullRedraw;
    out.colouring = assign_balanced_colouring(m, c.q + 1, seed.child(1));
    out.freed_edges.resize(m);
    std::iota(out.freed_edges.begin(), out.freed_edges.end(), 0u);
    return out;
  }

  const auto mult = c.multiplicities();
  std::vector<ColourId> small, big;
  for (ColourId col = 0; col < c.q; ++col) (mult[col] == c.rho ? small : big).push_back(col);

  std::vector<ColourId> replaced;
  std::vector<std::uint32_t> new_sizes;  // one entry per replacement part
  if (next.rho == c.rho) {
    out.kind = CouplingCase::kSameRho;
    std::shuffle(big.begin(), big.end(), eng);
    replaced.assign(big.begin(), big.begin() + c.rho);
    new_sizes.assign(c.rho + 1, c.rho);
  } else {
    out.kind = CouplingCase::kRhoDropsByOne;
    replaced = big;
    std::shuffle(small.begin(), small.end(), eng);
    replaced.insert(replaced.end(), small.begin(), small.begin() + (c.rho - 1 - c.num_popular));
    new_sizes.assign(c.num_popular, c.rho);
    new_sizes.insert(new_sizes.end(), c.rho - c.num_popular, c.rho - 1);
  }

  std::vector<ColourId> ids = replaced;
  ids.push_back(c.q);
  std::sort(ids.begin(), ids.end());
  std::vector<ColourId> copies;
  for (std::size_t i = 0; i < ids.size(); ++i) copies.insert(copies.end(), new_sizes[i], ids[i]);

  std::vector<char> is_replaced(c.q, 0);
  for (const ColourId col : replaced) is_replaced[col] = 1;
  for (EdgeId e = 0; e < m; ++e) {
    if (is_replaced[c.colour_of[e]]) out.freed_edges.push_back(e);
  }
  if (copies.size() != out.freed_edges.size()) {
    throw std::logic_error("colour coupling freed slot count mismatch");
  }
  std::shuffle(copies.begin(), copies.end(), eng);

  Colouring& nc = out.colouring;
  nc.q = c.q + 1;
  nc.rho = next.rho;
  nc.num_popular = next.num_popular;
  nc.colour_of = c.colour_of;
  for (std::size_t i = 0; i < copies.size(); ++i) nc.colour_of[out.freed_edges[i]] = copies[i];
  nc.special_edge_of.assign(nc.q, kNoEdge);
  // A fixed part keeps its special edge when it stays popular.
  for (ColourId col = 0; col < c.q; ++col) {
    if (!is_replaced[col] && mult[col] == next.rho + 1) nc.special_edge_of[col] = c.special_edge_of[col];
  }
  mark_missing_specials(nc, eng);
  return out;
}

std::vector<std::uint32_t> BipartiteColourGraph::left_degrees() const {
  std::vector<std::uint32_t> deg(n, 0);
  for (std::size_t i = 0; i < incidences.size(); ++i) ++deg[i / k];
  return deg;
}

std::vector<std::uint32_t> BipartiteColourGraph::right_degrees() const {
  std::vector<std::uint32_t> deg(std::size_t{q} + 1, 0);
  for (const auto& inc : incidences) ++deg[inc.right];
  return deg;
}

BipartiteColourGraph generate_gamma(std::uint32_t n, std::uint32_t k, std::uint32_t q,
                                    const Seed& seed) {
  if (n < 1 || k < 1) throw std::invalid_argument("gamma needs n >= 1 and k >= 1");
  const std::size_t m = std::size_t{n} * k;
  const ColourProfile p = balanced_profile(m, q);
  Engine eng = make_engine(seed);

  BipartiteColourGraph gamma;
  gamma.n = n;
  gamma.k = k;
  gamma.q = q;
  gamma.incidences.reserve(m);
  for (ColourId col = 0; col < q; ++col) {
    const bool popular = col >= q - p.num_popular;
    for (std::uint32_t i = 0; i < p.rho; ++i) gamma.incidences.push_back({col, col});
    if (popular) gamma.incidences.push_back({gamma.dummy(), col});
  }
  std::shuffle(gamma.incidences.begin(), gamma.incidences.end(), eng);
  return gamma;
}

std::pair<MultiGraph, Colouring> gamma_to_coloured_kout(const BipartiteColourGraph& gamma,
                                                        const Seed& seed) {
  validate_kout_params(gamma.n, gamma.k);
  const std::size_t m = std::size_t{gamma.n} * gamma.k;
  if (gamma.incidences.size() != m) throw std::invalid_argument("gamma must have k*n incidences");
  const ColourProfile p = balanced_profile(m, gamma.q);
  Engine eng = make_engine(seed);

  std::pair<MultiGraph, Colouring> out{sample_kout(gamma.n, gamma.k, eng), Colouring{}};
  Colouring& c = out.second;
  c.q = gamma.q;
  c.rho = p.rho;
  c.num_popular = p.num_popular;
  c.colour_of.resize(m);
  c.special_edge_of.assign(gamma.q, kNoEdge);
  for (EdgeId e = 0; e < m; ++e) {
    const auto& inc = gamma.incidences[e];
    c.colour_of[e] = inc.colour;
    if (inc.right == gamma.dummy()) c.special_edge_of[inc.colour] = e;
  }
  return out;
}

Fraction exact_rainbow_probability(const std::vector<std::vector<std::uint32_t>>& family,
                                   std::uint32_t ground, std::uint32_t q) {
  if (ground > 10) throw std::invalid_argument("exact rainbow enumeration limited to 10 elements");
  const ColourProfile p = balanced_profile(ground, q);
  std::vector<ColourId> arrangement;
  for (ColourId col = 0; col < q; ++col) {
    arrangement.insert(arrangement.end(), col >= q - p.num_popular ? p.rho + 1 : p.rho, col);
  }
  // Distinct arrangements of the multiset are equally likely under a uniform
  // bijection, each standing for the same number of bijections.
  Fraction f{0, 0};
  std::vector<char> seen(q);
  do {
    ++f.den;
    for (const auto& member : family) {
      std::fill(seen.begin(), seen.end(), 0);
      bool rainbow = true;
      for (const std::uint32_t x : member) {
        if (seen[arrangement[x]]) {
          rainbow = false;
          break;
        }
        seen[arrangement[x]] = 1;
      }
      if (rainbow) {
        ++f.num;
        break;
      }
    }
  } while (std::next_permutation(arrangement.begin(), arrangement.end()));
  return f;
}

}  // namespace rkout

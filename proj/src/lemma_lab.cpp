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

#include "rkout/lemma_lab.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#include "rkout/matroid.hpp"
#include "rkout/parallel.hpp"

namespace rkout {

namespace {

// Stream salts keep the estimators' samples apart for a shared master seed.
constexpr std::uint64_t kSaltGamma = 0x6761;
constexpr std::uint64_t kSaltGraph = 0x6b6f;
constexpr std::uint64_t kSaltColour = 0x636f;

double frequency_standard_error(double p, std::uint64_t samples) {
  return std::sqrt(std::max(p * (1.0 - p), 0.0) / static_cast<double>(samples));
}

}  // namespace

std::uint32_t count_cycles_2regular_bipartite(const BipartiteColourGraph& gamma) {
  for (const auto d : gamma.left_degrees()) {
    if (d != 2) throw std::invalid_argument("gamma is not 2-regular on the vertex side");
  }
  for (const auto d : gamma.right_degrees()) {
    if (d != 2) throw std::invalid_argument("gamma is not 2-regular on the colour side");
  }
  // Left vertices are 0..n-1, right vertices n..n+q.
  DisjointSetForest dsf(gamma.n + gamma.q + 1);
  for (std::size_t i = 0; i < gamma.incidences.size(); ++i) {
    dsf.unite(static_cast<VertexId>(i / gamma.k), gamma.n + gamma.incidences[i].right);
  }
  return dsf.components();
}

double expected_cycles_exact(std::uint32_t n) {
  if (n < 1) throw std::invalid_argument("expected_cycles_exact needs n >= 1");
  // Smallest terms first.
  double sum = 0.0;
  for (std::uint32_t i = 1; i <= n; ++i) sum += 1.0 / (2.0 * n - 2.0 * i + 1.0);
  return sum;
}

std::uint64_t count_monochromatic_parallel_pairs(const MultiGraph& g, const Colouring& c) {
  std::vector<std::pair<std::uint64_t, ColourId>> keys;
  keys.reserve(g.edge_count());
  for (const Edge& e : g.edges) {
    const std::uint64_t lo = std::min(e.owner, e.target);
    const std::uint64_t hi = std::max(e.owner, e.target);
    keys.emplace_back((lo << 32) | hi, c.colour_of[e.id]);
  }
  std::sort(keys.begin(), keys.end());
  std::uint64_t pairs = 0;
  for (std::size_t i = 0; i < keys.size();) {
    std::size_t j = i;
    while (j < keys.size() && keys[j] == keys[i]) ++j;
    const std::uint64_t run = j - i;
    pairs += run * (run - 1) / 2;
    i = j;
  }
  return pairs;
}

bool is_connected(const MultiGraph& g) {
  DisjointSetForest dsf(g.n);
  for (const Edge& e : g.edges) dsf.unite(e.owner, e.target);
  return dsf.components() == 1;
}

double estimate_connectivity(std::uint32_t n, std::uint32_t k, std::uint32_t trials,
                             std::uint64_t master_seed, unsigned workers) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  std::vector<char> connected(trials, 0);
  for_each_trial(trials, workers, [&](std::uint32_t t) {
    const Seed seed = Seed{master_seed, t}.child(kSaltGraph);
    connected[t] = is_connected(generate_kout(n, k, seed)) ? 1 : 0;
  });
  const auto hits = std::count(connected.begin(), connected.end(), 1);
  return static_cast<double>(hits) / trials;
}

CycleStats sample_gamma_cycles(std::uint32_t n, std::uint32_t q, std::uint32_t samples,
                               std::uint64_t master_seed, unsigned workers) {
  if (samples < 2) throw std::invalid_argument("cycle statistics need at least two samples");
  CycleStats stats;
  stats.counts.resize(samples);
  for_each_trial(samples, workers, [&](std::uint32_t t) {
    const Seed seed = Seed{master_seed, t}.child(kSaltGamma);
    stats.counts[t] = count_cycles_2regular_bipartite(generate_gamma(n, 2, q, seed));
  });
  const double sum = std::accumulate(stats.counts.begin(), stats.counts.end(), 0.0);
  stats.mean = sum / samples;
  double ss = 0.0;
  for (const auto x : stats.counts) ss += (x - stats.mean) * (x - stats.mean);
  stats.standard_error = std::sqrt(ss / (samples - 1)) / std::sqrt(static_cast<double>(samples));
  return stats;
}

LemmaReport gamma_cycles_report(std::uint32_t n, std::uint32_t samples, std::uint64_t master_seed,
                                double z_threshold, unsigned workers) {
  if (n < 2) throw std::invalid_argument("gamma-cycles needs n >= 2 so that q = n - 1 >= 1");
  const CycleStats stats = sample_gamma_cycles(n, n - 1, samples, master_seed, workers);
  LemmaReport r;
  r.name = "gamma-cycles";
  r.exact = expected_cycles_exact(n);
  r.empirical = stats.mean;
  r.standard_error = stats.standard_error;
  r.z_score = stats.standard_error > 0 ? (stats.mean - *r.exact) / stats.standard_error : 0.0;
  r.z_threshold = z_threshold;
  r.samples = samples;
  r.pass = std::abs(r.z_score) <= z_threshold;
  return r;
}

LemmaReport mono_parallel_report(std::uint32_t n, std::uint32_t k, std::uint32_t q,
                                 std::uint32_t trials, std::uint64_t master_seed,
                                 double max_frequency, unsigned workers) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  std::vector<std::uint64_t> counts(trials);
  for_each_trial(trials, workers, [&](std::uint32_t t) {
    const Seed seed{master_seed, t};
    const MultiGraph g = generate_kout(n, k, seed.child(kSaltGraph));
    const Colouring c = assign_balanced_colouring(g, q, seed.child(kSaltColour));
    counts[t] = count_monochromatic_parallel_pairs(g, c);
  });
  const auto hits = std::count_if(counts.begin(), counts.end(), [](auto x) { return x > 0; });
  LemmaReport r;
  r.name = "mono-parallel";
  r.bound = max_frequency;
  r.empirical = static_cast<double>(hits) / trials;
  r.standard_error = frequency_standard_error(r.empirical, trials);
  r.z_score = r.standard_error > 0 ? (r.empirical - max_frequency) / r.standard_error : 0.0;
  r.samples = trials;
  r.pass = r.empirical <= max_frequency;
  return r;
}

LemmaReport connectivity_report(std::uint32_t n, std::uint32_t k, std::uint32_t trials,
                                std::uint64_t master_seed, double bound, unsigned workers) {
  LemmaReport r;
  r.name = k >= 2 ? "connectivity" : "connectivity-k1";
  r.bound = bound;
  r.empirical = estimate_connectivity(n, k, trials, master_seed, workers);
  r.standard_error = frequency_standard_error(r.empirical, trials);
  r.z_score = r.standard_error > 0 ? (r.empirical - bound) / r.standard_error : 0.0;
  r.samples = trials;
  r.pass = k >= 2 ? r.empirical >= bound : r.empirical <= bound;
  return r;
}

}  // namespace rkout

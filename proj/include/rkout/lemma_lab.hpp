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
#include <optional>
#include <string>
#include <vector>

#include "rkout/model.hpp"
#include "rkout/rng.hpp"

namespace rkout {

struct CycleStats {
  std::vector<std::uint32_t> counts;
  double mean = 0.0;
  double standard_error = 0.0;
};

/// One line of evidence. Two-sided reports carry an exact value and pass iff
/// |z| <= z_threshold; one-sided reports carry a bound instead and pass iff
/// the estimate lies on the stated side of it.
struct LemmaReport {
  std::string name;
  std::optional<double> exact;
  std::optional<double> bound;
  double empirical = 0.0;
  double standard_error = 0.0;
  double z_score = 0.0;
  double z_threshold = 3.0;
  std::uint64_t samples = 0;
  bool pass = false;
};

/// Number of components of a 2-regular bipartite multigraph, i.e. its cycle
/// count (a doubled edge is a 2-cycle). Throws if some degree differs from 2.
std::uint32_t count_cycles_2regular_bipartite(const BipartiteColourGraph& gamma);

/// sum_{i=1}^{n} 1 / (2n - 2i + 1).
double expected_cycles_exact(std::uint32_t n);

/// Unordered pairs of edges with the same endpoint set and the same colour.
std::uint64_t count_monochromatic_parallel_pairs(const MultiGraph& g, const Colouring& c);

bool is_connected(const MultiGraph& g);

/// Fraction of sampled k-out graphs that are connected.
double estimate_connectivity(std::uint32_t n, std::uint32_t k, std::uint32_t trials,
                             std::uint64_t master_seed, unsigned workers = 1);

/// Sample mean and standard error of the cycle count of gamma(n, 2, q).
CycleStats sample_gamma_cycles(std::uint32_t n, std::uint32_t q, std::uint32_t samples,
                               std::uint64_t master_seed, unsigned workers = 1);

/// Cycle count of gamma with matched sides (q + 1 = n) against the exact mean.
LemmaReport gamma_cycles_report(std::uint32_t n, std::uint32_t samples, std::uint64_t master_seed,
                                double z_threshold = 3.0, unsigned workers = 1);

/// Frequency of any monochromatic parallel pair in G_{k,q}; passes when it is
/// at most `max_frequency`.
LemmaReport mono_parallel_report(std::uint32_t n, std::uint32_t k, std::uint32_t q,
                                 std::uint32_t trials, std::uint64_t master_seed,
                                 double max_frequency = 0.02, unsigned workers = 1);

/// Connectivity frequency of G_{k-out}; passes when it is on the stated side
/// of `bound` (at least for k >= 2, at most for k = 1).
LemmaReport connectivity_report(std::uint32_t n, std::uint32_t k, std::uint32_t trials,
                                std::uint64_t master_seed, double bound, unsigned workers = 1);

}  // namespace rkout

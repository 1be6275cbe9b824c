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
#include <string>
#include <vector>

#include "rkout/model.hpp"

namespace rkout {

/// How the colour count follows n in a sweep.
struct QRule {
  enum class Kind { kNMinus1, kNMinus2, kFixed, kKn };
  Kind kind = Kind::kNMinus1;
  std::uint32_t fixed = 0;

  /// Parses "n-1", "n-2", "kn" or a positive integer.
  static QRule parse(const std::string& text);
  [[nodiscard]] std::string to_string() const;
  /// Throws std::invalid_argument if the resolved q falls outside [1, kn].
  [[nodiscard]] std::uint32_t resolve(std::uint32_t n, std::uint32_t k) const;
};

struct TrialRow {
  std::uint32_t n = 0;
  std::uint32_t k = 0;
  std::uint32_t q = 0;
  std::uint32_t trials = 0;
  std::uint32_t successes = 0;
  double frequency = 0.0;
  double mean_ms = 0.0;  // wall-clock; the only field that is not reproducible
};

struct TrialTable {
  std::vector<TrialRow> rows;
};

/// Frequency of a rainbow spanning tree in G_{k,q} per n. Every no-tree
/// outcome has its certificate re-verified; every hundredth tree outcome is
/// re-validated as a rainbow spanning tree.
TrialTable sweep_rst(const std::vector<std::uint32_t>& ns, std::uint32_t k, const QRule& rule,
                     std::uint32_t trials, std::uint64_t master_seed, unsigned workers = 1);

enum class ProbeKind { kRainbowPerfectMatching, kRainbowHamiltonCycle };

struct ProbeResult {
  ProbeKind kind = ProbeKind::kRainbowPerfectMatching;
  std::uint32_t n = 0;
  std::uint32_t k = 0;
  std::uint32_t q = 0;
  std::uint32_t trials = 0;
  std::uint32_t successes = 0;
  double frequency = 0.0;
};

inline constexpr std::uint32_t kMaxRpmVertices = 16;
inline constexpr std::uint32_t kMaxRhcVertices = 14;

/// Exhaustive search for a perfect matching with pairwise distinct colours.
bool has_rainbow_perfect_matching(const MultiGraph& g, const Colouring& c);

/// Exhaustive search for a Hamilton cycle with pairwise distinct colours.
bool has_rainbow_hamilton_cycle(const MultiGraph& g, const Colouring& c);

/// Colouring of trial `seed` with q colours, reached from the one-colour
/// colouring by repeated colour coupling. For fixed seed the colourings for
/// successive q are coupled, which keeps probe curves over q comparable.
Colouring coupled_colouring(std::size_t edge_count, std::uint32_t q, const Seed& seed);

/// Rainbow perfect matchings in G_{2,q}; n even, at most kMaxRpmVertices.
ProbeResult rpm_exact(std::uint32_t n, std::uint32_t q, std::uint32_t trials,
                      std::uint64_t master_seed, unsigned workers = 1);

/// Rainbow Hamilton cycles in G_{3,q}; 4 <= n <= kMaxRhcVertices.
ProbeResult rhc_exact(std::uint32_t n, std::uint32_t q, std::uint32_t trials,
                      std::uint64_t master_seed, unsigned workers = 1);

std::string to_string(ProbeKind kind);

}  // namespace rkout

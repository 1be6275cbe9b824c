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
#include <stdexcept>
#include <variant>
#include <vector>

#include "rkout/matroid.hpp"
#include "rkout/model.hpp"

namespace rkout {

/// Raised when a result fails its own re-verification. Always a solver bug.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A set that is a forest and rainbow at the same time.
struct CommonIndependentSet {
  EdgeSet edges;

  [[nodiscard]] std::size_t size() const { return edges.size(); }
};

/// Colour set I violating kappa(C_I) <= q + 1 - |I|.
struct Certificate {
  ColourSet colours;
  std::uint32_t kappa_value = 0;
  /// kappa(C_I) - (q + 1 - |I|); at least 1 for a valid certificate.
  std::int64_t margin = 0;
};

struct RainbowTree {
  std::vector<EdgeId> edges;  // n - 1 edge ids, increasing
};

using RainbowResult = std::variant<RainbowTree, Certificate>;

inline bool has_tree(const RainbowResult& r) { return std::holds_alternative<RainbowTree>(r); }

struct SolverOptions {
  /// Re-check size, acyclicity and rainbowness after every augmentation.
  bool verify_augmentations = false;
};

/// Maximum rainbow forest by cardinality matroid intersection of the graphic
/// matroid and the colour partition matroid.
///
/// Starts from the greedy rainbow forest in edge-id order, then repeatedly
/// searches the exchange graph breadth-first. Sources are non-solution edges
/// whose colour is unused; sinks are non-solution edges joining two trees of
/// the current forest. An edge x outside the solution points at every
/// solution edge on the forest path between x's endpoints; a solution edge y
/// points at the non-solution edges of y's colour. Each phase rebuilds the
/// rooted forest and walks forest paths with skip pointers, so a tree edge is
/// visited once per phase; a phase costs O(m alpha(n)).
class RainbowForestSolver {
 public:
  RainbowForestSolver(const MultiGraph& g, const Colouring& c, SolverOptions options = {});

  /// Runs to optimality. Idempotent.
  const CommonIndependentSet& solve();

  [[nodiscard]] const CommonIndependentSet& solution() const { return solution_; }
  [[nodiscard]] std::size_t augmentations() const { return augmentations_; }
  [[nodiscard]] std::size_t greedy_size() const { return greedy_size_; }

  /// Elements discovered by the last (failed) exchange-graph search.
  [[nodiscard]] const EdgeSet& last_reached() const { return reached_; }

 private:
  void greedy_start();
  void build_forest();
  EdgeId search();  // returns the sink of an augmenting path, or kNoEdge
  VertexId skip_find(VertexId v);
  void augment(EdgeId sink);
  void verify_solution(std::size_t expected_size) const;

  const MultiGraph& g_;
  const Colouring& c_;
  SolverOptions options_;

  CommonIndependentSet solution_;
  std::vector<EdgeId> colour_holder_;                 // solution edge of each colour
  std::vector<std::vector<EdgeId>> edges_by_colour_;

  // Rooted forest of the current solution.
  std::vector<std::uint32_t> component_;
  std::vector<std::uint32_t> depth_;
  std::vector<VertexId> parent_vertex_;
  std::vector<EdgeId> parent_edge_;
  std::vector<VertexId> skip_;
  std::vector<std::uint32_t> adj_offset_;
  std::vector<EdgeId> adj_edges_;
  std::vector<std::uint32_t> fill_;
  std::vector<VertexId> stack_;

  EdgeSet reached_;
  std::vector<EdgeId> touched_;  // discovery order of the current search
  std::vector<EdgeId> pred_;

  std::size_t augmentations_ = 0;
  std::size_t greedy_size_ = 0;
  bool solved_ = false;
};

CommonIndependentSet max_rainbow_forest(const MultiGraph& g, const Colouring& c);

/// Tree when the maximum rainbow forest spans; otherwise the certificate read
/// off the final search.
RainbowResult find_rst(const MultiGraph& g, const Colouring& c);

/// Certificate from a solved solver whose solution has fewer than n - 1
/// edges. E_2 is the unreached side of the final search, J the colours on it
/// and I = Q \ J. Throws InternalInconsistency if the inequality fails.
Certificate extract_certificate(const MultiGraph& g, const Colouring& c,
                                const RainbowForestSolver& solver);

/// kappa(C_I) <= q + 1 - |I|.
bool check_condition(const MultiGraph& g, const Colouring& c, const ColourSet& colours);

/// Exact maximum by exhaustive search; only for at most 24 edges.
CommonIndependentSet brute_force_max_rainbow_forest(const MultiGraph& g, const Colouring& c);

/// True when `edges` spans [n] as a tree and carries pairwise distinct colours.
bool is_rainbow_spanning_tree(const MultiGraph& g, const Colouring& c,
                              const std::vector<EdgeId>& edges);

}  // namespace rkout

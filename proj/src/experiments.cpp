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

#include "rkout/experiments.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <stdexcept>

#include "rkout/intersect.hpp"
#include "rkout/parallel.hpp"

namespace rkout {

namespace {

constexpr std::uint64_t kSaltGraph = 0x6b6f;
constexpr std::uint64_t kSaltColour = 0x636f;

Seed trial_seed(std::uint64_t master, std::uint32_t trial, std::uint32_t n, std::uint32_t q) {
  return Seed{master, trial}.child((std::uint64_t{n} << 32) | q);
}

struct Incident {
  VertexId other;
  ColourId colour;
};

std::vector<std::vector<Incident>> incidence_lists(const MultiGraph& g, const Colouring& c) {
  std::vector<std::vector<Incident>> adj(g.n);
  for (const Edge& e : g.edges) {
    if (e.owner == e.target) continue;
    adj[e.owner].push_back({e.target, c.colour_of[e.id]});
    adj[e.target].push_back({e.owner, c.colour_of[e.id]});
  }
  return adj;
}

class MatchingSearch {
 public:
  MatchingSearch(const MultiGraph& g, const Colouring& c)
      : adj_(incidence_lists(g, c)), matched_(g.n, 0), used_(c.q, 0) {}

  bool run(std::uint32_t remaining) {
    if (remaining == 0) return true;
    VertexId v = 0;
    while (matched_[v]) ++v;
    matched_[v] = 1;
    for (const Incident& inc : adj_[v]) {
      if (matched_[inc.other] || used_[inc.colour]) continue;
      matched_[inc.other] = 1;
      used_[inc.colour] = 1;
      const bool found = run(remaining - 2);
      used_[inc.colour] = 0;
      matched_[inc.other] = 0;
      if (found) return true;
    }
    matched_[v] = 0;
    return false;
  }

 private:
  std::vector<std::vector<Incident>> adj_;
  std::vector<char> matched_;
  std::vector<char> used_;
};

class HamiltonSearch {
 public:
  HamiltonSearch(const MultiGraph& g, const Colouring& c)
      : adj_(incidence_lists(g, c)), visited_(g.n, 0), used_(c.q, 0), n_(g.n) {}

  bool run() {
    visited_[0] = 1;
    return extend(0, 1);
  }

 private:
  // Path from vertex 0 currently ends at v and covers `length` vertices.
  bool extend(VertexId v, std::uint32_t length) {
    if (length == n_) {
      for (const Incident& inc : adj_[v]) {
        if (inc.other == 0 && !used_[inc.colour]) return true;
      }
      return false;
    }
    for (const Incident& inc : adj_[v]) {
      if (visited_[inc.other] || used_[inc.colour]) continue;
      visited_[inc.other] = 1;
      used_[inc.colour] = 1;
      const bool found = extend(inc.other, length + 1);
      used_[inc.colour] = 0;
      visited_[inc.other] = 0;
      if (found) return true;
    }
    return false;
  }

  std::vector<std::vector<Incident>> adj_;
  std::vector<char> visited_;
  std::vector<char> used_;
  std::uint32_t n_;
};

template <typename Predicate>
ProbeResult run_probe(ProbeKind kind, std::uint32_t n, std::uint32_t k, std::uint32_t q,
                      std::uint32_t trials, std::uint64_t master_seed, unsigned workers,
                      Predicate&& has_structure) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  const std::size_t m = std::size_t{n} * k;
  if (q < 1 || q > m) throw std::invalid_argument("probe q must lie in [1, kn]");
  std::vector<char> hit(trials, 0);
  for_each_trial(trials, workers, [&](std::uint32_t t) {
    // The graph does not depend on q, so probes over q share their graphs.
    const Seed base{master_seed, t};
    const MultiGraph g = generate_kout(n, k, base.child(kSaltGraph));
    const Colouring c = coupled_colouring(m, q, base.child(kSaltColour));
    hit[t] = has_structure(g, c) ? 1 : 0;
  });
  ProbeResult r;
  r.kind = kind;
  r.n = n;
  r.k = k;
  r.q = q;
  r.trials = trials;
  r.successes = static_cast<std::uint32_t>(std::count(hit.begin(), hit.end(), 1));
  r.frequency = static_cast<double>(r.successes) / trials;
  return r;
}

}  // namespace

QRule QRule::parse(const std::string& text) {
  if (text == "n-1") return QRule{Kind::kNMinus1, 0};
  if (text == "n-2") return QRule{Kind::kNMinus2, 0};
  if (text == "kn") return QRule{Kind::kKn, 0};
  std::uint32_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value == 0) {
    throw std::invalid_argument("q rule must be n-1, n-2, kn or a positive integer, got '" + text + "'");
  }
  return QRule{Kind::kFixed, value};
}

std::string QRule::to_string() const {
  switch (kind) {
    case Kind::kNMinus1: return "n-1";
    case Kind::kNMinus2: return "n-2";
    case Kind::kKn: return "kn";
    case Kind::kFixed: return std::to_string(fixed);
  }
  return "?";
}

std::uint32_t QRule::resolve(std::uint32_t n, std::uint32_t k) const {
  std::int64_t q = 0;
  switch (kind) {
    case Kind::kNMinus1: q = std::int64_t{n} - 1; break;
    case Kind::kNMinus2: q = std::int64_t{n} - 2; break;
    case Kind::kKn: q = std::int64_t{n} * k; break;
    case Kind::kFixed: q = fixed; break;
  }
  if (q < 1 || q > std::int64_t{n} * k) {
    throw std::invalid_argument("q rule " + to_string() + " gives q = " + std::to_string(q) +
                                " outside [1, kn] at n = " + std::to_string(n));
  }
  return static_cast<std::uint32_t>(q);
}

TrialTable sweep_rst(const std::vector<std::uint32_t>& ns, std::uint32_t k, const QRule& rule,
                     std::uint32_t trials, std::uint64_t master_seed, unsigned workers) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  TrialTable table;
  for (const std::uint32_t n : ns) {
    const std::uint32_t q = rule.resolve(n, k);
    std::vector<char> tree(trials, 0);
    std::vector<double> millis(trials, 0.0);
    for_each_trial(trials, workers, [&](std::uint32_t t) {
      const Seed seed = trial_seed(master_seed, t, n, q);
      const MultiGraph g = generate_kout(n, k, seed.child(kSaltGraph));
      const Colouring c = assign_balanced_colouring(g, q, seed.child(kSaltColour));
      const auto start = std::chrono::steady_clock::now();
      const RainbowResult result = find_rst(g, c);
      millis[t] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      if (const auto* found = std::get_if<RainbowTree>(&result)) {
        if (t % 100 == 0 && !is_rainbow_spanning_tree(g, c, found->edges)) {
          throw InternalInconsistency("sweep produced an invalid rainbow spanning tree");
        }
        tree[t] = 1;
      } else if (check_condition(g, c, std::get<Certificate>(result).colours)) {
        throw InternalInconsistency("sweep certificate satisfies the condition it should violate");
      }
    });
    TrialRow row;
    row.n = n;
    row.k = k;
    row.q = q;
    row.trials = trials;
    row.successes = static_cast<std::uint32_t>(std::count(tree.begin(), tree.end(), 1));
    row.frequency = static_cast<double>(row.successes) / trials;
    for (const double ms : millis) row.mean_ms += ms;
    row.mean_ms /= trials;
    table.rows.push_back(row);
  }
  return table;
}

bool has_rainbow_perfect_matching(const MultiGraph& g, const Colouring& c) {
  if (g.n % 2 != 0) return false;
  if (std::size_t{c.q} * 2 < g.n) return false;
  MatchingSearch search(g, c);
  return search.run(g.n);
}

bool has_rainbow_hamilton_cycle(const MultiGraph& g, const Colouring& c) {
  if (g.n < 3 || c.q < g.n) return false;
  HamiltonSearch search(g, c);
  return search.run();
}

Colouring coupled_colouring(std::size_t edge_count, std::uint32_t q, const Seed& seed) {
  Colouring c = assign_balanced_colouring(edge_count, 1, seed);
  for (std::uint32_t step = 1; step < q; ++step) {
    c = couple_add_colour(c, seed.child(step)).colouring;
  }
  return c;
}

ProbeResult rpm_exact(std::uint32_t n, std::uint32_t q, std::uint32_t trials,
                      std::uint64_t master_seed, unsigned workers) {
  if (n % 2 != 0) throw std::invalid_argument("rainbow perfect matching probe needs even n");
  if (n < 4 || n > kMaxRpmVertices) {
    throw std::invalid_argument("rainbow perfect matching probe needs 4 <= n <= " +
                                std::to_string(kMaxRpmVertices));
  }
  return run_probe(ProbeKind::kRainbowPerfectMatching, n, 2, q, trials, master_seed, workers,
                   has_rainbow_perfect_matching);
}

ProbeResult rhc_exact(std::uint32_t n, std::uint32_t q, std::uint32_t trials,
                      std::uint64_t master_seed, unsigned workers) {
  if (n < 4 || n > kMaxRhcVertices) {
    throw std::invalid_argument("rainbow Hamilton cycle probe needs 4 <= n <= " +
                                std::to_string(kMaxRhcVertices));
  }
  return run_probe(ProbeKind::kRainbowHamiltonCycle, n, 3, q, trials, master_seed, workers,
                   has_rainbow_hamilton_cycle);
}

std::string to_string(ProbeKind kind) {
  return kind == ProbeKind::kRainbowPerfectMatching ? "rpm" : "rhc";
}

}  // namespace rkout

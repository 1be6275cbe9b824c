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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>

#include "oracles.hpp"
#include "rkout/experiments.hpp"
#include "rkout/intersect.hpp"
#include "rkout/lemma_lab.hpp"

using namespace rkout;

namespace {

unsigned workers() { return std::max(1u, std::thread::hardware_concurrency()); }

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

std::uint64_t mask_of(const ColourSet& s) {
  std::uint64_t mask = 0;
  for (const auto c : s.members()) mask |= std::uint64_t{1} << c;
  return mask;
}

Outcome oracle_equivalence() {
  std::uint32_t mismatches = 0, bad_certs = 0, no_tree = 0;
  for (std::uint64_t s = 0; s < 500; ++s) {
    const auto inst = oracle::random_small_instance(0xacce55 + s);
    const auto& g = inst.graph;
    const auto& c = inst.colouring;
    if (max_rainbow_forest(g, c).size() != brute_force_max_rainbow_forest(g, c).size()) ++mismatches;
    const RainbowResult r = find_rst(g, c);
    if (const auto* cert = std::get_if<Certificate>(&r)) {
      ++no_tree;
      const std::int64_t kap = oracle::kappa_of_colour_mask(g, c, mask_of(cert->colours));
      if (kap < std::int64_t{c.q} - std::int64_t(cert->colours.size()) + 2) ++bad_certs;
    }
  }
  return {mismatches == 0 && bad_certs == 0,
          fmt("500 instances, %u size mismatches, %u no-tree certificates, %u invalid", mismatches,
              no_tree, bad_certs)};
}

Outcome duality() {
  std::uint32_t mismatches = 0;
  for (std::uint64_t s = 0; s < 100; ++s) {
    const auto inst = oracle::random_small_instance(0xd0a1 + s, 7);
    const auto lhs = static_cast<std::int64_t>(max_rainbow_forest(inst.graph, inst.colouring).size());
    if (lhs != oracle::edmonds_min_by_enumeration(inst.graph, inst.colouring)) ++mismatches;
  }
  return {mismatches == 0, fmt("100 instances with n <= 7, %u mismatches", mismatches)};
}

Outcome threshold() {
  const std::vector<std::uint32_t> ns{100, 300, 1000};
  const TrialTable ok = sweep_rst(ns, 2, QRule::parse("n-1"), 200, 3, workers());
  const TrialTable few = sweep_rst(ns, 2, QRule::parse("n-2"), 200, 3, workers());
  bool pass = ok.rows.back().frequency >= 0.90;
  for (std::size_t i = 1; i < ok.rows.size(); ++i) pass &= ok.rows[i].frequency >= ok.rows[i - 1].frequency;
  for (const auto& row : few.rows) pass &= row.successes == 0;
  return {pass, fmt("q=n-1 freq %.3f/%.3f/%.3f at n=100/300/1000; q=n-2 successes %u/%u/%u",
                    ok.rows[0].frequency, ok.rows[1].frequency, ok.rows[2].frequency,
                    few.rows[0].successes, few.rows[1].successes, few.rows[2].successes)};
}

Outcome gamma_cycles() {
  const LemmaReport r = gamma_cycles_report(10000, 1000, 4, 3.0, workers());
  return {r.pass, fmt("n=10000, mean %.4f vs exact %.4f, se %.4f, z %.2f", r.empirical, *r.exact,
                      r.standard_error, r.z_score)};
}

Outcome mono_parallel() {
  const LemmaReport r = mono_parallel_report(1000, 2, 999, 1000, 5, 0.02, workers());
  return {r.pass, fmt("n=1000, k=2, q=999: frequency %.4f (bound %.2f)", r.empirical, *r.bound)};
}

Outcome colour_monotonicity() {
  Engine eng = make_engine(Seed{6, 0});
  std::uint32_t violations = 0, comparisons = 0;
  for (int f = 0; f < 50; ++f) {
    const std::uint32_t ground = std::uniform_int_distribution<std::uint32_t>(2, 7)(eng);
    const std::uint32_t members = std::uniform_int_distribution<std::uint32_t>(1, 4)(eng);
    std::vector<std::vector<std::uint32_t>> family;
    for (std::uint32_t i = 0; i < members; ++i) {
      std::vector<std::uint32_t> set;
      while (set.empty()) {
        for (std::uint32_t x = 0; x < ground; ++x) {
          if (std::bernoulli_distribution(0.5)(eng)) set.push_back(x);
        }
      }
      family.push_back(std::move(set));
    }
    Fraction prev = exact_rainbow_probability(family, ground, 1);
    for (std::uint32_t q = 2; q <= ground; ++q) {
      const Fraction cur = exact_rainbow_probability(family, ground, q);
      ++comparisons;
      if (!(cur >= prev)) ++violations;
      prev = cur;
    }
  }
  std::uint32_t profile_errors = 0, couplings = 0;
  for (std::uint32_t m = 2; m <= 60; ++m) {
    Colouring c = assign_balanced_colouring(m, 1, Seed{m, 0});
    for (std::uint32_t q = 1; q < m; ++q) {
      c = couple_add_colour(c, Seed{m, q}).colouring;
      ++couplings;
      try {
        check_balanced_colouring(c, m);
        const ColourProfile p = balanced_profile(m, q + 1);
        const auto mult = c.multiplicities();
        const auto popular = std::count(mult.begin(), mult.end(), p.rho + 1);
        const auto unpopular = std::count(mult.begin(), mult.end(), p.rho);
        if (c.q != q + 1 || popular != p.num_popular || popular + unpopular != q + 1) ++profile_errors;
      } catch (const std::exception&) {
        ++profile_errors;
      }
    }
  }
  return {violations == 0 && profile_errors == 0,
          fmt("%u probability comparisons, %u violations; %u couplings, %u profile errors",
              comparisons, violations, couplings, profile_errors)};
}

Outcome sampler_equivalence() {
  constexpr std::uint32_t kSamples = 100000;
  const auto statistic = [](const MultiGraph& g, const Colouring& c) {
    const bool distinct = c.colour_of[0] != c.colour_of[1];
    return static_cast<int>(count_monochromatic_parallel_pairs(g, c)) * 10 + (distinct ? 2 : 1);
  };
  std::map<int, std::array<double, 2>> cells;
  for (std::uint32_t t = 0; t < kSamples; ++t) {
    const MultiGraph g = generate_kout(4, 2, Seed{7, t});
    ++cells[statistic(g, assign_balanced_colouring(g, 3, Seed{7, t}.child(1)))][0];
    const auto gamma = generate_gamma(4, 2, 3, Seed{8, t});
    const auto [h, c] = gamma_to_coloured_kout(gamma, Seed{8, t}.child(1));
    ++cells[statistic(h, c)][1];
  }
  // Pool cells whose expected count is below 5 into one.
  std::vector<std::array<double, 2>> table;
  std::array<double, 2> pooled{0, 0};
  for (const auto& [key, counts] : cells) {
    if ((counts[0] + counts[1]) / 2 < 5) {
      pooled[0] += counts[0];
      pooled[1] += counts[1];
    } else {
      table.push_back(counts);
    }
  }
  if (pooled[0] + pooled[1] > 0) table.push_back(pooled);
  double chi2 = 0;
  for (const auto& row : table) {
    const double expected = (row[0] + row[1]) / 2;
    for (const double observed : row) chi2 += (observed - expected) * (observed - expected) / expected;
  }
  const double df = static_cast<double>(table.size()) - 1;
  const double p = df > 0 ? boost::math::cdf(boost::math::complement(boost::math::chi_squared(df), chi2)) : 1.0;
  return {p >= 0.001, fmt("%zu cells, chi2 %.2f on %.0f df, p = %.4f", table.size(), chi2, df, p)};
}

Outcome sharpness() {
  const LemmaReport one = connectivity_report(1000, 1, 200, 8, 0.2, workers());
  const LemmaReport two = connectivity_report(1000, 2, 200, 8, 0.99, workers());
  return {one.pass && two.pass,
          fmt("connected: k=1 %.3f (<= 0.2), k=2 %.3f (>= 0.99)", one.empirical, two.empirical)};
}

Outcome probes() {
  bool bounds = true, monotone = true;
  std::string detail;
  for (const std::uint32_t n : {10u, 12u}) {
    double prev = -1;
    std::uint32_t dips = 0;
    for (std::uint32_t q = 1; q <= 2 * n; ++q) {
      const ProbeResult r = rpm_exact(n, q, 1000, 9, workers());
      if (2 * q < n && r.successes != 0) bounds = false;
      if (r.frequency < prev) ++dips;
      prev = r.frequency;
    }
    detail += fmt("rpm n=%u dips %u; ", n, dips);
    monotone &= dips == 0;
    prev = -1;
    dips = 0;
    for (std::uint32_t q = 1; q <= 3 * n; ++q) {
      const ProbeResult r = rhc_exact(n, q, 300, 9, workers());
      if (q < n && r.successes != 0) bounds = false;
      if (r.frequency < prev) ++dips;
      prev = r.frequency;
    }
    detail += fmt("rhc n=%u dips %u; ", n, dips);
    monotone &= dips == 0;
  }
  detail += bounds ? "zero below the colour bounds" : "NONZERO below a colour bound";
  return {bounds && monotone, detail};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, Outcome (*)()>> criteria{
      {"oracle equivalence", oracle_equivalence},   {"min-max duality", duality},
      {"threshold behaviour", threshold},           {"gamma cycle expectation", gamma_cycles},
      {"monochromatic parallel pairs", mono_parallel}, {"colour monotonicity", colour_monotonicity},
      {"sampler equivalence", sampler_equivalence}, {"sharpness of k", sharpness},
      {"probe sanity", probes},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] criterion %zu %s: %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].first, o.detail.c_str(), secs);
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}

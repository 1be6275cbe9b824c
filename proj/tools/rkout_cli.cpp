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

// rkout: sample randomly coloured k-out graphs, decide rainbow spanning trees
// and run the Monte Carlo experiments.
//
// Exit codes: 0 success (or "tree"), 1 "no_tree", 2 input or validation error,
// 3 internal inconsistency.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "rkout/experiments.hpp"
#include "rkout/intersect.hpp"
#include "rkout/io.hpp"
#include "rkout/lemma_lab.hpp"
#include "rkout/model.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitNoTree = 1;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

struct RunConfig {
  std::string subcommand;
  std::vector<std::uint32_t> ns;
  std::uint32_t k = 2;
  std::optional<std::uint32_t> q;
  std::string q_rule = "n-1";
  std::uint32_t trials = 200;
  std::uint64_t seed = 1;
  unsigned workers = 1;
  std::string out;
  std::string format = "csv";
  std::string input;
  std::string lemma = "all";
  std::string probe_kind;
  std::vector<std::uint32_t> qs;
  double z_threshold = 3.0;

  [[nodiscard]] json to_json() const {
    json j{{"subcommand", subcommand}, {"seed", seed}, {"workers", workers}};
    if (!ns.empty()) j["n"] = ns.size() == 1 ? json(ns.front()) : json(ns);
    if (subcommand != "solve") j["k"] = k;
    if (q) j["q"] = *q;
    if (subcommand == "sweep") j["q_rule"] = q_rule;
    if (subcommand == "sweep" || subcommand == "probe" || subcommand == "lemmas") j["trials"] = trials;
    if (!input.empty()) j["input"] = input;
    return j;
  }
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_.open(path);
      if (!file_) throw rkout::ParseError("cannot write '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

json profile_json(std::size_t edges, std::uint32_t q) {
  const auto p = rkout::balanced_profile(edges, q);
  return json{{"rho", p.rho}, {"num_popular", p.num_popular}};
}

int cmd_gen(RunConfig& cfg) {
  require(cfg.ns.size() == 1, "gen needs exactly one --n");
  require(cfg.q.has_value(), "gen needs --q");
  const std::uint32_t n = cfg.ns.front();
  require(*cfg.q >= 1 && *cfg.q <= std::uint64_t{n} * cfg.k, "--q must lie in [1, k*n]");
  const rkout::Seed seed{cfg.seed, 0};
  const auto g = rkout::generate_kout(n, cfg.k, seed.child(1));
  const auto c = rkout::assign_balanced_colouring(g, *cfg.q, seed.child(2));
  json j = rkout::instance_to_json(g, c);
  j["config"] = cfg.to_json();
  j["config"].update(profile_json(g.edge_count(), c.q));
  Output out(cfg.out);
  out.stream() << j.dump(2) << '\n';
  return kExitOk;
}

int cmd_solve(RunConfig& cfg) {
  const rkout::Instance inst = rkout::read_instance(cfg.input);
  const auto result = rkout::find_rst(inst.graph, inst.colouring);
  json j = rkout::result_to_json(result);
  j["config"] = cfg.to_json();
  j["config"]["n"] = inst.graph.n;
  j["config"]["k"] = inst.graph.k;
  j["config"]["q"] = inst.colouring.q;
  j["config"]["rho"] = inst.colouring.rho;
  j["config"]["num_popular"] = inst.colouring.num_popular;
  Output out(cfg.out);
  out.stream() << j.dump(2) << '\n';
  return rkout::has_tree(result) ? kExitOk : kExitNoTree;
}

int cmd_sweep(RunConfig& cfg) {
  require(!cfg.ns.empty(), "sweep needs at least one --n");
  require(cfg.trials >= 1, "--trials must be at least 1");
  require(cfg.format == "csv" || cfg.format == "json", "--format must be csv or json");
  const auto rule = rkout::QRule::parse(cfg.q_rule);
  for (const auto n : cfg.ns) static_cast<void>(rule.resolve(n, cfg.k));
  const auto table = rkout::sweep_rst(cfg.ns, cfg.k, rule, cfg.trials, cfg.seed, cfg.workers);
  Output out(cfg.out);
  if (cfg.format == "json") {
    json j{{"config", cfg.to_json()}, {"rows", rkout::table_to_json(table)}};
    out.stream() << j.dump(2) << '\n';
  } else {
    std::vector<std::string> preamble{"config " + cfg.to_json().dump()};
    for (const auto& row : table.rows) {
      preamble.push_back("n=" + std::to_string(row.n) + " q=" + std::to_string(row.q) + " " +
                         profile_json(std::size_t{row.n} * row.k, row.q).dump());
    }
    rkout::write_table_csv(out.stream(), table, preamble);
  }
  return kExitOk;
}

int cmd_lemmas(RunConfig& cfg) {
  require(cfg.trials >= 1, "--trials must be at least 1");
  const std::vector<std::string> known{"gamma-cycles", "mono-parallel", "connectivity"};
  std::vector<std::string> names;
  if (cfg.lemma == "all") {
    names = known;
  } else {
    require(std::find(known.begin(), known.end(), cfg.lemma) != known.end(),
            "--name must be one of gamma-cycles, mono-parallel, connectivity, all");
    names = {cfg.lemma};
  }
  require(cfg.ns.size() <= 1, "lemmas takes at most one --n");
  Output out(cfg.out);
  for (const auto& name : names) {
    rkout::LemmaReport report;
    json config = cfg.to_json();
    if (name == "gamma-cycles") {
      const std::uint32_t n = cfg.ns.empty() ? 10000 : cfg.ns.front();
      require(cfg.trials >= 2, "gamma-cycles needs --trials >= 2");
      report = rkout::gamma_cycles_report(n, cfg.trials, cfg.seed, cfg.z_threshold, cfg.workers);
      config["n"] = n;
      config["k"] = 2;
      config["q"] = n - 1;
      config.update(profile_json(std::size_t{n} * 2, n - 1));
    } else if (name == "mono-parallel") {
      const std::uint32_t n = cfg.ns.empty() ? 1000 : cfg.ns.front();
      const std::uint32_t q = cfg.q.value_or(n - 1);
      report = rkout::mono_parallel_report(n, cfg.k, q, cfg.trials, cfg.seed, 0.02, cfg.workers);
      config["n"] = n;
      config["q"] = q;
      config.update(profile_json(std::size_t{n} * cfg.k, q));
    } else {
      const std::uint32_t n = cfg.ns.empty() ? 1000 : cfg.ns.front();
      const double bound = cfg.k >= 2 ? 0.99 : 0.2;
      report = rkout::connectivity_report(n, cfg.k, cfg.trials, cfg.seed, bound, cfg.workers);
      config["n"] = n;
    }
    json j = rkout::report_to_json(report);
    j["config"] = config;
    out.stream() << j.dump() << '\n';
  }
  return kExitOk;
}

int cmd_probe(RunConfig& cfg) {
  require(cfg.probe_kind == "rpm" || cfg.probe_kind == "rhc", "probe kind must be rpm or rhc");
  require(cfg.ns.size() == 1, "probe needs exactly one --n");
  require(cfg.trials >= 1, "--trials must be at least 1");
  require(cfg.format == "csv" || cfg.format == "json", "--format must be csv or json");
  std::vector<std::uint32_t> qs = cfg.qs;
  if (cfg.q) qs.push_back(*cfg.q);
  require(!qs.empty(), "probe needs --q");
  const std::uint32_t n = cfg.ns.front();
  std::vector<rkout::ProbeResult> results;
  for (const auto q : qs) {
    results.push_back(cfg.probe_kind == "rpm" ? rkout::rpm_exact(n, q, cfg.trials, cfg.seed, cfg.workers)
                                              : rkout::rhc_exact(n, q, cfg.trials, cfg.seed, cfg.workers));
  }
  Output out(cfg.out);
  if (cfg.format == "json") {
    json rows = json::array();
    for (const auto& r : results) rows.push_back(rkout::probe_to_json(r));
    out.stream() << json{{"config", cfg.to_json()}, {"rows", rows}}.dump(2) << '\n';
  } else {
    out.stream() << "# config " << cfg.to_json().dump() << '\n';
    out.stream() << "kind,n,k,q,trials,successes,frequency\n";
    for (const auto& r : results) {
      out.stream() << rkout::to_string(r.kind) << ',' << r.n << ',' << r.k << ',' << r.q << ','
                   << r.trials << ',' << r.successes << ',' << r.frequency << '\n';
    }
  }
  return kExitOk;
}

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--seed", cfg.seed, "master seed")->envname("RKOUT_SEED");
  sub->add_option("--workers", cfg.workers, "worker threads")->check(CLI::PositiveNumber);
  sub->add_option("--out", cfg.out, "output path (default stdout)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Randomly coloured k-out graphs and rainbow spanning trees"};
  app.require_subcommand(1);
  RunConfig cfg;
  cfg.workers = std::max(1u, std::thread::hardware_concurrency());

  auto* gen = app.add_subcommand("gen", "sample G_{k,q} and write the interchange file");
  gen->add_option("--n", cfg.ns, "vertex count")->required()->expected(1);
  gen->add_option("--k", cfg.k, "out-choices per vertex");
  gen->add_option("--q", cfg.q, "colour count")->required();
  add_common(gen, cfg);

  auto* solve = app.add_subcommand("solve", "decide a rainbow spanning tree for an interchange file");
  solve->add_option("input", cfg.input, "interchange file")->required();
  solve->add_option("--out", cfg.out, "result path (default stdout)");

  auto* sweep = app.add_subcommand("sweep", "rainbow spanning tree frequency over n");
  sweep->add_option("--n", cfg.ns, "vertex counts")->required();
  sweep->add_option("--k", cfg.k, "out-choices per vertex");
  sweep->add_option("--q-rule", cfg.q_rule, "n-1, n-2, kn or a fixed integer");
  sweep->add_option("--q", cfg.q, "fixed colour count (overrides --q-rule)");
  sweep->add_option("--trials", cfg.trials, "trials per row");
  sweep->add_option("--format", cfg.format, "csv or json");
  add_common(sweep, cfg);

  auto* lemmas = app.add_subcommand("lemmas", "Monte Carlo checks of the auxiliary facts");
  lemmas->add_option("--name", cfg.lemma, "gamma-cycles, mono-parallel, connectivity or all");
  lemmas->add_option("--n", cfg.ns, "vertex count");
  lemmas->add_option("--k", cfg.k, "out-choices per vertex");
  lemmas->add_option("--q", cfg.q, "colour count (mono-parallel; default n-1)");
  lemmas->add_option("--trials", cfg.trials, "samples");
  lemmas->add_option("--z-threshold", cfg.z_threshold, "pass threshold on |z|");
  add_common(lemmas, cfg);

  auto* probe = app.add_subcommand("probe", "exact small-n rainbow matching / Hamilton cycle probes");
  probe->add_option("kind", cfg.probe_kind, "rpm or rhc")->required();
  probe->add_option("--n", cfg.ns, "vertex count")->required();
  probe->add_option("--q", cfg.qs, "colour counts")->required();
  probe->add_option("--trials", cfg.trials, "trials per q");
  probe->add_option("--format", cfg.format, "csv or json");
  add_common(probe, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  cfg.subcommand = app.get_subcommands().front()->get_name();
  if (cfg.subcommand == "sweep" && cfg.q) cfg.q_rule = std::to_string(*cfg.q);
  if (cfg.subcommand == "probe") cfg.k = cfg.probe_kind == "rhc" ? 3 : 2;

  try {
    if (cfg.subcommand == "gen") return cmd_gen(cfg);
    if (cfg.subcommand == "solve") return cmd_solve(cfg);
    if (cfg.subcommand == "sweep") return cmd_sweep(cfg);
    if (cfg.subcommand == "lemmas") return cmd_lemmas(cfg);
    if (cfg.subcommand == "probe") return cmd_probe(cfg);
  } catch (const rkout::InternalInconsistency& e) {
    std::cerr << "internal inconsistency: " << e.what() << '\n';
    return kExitInternal;
  } catch (const rkout::ParseError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid configuration: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}

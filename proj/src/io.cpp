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

#include "rkout/io.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>

namespace rkout {

using nlohmann::json;

namespace {

std::uint32_t get_u32(const json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  const json& v = j.at(key);
  if (!v.is_number_unsigned() || v.get<std::uint64_t>() > 0xffffffffULL) {
    throw ParseError(std::string("field '") + key + "' must be a non-negative integer");
  }
  return v.get<std::uint32_t>();
}

}  // namespace

json instance_to_json(const MultiGraph& g, const Colouring& c) {
  json edges = json::array();
  for (const Edge& e : g.edges) {
    edges.push_back({{"id", e.id},
                     {"owner", e.owner},
                     {"target", e.target},
                     {"colour", c.colour_of[e.id]},
                     {"special", c.is_special(e.id)}});
  }
  return json{{"n", g.n}, {"k", g.k}, {"q", c.q}, {"edges", std::move(edges)}};
}

Instance instance_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("instance must be a JSON object");
  Instance inst;
  MultiGraph& g = inst.graph;
  Colouring& c = inst.colouring;
  g.n = get_u32(j, "n");
  g.k = get_u32(j, "k");
  c.q = get_u32(j, "q");
  if (g.n < 1) throw ParseError("n must be at least 1");
  if (c.q < 1) throw ParseError("q must be at least 1");
  if (!j.contains("edges") || !j.at("edges").is_array()) throw ParseError("'edges' must be an array");

  const json& edges = j.at("edges");
  const std::size_t m = edges.size();
  g.edges.resize(m);
  c.colour_of.resize(m);
  c.special_edge_of.assign(c.q, kNoEdge);
  std::vector<char> seen(m, 0);
  for (const json& e : edges) {
    if (!e.is_object()) throw ParseError("every edge must be an object");
    const std::uint32_t id = get_u32(e, "id");
    if (id >= m) throw ParseError("edge id " + std::to_string(id) + " out of range 0.." + std::to_string(m - 1));
    if (seen[id]) throw ParseError("duplicate edge id " + std::to_string(id));
    seen[id] = 1;
    Edge& edge = g.edges[id];
    edge.id = id;
    edge.owner = get_u32(e, "owner");
    edge.target = get_u32(e, "target");
    if (edge.owner >= g.n || edge.target >= g.n) {
      throw ParseError("edge " + std::to_string(id) + " has an endpoint outside 0..n-1");
    }
    const std::uint32_t colour = get_u32(e, "colour");
    if (colour >= c.q) throw ParseError("edge " + std::to_string(id) + " has colour outside 0..q-1");
    c.colour_of[id] = colour;
    if (e.contains("special")) {
      if (!e.at("special").is_boolean()) throw ParseError("'special' must be a boolean");
      if (e.at("special").get<bool>()) {
        if (c.special_edge_of[colour] != kNoEdge) {
          throw ParseError("colour " + std::to_string(colour) + " has two special edges");
        }
        c.special_edge_of[colour] = id;
      }
    }
  }
  c.rho = static_cast<std::uint32_t>(m / c.q);
  c.num_popular = static_cast<std::uint32_t>(m - std::size_t{c.q} * c.rho);
  return inst;
}

Instance read_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& ex) {
    throw ParseError("'" + path + "' is not valid JSON: " + ex.what());
  }
  return instance_from_json(j);
}

json result_to_json(const RainbowResult& r) {
  if (const auto* tree = std::get_if<RainbowTree>(&r)) {
    return json{{"status", "tree"}, {"tree_edges", tree->edges}, {"certificate", nullptr}};
  }
  const Certificate& cert = std::get<Certificate>(r);
  return json{{"status", "no_tree"},
              {"tree_edges", json::array()},
              {"certificate",
               {{"colours", cert.colours.members()},
                {"kappa", cert.kappa_value},
                {"margin", cert.margin}}}};
}

json report_to_json(const LemmaReport& r) {
  json j{{"lemma", r.name},
         {"exact", r.exact ? json(*r.exact) : json(nullptr)},
         {"bound", r.bound ? json(*r.bound) : json(nullptr)},
         {"empirical", r.empirical},
         {"standard_error", r.standard_error},
         {"z_score", r.z_score},
         {"z_threshold", r.z_threshold},
         {"samples", r.samples},
         {"pass", r.pass}};
  return j;
}

json probe_to_json(const ProbeResult& r) {
  return json{{"kind", to_string(r.kind)}, {"n", r.n},           {"k", r.k},
              {"q", r.q},                  {"trials", r.trials}, {"successes", r.successes},
              {"frequency", r.frequency}};
}

json table_to_json(const TrialTable& t) {
  json rows = json::array();
  for (const TrialRow& r : t.rows) {
    rows.push_back({{"n", r.n},
                    {"k", r.k},
                    {"q", r.q},
                    {"trials", r.trials},
                    {"successes", r.successes},
                    {"frequency", r.frequency},
                    {"mean_ms", r.mean_ms}});
  }
  return rows;
}

void write_table_csv(std::ostream& out, const TrialTable& t,
                     const std::vector<std::string>& preamble) {
  for (const auto& line : preamble) out << "# " << line << '\n';
  out << "n,k,q,trials,successes,frequency,mean_ms\n";
  for (const TrialRow& r : t.rows) {
    out << r.n << ',' << r.k << ',' << r.q << ',' << r.trials << ',' << r.successes << ','
        << r.frequency << ',' << r.mean_ms << '\n';
  }
}

}  // namespace rkout

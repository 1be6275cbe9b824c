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

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "rkout/experiments.hpp"
#include "rkout/intersect.hpp"
#include "rkout/lemma_lab.hpp"
#include "rkout/model.hpp"

namespace rkout {

/// Malformed or inconsistent input file.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Instance {
  MultiGraph graph;
  Colouring colouring;
};

// Interchange file: {"n", "k", "q", "edges": [{"id", "owner", "target",
// "colour", "special"}]}. Unknown top-level keys are ignored on read.
nlohmann::json instance_to_json(const MultiGraph& g, const Colouring& c);
/// Throws ParseError. Edges may appear in any order but ids must cover
/// 0..m-1; loops are accepted.
Instance instance_from_json(const nlohmann::json& j);
Instance read_instance(const std::string& path);

// Result file: {"status": "tree"|"no_tree", "tree_edges": [...],
// "certificate": {"colours": [...], "kappa": int}}.
nlohmann::json result_to_json(const RainbowResult& r);

nlohmann::json report_to_json(const LemmaReport& r);
nlohmann::json probe_to_json(const ProbeResult& r);
nlohmann::json table_to_json(const TrialTable& t);

/// CSV columns n,k,q,trials,successes,frequency,mean_ms. Header lines given
/// in `preamble` are written first, each prefixed with "# ".
void write_table_csv(std::ostream& out, const TrialTable& t,
                     const std::vector<std::string>& preamble = {});

}  // namespace rkout

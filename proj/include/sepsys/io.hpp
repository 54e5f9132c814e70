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

#ifndef SEPSYS_IO_HPP_
#define SEPSYS_IO_HPP_

#include <iosfwd>
#include <optional>
#include <string>

#include "json.hpp"
#include "sepsys/graph.hpp"
#include "sepsys/instances.hpp"
#include "sepsys/oracles.hpp"
#include "sepsys/refinement.hpp"
#include "sepsys/stree.hpp"

namespace sepsys {

using Json = nlohmann::ordered_json;

/// "n m" then m lines "u v", 0-based. '#' starts a comment.
Graph read_edge_list(std::istream& in);
/// DIMACS subset: "c" comments, "p edge n m", then "e u v", 1-based.
Graph read_dimacs(std::istream& in);
std::string write_edge_list(const Graph& g);

/// {"kind":"graphic","graph":{"n":..,"edges":[[u,v],..]}}
/// {"kind":"uniform","r":..,"n":..}
/// {"kind":"linear","matrix":[[..],..],"prime":p}
Matroid matroid_from_json(const Json& j);
Json to_json(const Matroid& m);

/// {"type":"graph","vertices":n,"edges":[[s,t],..],"bags":[[..],..]}
GraphTreeDecomposition graph_decomposition_from_json(const Json& j);
Json to_json(const GraphTreeDecomposition& d);
/// {"type":"matroid","vertices":n,"edges":[[s,t],..],"tau":[..]}
MatroidTreeDecomposition matroid_decomposition_from_json(const Json& j);
Json to_json(const MatroidTreeDecomposition& d);

/// S-tree interchange. "alpha" lists both orientations of every edge in arc
/// order: {"edge":e,"from":u,"to":v,"left":[..],"right":[..]}.
Json stree_to_json(const STree& tree, int ground_size);
STree stree_from_json(const Json& j, int* ground_size = nullptr);

Json to_json(const Report& r);
Json to_json(const TraceRecord& r);

/// A parsed instance: a graph (edge list or .col) or a matroid (.json).
struct Instance {
  std::optional<Graph> graph;
  std::optional<Matroid> matroid;
};

/// Chooses the format by extension: .col is DIMACS, .json a matroid
/// description, anything else an edge list.
Instance read_instance(const std::string& path);
Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace sepsys

#endif  // SEPSYS_IO_HPP_

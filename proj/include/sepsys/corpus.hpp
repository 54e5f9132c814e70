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

#ifndef SEPSYS_CORPUS_HPP_
#define SEPSYS_CORPUS_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "sepsys/graph.hpp"
#include "sepsys/instances.hpp"

namespace sepsys {

inline constexpr int kCorpusMaxVertices = 8;

/// Canonical adjacency code: the lexicographically smallest upper-triangle
/// bit string over relabelings that respect colour refinement. Equal codes
/// iff the graphs are isomorphic. At most kCorpusMaxVertices vertices.
std::uint64_t canonical_code(const Graph& g);

/// One representative per isomorphism class, in order of (edge count, code).
std::vector<Graph> all_graphs(int n);
std::vector<Graph> connected_graphs(int n);

/// `count` connected graphs on n vertices, G(n, 1/2) with rejection.
std::vector<Graph> random_connected_graphs(int n, int count,
                                           std::uint64_t seed);

struct NamedMatroid {
  std::string name;
  Matroid matroid;
};

/// Cycle matroids of connected graphs with 1..max_edges edges, U(2,4),
/// U(2,5), and `random_count` random GF(2) matroids on 4..6 elements.
std::vector<NamedMatroid> matroid_corpus(int max_edges, int random_count,
                                         std::uint64_t seed);

std::string describe(const Graph& g);

}  // namespace sepsys

#endif  // SEPSYS_CORPUS_HPP_

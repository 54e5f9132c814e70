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

#ifndef SEPSYS_GRAPH_HPP_
#define SEPSYS_GRAPH_HPP_

#include <utility>
#include <vector>

#include "sepsys/subset.hpp"

namespace sepsys {

using Edge = std::pair<int, int>;

/// A simple undirected graph on vertices 0..n-1 (n <= 64).
///
/// Construction normalizes the edge list: loops are dropped, parallel edges
/// merged, each edge stored as (u, v) with u < v, and the list sorted. Edge
/// index i (in that order) is element i of the cycle matroid.
class Graph {
 public:
  Graph() = default;
  Graph(int vertex_count, const std::vector<Edge>& edges);

  static Graph complete(int n);
  static Graph path(int n);
  static Graph cycle(int n);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  Subset neighbours(int v) const { return adjacency_[v]; }
  const std::vector<Subset>& adjacency() const { return adjacency_; }
  Subset vertices() const { return GroundSet(n_).all(); }
  bool adjacent(int u, int v) const { return adjacency_[u].contains(v); }

  /// Vertices of `within` reachable from `from` using only `within`.
  Subset reachable(Subset from, Subset within) const;
  bool connected() const;
  /// Vertices of x with a neighbour outside x.
  Subset boundary(Subset x) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<Subset> adjacency_;
};

}  // namespace sepsys

#endif  // SEPSYS_GRAPH_HPP_

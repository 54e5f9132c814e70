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

#include "sepsys/graph.hpp"

#include <algorithm>
#include <string>

#include "sepsys/error.hpp"

namespace sepsys {

Graph::Graph(int vertex_count, const std::vector<Edge>& edges)
    : n_(vertex_count), adjacency_(vertex_count) {
  require(vertex_count >= 1 && vertex_count <= kMaxGroundSize,
          ErrorKind::kInvalidInput,
          "graph needs 1..64 vertices, got " + std::to_string(vertex_count));
  for (auto [u, v] : edges) {
    require(u >= 0 && u < n_ && v >= 0 && v < n_, ErrorKind::kInvalidInput,
            "edge endpoint out of range");
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    edges_.emplace_back(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (auto [u, v] : edges_) {
    adjacency_[u].insert(v);
    adjacency_[v].insert(u);
  }
}

Graph Graph::complete(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph Graph::path(int n) {
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

Graph Graph::cycle(int n) {
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, edges);
}

Subset Graph::reachable(Subset from, Subset within) const {
  Subset seen = from & within;
  Subset frontier = seen;
  while (!frontier.empty()) {
    Subset next;
    for_each_element(frontier, [&](int v) { next |= adjacency_[v]; });
    next = (next & within) - seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

bool Graph::connected() const {
  return reachable(Subset::of({0}), vertices()) == vertices();
}

Subset Graph::boundary(Subset x) const {
  const Subset outside = vertices() - x;
  Subset out;
  for_each_element(x, [&](int v) {
    if (adjacency_[v].intersects(outside)) out.insert(v);
  });
  return out;
}

}  // namespace sepsys

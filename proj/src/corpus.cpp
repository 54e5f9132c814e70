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

#include "sepsys/corpus.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "sepsys/error.hpp"

namespace sepsys {

namespace {

// Stable colour refinement; returns vertices grouped into ordered cells.
std::vector<std::vector<int>> refined_cells(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> colour(n, 0);
  for (int round = 0; round < n; ++round) {
    std::vector<std::pair<std::pair<int, std::vector<int>>, int>> keyed;
    for (int v = 0; v < n; ++v) {
      std::vector<int> around;
      for_each_element(g.neighbours(v),
                       [&](int w) { around.push_back(colour[w]); });
      std::sort(around.begin(), around.end());
      keyed.push_back({{colour[v], std::move(around)}, v});
    }
    std::sort(keyed.begin(), keyed.end());
    std::vector<int> next(n);
    int c = 0;
    for (int i = 0; i < n; ++i) {
      if (i > 0 && keyed[i].first != keyed[i - 1].first) ++c;
      next[keyed[i].second] = c;
    }
    const bool stable = std::set<int>(next.begin(), next.end()).size() ==
                        std::set<int>(colour.begin(), colour.end()).size();
    colour = next;
    if (stable) break;
  }
  const int cells = *std::max_element(colour.begin(), colour.end()) + 1;
  std::vector<std::vector<int>> out(cells);
  for (int v = 0; v < n; ++v) out[colour[v]].push_back(v);
  return out;
}

std::uint64_t code_for(const Graph& g, const std::vector<int>& position) {
  const int n = g.vertex_count();
  std::uint64_t code = 0;
  for (auto [u, v] : g.edges()) {
    int a = position[u], b = position[v];
    if (a > b) std::swap(a, b);
    // index of (a, b) in the row-major upper triangle
    const int idx = a * n - a * (a + 1) / 2 + (b - a - 1);
    code |= std::uint64_t{1} << idx;
  }
  return code;
}

void search(const Graph& g, std::vector<std::vector<int>>& cells,
            std::size_t cell, std::vector<int>& position, std::uint64_t& best) {
  if (cell == cells.size()) {
    best = std::min(best, code_for(g, position));
    return;
  }
  auto& members = cells[cell];
  std::sort(members.begin(), members.end());
  int offset = 0;
  for (std::size_t c = 0; c < cell; ++c) offset += cells[c].size();
  do {
    for (std::size_t i = 0; i < members.size(); ++i)
      position[members[i]] = offset + static_cast<int>(i);
    search(g, cells, cell + 1, position, best);
  } while (std::next_permutation(members.begin(), members.end()));
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
  require(g.vertex_count() <= kCorpusMaxVertices, ErrorKind::kCapExceeded,
          "canonical codes are limited to 8 vertices");
  auto cells = refined_cells(g);
  std::vector<int> position(g.vertex_count());
  std::uint64_t best = ~std::uint64_t{0};
  search(g, cells, 0, position, best);
  return best;
}

std::vector<Graph> all_graphs(int n) {
  require(n >= 1 && n <= kCorpusMaxVertices, ErrorKind::kCapExceeded,
          "graph corpus is limited to 1..8 vertices");
  std::vector<Graph> level{Graph(1, {})};
  for (int size = 2; size <= n; ++size) {
    std::map<std::pair<int, std::uint64_t>, Graph> found;
    for (const Graph& base : level) {
      const Subset old_vertices = base.vertices();
      for_each_subset(old_vertices, [&](Subset nbrs) {
        auto edges = base.edges();
        for_each_element(nbrs,
                         [&](int v) { edges.emplace_back(v, size - 1); });
        Graph g(size, edges);
        found.try_emplace({g.edge_count(), canonical_code(g)}, g);
      });
    }
    level.clear();
    for (auto& [key, g] : found) level.push_back(g);
  }
  return level;
}

std::vector<Graph> connected_graphs(int n) {
  std::vector<Graph> out;
  for (auto& g : all_graphs(n))
    if (g.connected()) out.push_back(g);
  return out;
}

std::vector<Graph> random_connected_graphs(int n, int count,
                                           std::uint64_t seed) {
  require(n >= 1 && n <= kMaxGroundSize, ErrorKind::kInvalidInput,
          "random graphs need 1..64 vertices");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  std::vector<Graph> out;
  while (static_cast<int>(out.size()) < count) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (coin(rng)) edges.emplace_back(u, v);
    Graph g(n, edges);
    if (g.connected()) out.push_back(g);
  }
  return out;
}

std::vector<NamedMatroid> matroid_corpus(int max_edges, int random_count,
                                         std::uint64_t seed) {
  std::vector<NamedMatroid> out;
  // A connected graph with m edges has at most m + 1 vertices.
  for (int n = 2; n <= max_edges + 1 && n <= kCorpusMaxVertices; ++n)
    for (auto& g : connected_graphs(n))
      if (g.edge_count() <= max_edges)
        out.push_back({"M(" + describe(g) + ")", Matroid::graphic(g)});
  out.push_back({"U(2,4)", Matroid::uniform(2, 4)});
  out.push_back({"U(2,5)", Matroid::uniform(2, 5)});
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> size_dist(4, 6);
  std::uniform_int_distribution<int> rows_dist(2, 4);
  std::uniform_int_distribution<int> bit(0, 1);
  for (int i = 0; i < random_count; ++i) {
    const int cols = size_dist(rng);
    const int rows = rows_dist(rng);
    std::vector<std::vector<int>> matrix(rows, std::vector<int>(cols));
    for (auto& row : matrix)
      for (auto& x : row) x = bit(rng);
    out.push_back({"GF2#" + std::to_string(i), Matroid::linear(matrix, 2)});
  }
  return out;
}

std::string describe(const Graph& g) {
  std::string s = "n=" + std::to_string(g.vertex_count()) + " E=[";
  bool first = true;
  for (auto [u, v] : g.edges()) {
    if (!first) s += ' ';
    s += std::to_string(u) + "-" + std::to_string(v);
    first = false;
  }
  return s + "]";
}

}  // namespace sepsys

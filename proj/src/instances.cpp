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

#include "sepsys/instances.hpp"

#include <algorithm>

#include "sepsys/error.hpp"

namespace sepsys {

Matroid::Matroid(RankOracle rank)
    : rank_(std::move(rank)),
      rank_ground_(rank_(GroundSet(rank_.ground_size()).all())) {}

Matroid Matroid::graphic(const Graph& g) {
  require(g.edge_count() >= 1, ErrorKind::kInvalidInput,
          "cycle matroid needs at least one edge");
  Matroid m(graphic_rank(g));
  m.graph_ = g;
  return m;
}

Matroid Matroid::uniform(int rank, int size) {
  require(size >= 1, ErrorKind::kInvalidInput, "uniform matroid needs n >= 1");
  Matroid m(sepsys::uniform_rank(rank, size));
  m.uniform_rank_ = rank;
  return m;
}

Matroid Matroid::linear(std::vector<std::vector<int>> matrix, int prime) {
  Matroid m(linear_rank(matrix, prime));
  m.matrix_ = std::move(matrix);
  m.prime_ = prime;
  return m;
}

int Matroid::connectivity(Subset x) const {
  const GroundSet e(size());
  return rank_(x) + rank_(e.complement(x)) - rank_ground_;
}

bool Tree::valid() const {
  if (vertex_count < 1) return false;
  if (static_cast<int>(edges.size()) != vertex_count - 1) return false;
  for (auto [a, b] : edges)
    if (a < 0 || b < 0 || a >= vertex_count || b >= vertex_count || a == b)
      return false;
  const auto adj = adjacency();
  std::vector<char> seen(vertex_count, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (int y : adj[x])
      if (!seen[y]) {
        seen[y] = 1;
        ++reached;
        stack.push_back(y);
      }
  }
  return reached == vertex_count;
}

std::vector<std::vector<int>> Tree::adjacency() const {
  std::vector<std::vector<int>> adj(vertex_count);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  return adj;
}

int GraphTreeDecomposition::width() const {
  int w = 0;
  for (Subset b : bags) w = std::max(w, b.count());
  return w - 1;
}

namespace {

// Vertices of the component of tree - edge(skip) containing start.
std::vector<int> side(const std::vector<std::vector<int>>& adj, int start,
                      int blocked) {
  std::vector<int> out{start};
  std::vector<char> seen(adj.size(), 0);
  seen[start] = 1;
  seen[blocked] = 1;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (int y : adj[out[i]])
      if (!seen[y]) {
        seen[y] = 1;
        out.push_back(y);
      }
  return out;
}

}  // namespace

ValidityReport validate_decomposition(const Graph& g,
                                      const GraphTreeDecomposition& d) {
  ValidityReport r;
  auto bad = [&](std::string msg) {
    r.ok = false;
    r.message = std::move(msg);
    return r;
  };
  if (!d.tree.valid()) return bad("decomposition tree is not a tree");
  if (static_cast<int>(d.bags.size()) != d.tree.vertex_count)
    return bad("one bag per tree vertex required");
  Subset covered;
  for (Subset b : d.bags) {
    if (!b.subset_of(g.vertices())) return bad("bag outside V(G)");
    covered |= b;
  }
  if (covered != g.vertices()) return bad("bags do not cover V(G)");
  for (auto [u, v] : g.edges()) {
    const bool inside = std::any_of(d.bags.begin(), d.bags.end(), [&](Subset b) {
      return b.contains(u) && b.contains(v);
    });
    if (!inside)
      return bad("edge " + std::to_string(u) + "-" + std::to_string(v) +
                 " lies in no bag");
  }
  const auto adj = d.tree.adjacency();
  for (int x = 0; x < g.vertex_count(); ++x) {
    std::vector<int> holders;
    for (int t = 0; t < d.tree.vertex_count; ++t)
      if (d.bags[t].contains(x)) holders.push_back(t);
    std::vector<char> seen(d.tree.vertex_count, 0);
    std::vector<int> stack{holders.front()};
    seen[holders.front()] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
      const int t = stack.back();
      stack.pop_back();
      for (int s : adj[t])
        if (!seen[s] && d.bags[s].contains(x)) {
          seen[s] = 1;
          ++reached;
          stack.push_back(s);
        }
    }
    if (reached != holders.size())
      return bad("bags containing vertex " + std::to_string(x) +
                 " are not connected");
  }
  return r;
}

ValidityReport validate_decomposition(const Matroid& m,
                                      const MatroidTreeDecomposition& d) {
  ValidityReport r;
  if (!d.tree.valid()) {
    r.ok = false;
    r.message = "decomposition tree is not a tree";
  } else if (static_cast<int>(d.tau.size()) != m.size()) {
    r.ok = false;
    r.message = "tau must map every ground element";
  } else {
    for (int v : d.tau)
      if (v < 0 || v >= d.tree.vertex_count) {
        r.ok = false;
        r.message = "tau maps outside the tree";
      }
  }
  return r;
}

GraphTreeDecomposition stree_to_treedecomp(const STree& tree,
                                           const Universe& u) {
  const auto rep = validate_stree(tree, u);
  require(rep.valid(), ErrorKind::kPrecondition,
          "S-tree is not tame: " + rep.message);
  GraphTreeDecomposition d;
  d.tree.vertex_count = tree.vertex_count();
  for (int e = 0; e < tree.edge_count(); ++e) d.tree.edges.push_back(tree.ends(e));
  for (int t = 0; t < tree.vertex_count(); ++t)
    d.bags.push_back(tree.interior(t, u.ground()));
  return d;
}

STree treedecomp_to_stree(const Graph& g, const GraphTreeDecomposition& d) {
  const auto rep = validate_decomposition(g, d);
  require(rep.ok, ErrorKind::kInvalidInput,
          "invalid tree decomposition: " + rep.message);
  const auto adj = d.tree.adjacency();
  STree t(d.tree.vertex_count);
  for (auto [a, b] : d.tree.edges) {
    Subset left;
    Subset right;
    for (int s : side(adj, a, b)) left |= d.bags[s];
    for (int s : side(adj, b, a)) right |= d.bags[s];
    t.add_edge(a, b, Separation{left, right});
  }
  return t;
}

STree matroid_decomp_to_stree(const MatroidTreeDecomposition& d,
                              const Matroid& m) {
  const auto rep = validate_decomposition(m, d);
  require(rep.ok, ErrorKind::kInvalidInput,
          "invalid matroid decomposition: " + rep.message);
  const auto adj = d.tree.adjacency();
  STree t(d.tree.vertex_count);
  for (auto [a, b] : d.tree.edges) {
    std::vector<char> on_left(d.tree.vertex_count, 0);
    for (int s : side(adj, a, b)) on_left[s] = 1;
    Subset left;
    Subset right;
    for (int e = 0; e < m.size(); ++e) {
      if (on_left[d.tau[e]])
        left.insert(e);
      else
        right.insert(e);
    }
    t.add_edge(a, b, Separation{left, right});
  }
  return t;
}

MatroidTreeDecomposition stree_to_matroid_decomp(const STree& tree,
                                                 const Matroid& m) {
  const GroundSet ground(m.size());
  MatroidTreeDecomposition d;
  d.tree.vertex_count = tree.vertex_count();
  for (int e = 0; e < tree.edge_count(); ++e) d.tree.edges.push_back(tree.ends(e));
  d.tau.assign(m.size(), -1);
  for (int t = 0; t < tree.vertex_count(); ++t) {
    for_each_element(tree.interior(t, ground), [&](int e) {
      require(d.tau[e] < 0, ErrorKind::kInvalidInput,
              "element " + std::to_string(e) + " lies in two interiors");
      d.tau[e] = t;
    });
  }
  for (int e = 0; e < m.size(); ++e)
    require(d.tau[e] >= 0, ErrorKind::kInvalidInput,
            "element " + std::to_string(e) + " lies in no interior");
  return d;
}

int matroid_bag_width(const Matroid& m, const MatroidTreeDecomposition& d,
                      int v) {
  const GroundSet ground(m.size());
  const auto adj = d.tree.adjacency();
  int total = 0;
  for (int w : adj[v]) {
    std::vector<char> in(d.tree.vertex_count, 0);
    for (int s : side(adj, w, v)) in[s] = 1;
    Subset part;
    for (int e = 0; e < m.size(); ++e)
      if (in[d.tau[e]]) part.insert(e);
    total += m.rank()(ground.complement(part));
  }
  const int deg = static_cast<int>(adj[v].size());
  return total - (deg - 1) * m.rank_of_ground();
}

int matroid_width(const Matroid& m, const MatroidTreeDecomposition& d) {
  int w = 0;
  for (int v = 0; v < d.tree.vertex_count; ++v)
    w = std::max(w, matroid_bag_width(m, d, v));
  return w;
}

GraphTreeDecomposition elimination_decomposition(const Graph& g,
                                                 const std::vector<int>& order) {
  const int n = g.vertex_count();
  require(static_cast<int>(order.size()) == n, ErrorKind::kPrecondition,
          "elimination order must list every vertex");
  std::vector<int> position(n, -1);
  for (int i = 0; i < n; ++i) position[order[i]] = i;
  std::vector<Subset> adj = g.adjacency();
  GraphTreeDecomposition d;
  d.tree.vertex_count = n;
  d.bags.resize(n);
  std::vector<int> parent(n, -1);
  for (int i = 0; i < n; ++i) {
    const int v = order[i];
    Subset later;
    for_each_element(adj[v], [&](int w) {
      if (position[w] > i) later.insert(w);
    });
    d.bags[i] = later | Subset::of({v});
    for_each_element(later, [&](int w) { adj[w] |= later - Subset::of({w}); });
    int next = -1;
    for_each_element(later, [&](int w) {
      if (next < 0 || position[w] < next) next = position[w];
    });
    parent[i] = next;
  }
  // Join the roots of different components in a chain.
  int last_root = -1;
  for (int i = 0; i < n; ++i) {
    if (parent[i] >= 0) {
      d.tree.edges.emplace_back(i, parent[i]);
    } else {
      if (last_root >= 0) d.tree.edges.emplace_back(last_root, i);
      last_root = i;
    }
  }
  return d;
}

GraphTreeDecomposition path_decomposition(const Graph& g,
                                          const std::vector<int>& order) {
  const int n = g.vertex_count();
  std::vector<int> position(n);
  for (int i = 0; i < n; ++i) position[order[i]] = i;
  GraphTreeDecomposition d;
  d.tree.vertex_count = n;
  for (int i = 0; i < n; ++i) {
    Subset bag = Subset::of({order[i]});
    for (int j = 0; j < i; ++j) {
      bool open = false;
      for_each_element(g.neighbours(order[j]),
                       [&](int w) { open = open || position[w] >= i; });
      if (open) bag.insert(order[j]);
    }
    d.bags.push_back(bag);
    if (i > 0) d.tree.edges.emplace_back(i - 1, i);
  }
  return d;
}

STree caterpillar_branch_stree(const Graph& g) {
  const int m = g.edge_count();
  require(m >= 2, ErrorKind::kPrecondition,
          "branch decompositions need at least two edges");
  // Leaves 0..m-1 carry the edges; spine vertices follow.
  Tree shape;
  shape.vertex_count = m == 2 ? 2 : 2 * m - 2;
  if (m == 2) {
    shape.edges.emplace_back(0, 1);
  } else {
    const int spine = m;  // spine vertex i (1-based) is spine + i - 1
    for (int i = 1; i + 1 <= m - 2; ++i)
      shape.edges.emplace_back(spine + i - 1, spine + i);
    shape.edges.emplace_back(0, spine);
    shape.edges.emplace_back(m - 1, spine + m - 3);
    for (int i = 1; i <= m - 2; ++i) shape.edges.emplace_back(i, spine + i - 1);
  }
  const auto adj = shape.adjacency();
  // Isolated vertices travel with the leaf of edge 0.
  Subset isolated;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.neighbours(v).empty()) isolated.insert(v);
  auto vertices_of = [&](const std::vector<int>& part) {
    Subset s;
    for (int t : part) {
      if (t < m) s |= Subset::of({g.edges()[t].first, g.edges()[t].second});
      if (t == 0) s |= isolated;
    }
    return s;
  };
  STree t(shape.vertex_count);
  for (auto [a, b] : shape.edges)
    t.add_edge(a, b,
               Separation{vertices_of(side(adj, a, b)),
                          vertices_of(side(adj, b, a))});
  return t;
}

int branch_width_of(const STree& tree, const Universe& u) {
  int w = 0;
  for (int e = 0; e < tree.edge_count(); ++e)
    w = std::max(w, u.order(tree.alpha(2 * e)));
  return w;
}

GraphTreeDecomposition subdivide(const GraphTreeDecomposition& d) {
  GraphTreeDecomposition out;
  out.bags = d.bags;
  out.tree.vertex_count = d.tree.vertex_count;
  for (auto [a, b] : d.tree.edges) {
    const int mid = out.tree.vertex_count++;
    out.bags.push_back(d.bags[a] & d.bags[b]);
    out.tree.edges.emplace_back(a, mid);
    out.tree.edges.emplace_back(mid, b);
  }
  return out;
}

}  // namespace sepsys

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

#include "sepsys/stree.hpp"

#include <algorithm>
#include <functional>

#include "sepsys/error.hpp"

namespace sepsys {

int STree::add_vertex() {
  adjacency_.emplace_back();
  return vertex_count() - 1;
}

Arc STree::add_edge(int u, int v, const Separation& label) {
  require(u >= 0 && v >= 0 && u < vertex_count() && v < vertex_count() &&
              u != v,
          ErrorKind::kPrecondition, "bad tree edge endpoints");
  const int e = edge_count();
  ends_.emplace_back(u, v);
  alpha_.push_back(label);
  alpha_.push_back(invert(label));
  adjacency_[u].push_back(2 * e);
  adjacency_[v].push_back(2 * e + 1);
  return 2 * e;
}

void STree::set_label(Arc a, const Separation& label) {
  alpha_[a] = label;
  alpha_[reverse(a)] = invert(label);
}

std::vector<Arc> STree::in_arcs(int t) const {
  std::vector<Arc> in;
  in.reserve(adjacency_[t].size());
  for (Arc a : adjacency_[t]) in.push_back(reverse(a));
  std::sort(in.begin(), in.end());
  return in;
}

std::vector<Separation> STree::star(int t) const {
  std::vector<Separation> out;
  for (Arc a : in_arcs(t)) out.push_back(alpha_[a]);
  return out;
}

Subset STree::interior(int t, const GroundSet& ground) const {
  Subset x = ground.all();
  for (Arc a : adjacency_[t]) x &= alpha_[reverse(a)].right;
  return x;
}

std::vector<Arc> STree::path(int s, int t) const {
  // Parent pointers from a DFS rooted at t, then walk from s.
  std::vector<Arc> to_parent(vertex_count(), -1);
  std::vector<int> stack{t};
  std::vector<char> seen(vertex_count(), 0);
  seen[t] = 1;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (Arc a : adjacency_[x]) {
      const int y = head(a);
      if (seen[y]) continue;
      seen[y] = 1;
      to_parent[y] = reverse(a);
      stack.push_back(y);
    }
  }
  require(seen[s] != 0, ErrorKind::kPrecondition, "vertices not connected");
  std::vector<Arc> out;
  for (int x = s; x != t; x = head(to_parent[x])) out.push_back(to_parent[x]);
  return out;
}

bool STree::arc_leq(Arc a, Arc b) const {
  if (a == b) return true;
  const auto p = path(tail(a), head(b));
  return p.size() >= 2 && p.front() == a && p.back() == b;
}

std::vector<int> STree::subtree_vertices(Arc a) const {
  std::vector<int> out{tail(a)};
  std::vector<std::pair<int, int>> stack{{head(a), tail(a)}};
  while (!stack.empty()) {
    auto [x, parent] = stack.back();
    stack.pop_back();
    out.push_back(x);
    for (Arc b : adjacency_[x])
      if (head(b) != parent) stack.emplace_back(head(b), x);
  }
  return out;
}

bool STree::is_tree() const {
  if (vertex_count() == 0) return false;
  if (edge_count() != vertex_count() - 1) return false;
  std::vector<char> seen(vertex_count(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (Arc a : adjacency_[x]) {
      const int y = head(a);
      if (!seen[y]) {
        seen[y] = 1;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  return reached == vertex_count();
}

STreeReport validate_stree(const STree& tree, const Universe& u) {
  STreeReport r;
  if (!tree.is_tree()) {
    r.is_tree = false;
    r.message = "not a tree";
    return r;
  }
  for (Arc a = 0; a < tree.arc_count(); ++a) {
    if (tree.alpha(reverse(a)) != invert(tree.alpha(a))) {
      r.involution_ok = false;
      r.bad_arc = a;
      r.message = "alpha(reverse) is not the inverse at arc " +
                  std::to_string(a);
      return r;
    }
    if (!u.contains(tree.alpha(a))) {
      r.in_universe = false;
      r.bad_arc = a;
      r.message = "label outside the universe at arc " + std::to_string(a);
      return r;
    }
    r.max_order = std::max(r.max_order, u.order(tree.alpha(a)));
  }
  for (int t = 0; t < tree.vertex_count(); ++t) {
    const auto sigma = tree.star(t);
    if (!is_star(sigma)) {
      r.tame = false;
      r.bad_vertex = t;
      r.message = "star condition fails at vertex " + std::to_string(t);
      return r;
    }
    r.max_star_size = std::max(r.max_star_size, u.star_size_unchecked(sigma));
  }
  // Consecutive arcs suffice: the order on arcs is their transitive closure.
  for (Arc a = 0; a < tree.arc_count() && r.order_preserving; ++a) {
    for (Arc b : tree.out_arcs(tree.head(a))) {
      if (b == reverse(a)) continue;
      if (!leq(tree.alpha(a), tree.alpha(b))) {
        r.order_preserving = false;
        r.bad_arc = a;
        r.message = "alpha not order preserving at arc " + std::to_string(a);
        break;
      }
    }
  }
  return r;
}

namespace {

std::string encode_rooted(const STree& tree, int v, int parent) {
  std::vector<std::string> children;
  for (Arc a : tree.out_arcs(v)) {
    const int w = tree.head(a);
    if (w == parent) continue;
    children.push_back(tree.alpha(a).to_string() +
                       encode_rooted(tree, w, v));
  }
  std::sort(children.begin(), children.end());
  std::string out = "[";
  for (const auto& c : children) out += c;
  out += "]";
  return out;
}

std::vector<int> centers(const STree& tree) {
  const int n = tree.vertex_count();
  std::vector<int> deg(n);
  std::vector<int> layer;
  for (int v = 0; v < n; ++v) {
    deg[v] = tree.degree(v);
    if (deg[v] <= 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    std::vector<int> next;
    for (int v : layer) {
      --remaining;
      for (Arc a : tree.out_arcs(v)) {
        const int w = tree.head(a);
        if (--deg[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

}  // namespace

std::string canonical_form(const STree& tree) {
  require(tree.is_tree(), ErrorKind::kPrecondition, "not a tree");
  std::string best;
  for (int c : centers(tree)) {
    std::string enc = encode_rooted(tree, c, -1);
    if (best.empty() || enc < best) best = std::move(enc);
  }
  return best;
}

}  // namespace sepsys

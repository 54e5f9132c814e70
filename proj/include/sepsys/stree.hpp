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

#ifndef SEPSYS_STREE_HPP_
#define SEPSYS_STREE_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sepsys/separation.hpp"
#include "sepsys/universe.hpp"

namespace sepsys {

/// Oriented tree edge: 2*e for edges()[e] = (u,v) read u -> v, 2*e+1 for
/// v -> u.
using Arc = int;

constexpr Arc reverse(Arc a) { return a ^ 1; }
constexpr int edge_of(Arc a) { return a >> 1; }

/// A finite tree with a labelling of its oriented edges by separations.
///
/// Labels are stored per orientation so that corrupted labellings can be
/// represented and reported; set_label keeps both orientations consistent.
/// The star at t collects the labels of arcs pointing into t.
class STree {
 public:
  STree() = default;
  explicit STree(int vertex_count) : adjacency_(vertex_count) {}

  int add_vertex();
  /// Adds edge u - v labelled so that the arc u -> v carries `label`.
  /// Returns the arc u -> v.
  Arc add_edge(int u, int v, const Separation& label);

  int vertex_count() const { return static_cast<int>(adjacency_.size()); }
  int edge_count() const { return static_cast<int>(ends_.size()); }
  int arc_count() const { return 2 * edge_count(); }

  int tail(Arc a) const {
    return (a & 1) ? ends_[a >> 1].second : ends_[a >> 1].first;
  }
  int head(Arc a) const { return tail(reverse(a)); }
  const std::pair<int, int>& ends(int edge) const { return ends_[edge]; }
  /// Arcs leaving t.
  const std::vector<Arc>& out_arcs(int t) const { return adjacency_[t]; }
  int degree(int t) const { return static_cast<int>(adjacency_[t].size()); }

  const Separation& alpha(Arc a) const { return alpha_[a]; }
  /// Sets the label of a and the inverse label of reverse(a).
  void set_label(Arc a, const Separation& label);
  /// Sets only the label of a. Used to build invalid trees in tests.
  void set_alpha_raw(Arc a, const Separation& label) { alpha_[a] = label; }

  /// Arcs pointing into t, in arc-id order.
  std::vector<Arc> in_arcs(int t) const;
  /// σ_t: labels of the arcs pointing into t, in arc-id order.
  std::vector<Separation> star(int t) const;
  /// ⋂ of the right sides of σ_t; the whole ground set for an empty star.
  Subset interior(int t, const GroundSet& ground) const;

  /// Arcs on the path from s to t, each directed towards t.
  std::vector<Arc> path(int s, int t) const;
  /// The tree order on arcs: a <= b iff b lies in T(a) pointing away from
  /// tail(a).
  bool arc_leq(Arc a, Arc b) const;
  /// Vertices of T(a): tail(a) together with the component of T - tail(a)
  /// containing head(a).
  std::vector<int> subtree_vertices(Arc a) const;

  bool is_tree() const;

  friend bool operator==(const STree&, const STree&) = default;

 private:
  std::vector<std::pair<int, int>> ends_;
  std::vector<std::vector<Arc>> adjacency_;
  std::vector<Separation> alpha_;
};

struct STreeReport {
  bool is_tree = true;
  bool involution_ok = true;
  bool in_universe = true;
  bool tame = true;
  bool order_preserving = true;
  int max_order = 0;
  int max_star_size = 0;
  std::optional<Arc> bad_arc;
  std::optional<int> bad_vertex;
  std::string message;

  bool valid() const {
    return is_tree && involution_ok && in_universe && tame;
  }
};

/// Structural validation: tree shape, involution, universe membership,
/// tameness, and order preservation of α on arcs. Star sizes are computed
/// only when the tree is tame.
STreeReport validate_stree(const STree& tree, const Universe& u);

/// Canonical form up to relabelling of tree vertices: a sorted encoding of
/// the rooted-tree structure with labels, minimized over all roots.
std::string canonical_form(const STree& tree);

}  // namespace sepsys

#endif  // SEPSYS_STREE_HPP_

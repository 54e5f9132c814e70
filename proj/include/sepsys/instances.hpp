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

#ifndef SEPSYS_INSTANCES_HPP_
#define SEPSYS_INSTANCES_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sepsys/graph.hpp"
#include "sepsys/rank.hpp"
#include "sepsys/stree.hpp"
#include "sepsys/universe.hpp"

namespace sepsys {

/// A matroid given by its rank oracle, with the data it was built from.
class Matroid {
 public:
  static Matroid graphic(const Graph& g);
  static Matroid uniform(int rank, int size);
  static Matroid linear(std::vector<std::vector<int>> matrix, int prime);

  RankKind kind() const { return rank_.kind(); }
  int size() const { return rank_.ground_size(); }
  const RankOracle& rank() const { return rank_; }
  int rank_of_ground() const { return rank_ground_; }
  /// λ(X) = r(X) + r(E∖X) - r(E).
  int connectivity(Subset x) const;
  Universe universe() const { return Universe::bipartitions(rank_); }

  const std::optional<Graph>& graph() const { return graph_; }
  int uniform_rank() const { return uniform_rank_; }
  const std::vector<std::vector<int>>& matrix() const { return matrix_; }
  int prime() const { return prime_; }

 private:
  explicit Matroid(RankOracle rank);

  RankOracle rank_;
  int rank_ground_ = 0;
  std::optional<Graph> graph_;
  int uniform_rank_ = 0;
  std::vector<std::vector<int>> matrix_;
  int prime_ = 0;
};

/// A plain tree on vertices 0..n-1.
struct Tree {
  int vertex_count = 1;
  std::vector<std::pair<int, int>> edges;

  bool valid() const;
  std::vector<std::vector<int>> adjacency() const;
  friend bool operator==(const Tree&, const Tree&) = default;
};

struct GraphTreeDecomposition {
  Tree tree;
  std::vector<Subset> bags;

  int width() const;
  friend bool operator==(const GraphTreeDecomposition&,
                         const GraphTreeDecomposition&) = default;
};

struct MatroidTreeDecomposition {
  Tree tree;
  std::vector<int> tau;  // ground element -> tree vertex

  friend bool operator==(const MatroidTreeDecomposition&,
                         const MatroidTreeDecomposition&) = default;
};

struct ValidityReport {
  bool ok = true;
  std::string message;
};

/// The three decomposition axioms plus tree shape.
ValidityReport validate_decomposition(const Graph& g,
                                      const GraphTreeDecomposition& d);
ValidityReport validate_decomposition(const Matroid& m,
                                      const MatroidTreeDecomposition& d);

/// Bags V_t = int(σ_t). The S-tree must be tame.
GraphTreeDecomposition stree_to_treedecomp(const STree& tree,
                                           const Universe& u);
/// α(t -> t') = (union of bags on the t side, union on the t' side).
STree treedecomp_to_stree(const Graph& g, const GraphTreeDecomposition& d);

/// α(t1 -> t2) = (τ⁻¹(T1), τ⁻¹(T2)) for the components T1 ∋ t1, T2 ∋ t2.
STree matroid_decomp_to_stree(const MatroidTreeDecomposition& d,
                              const Matroid& m);
/// τ(e) is the unique vertex v with e on the right of every label in σ_v.
MatroidTreeDecomposition stree_to_matroid_decomp(const STree& tree,
                                                 const Matroid& m);

/// Σ_i r(E∖τ⁻¹(T_i)) - (d-1)·r(E) over the components T_i of T - v.
int matroid_bag_width(const Matroid& m, const MatroidTreeDecomposition& d,
                      int v);
int matroid_width(const Matroid& m, const MatroidTreeDecomposition& d);

/// A tree decomposition from an elimination order (used as a start and in
/// tests). order[i] is the i-th vertex eliminated.
GraphTreeDecomposition elimination_decomposition(const Graph& g,
                                                 const std::vector<int>& order);
/// A path decomposition from a vertex order: bag i is v_i plus the earlier
/// vertices that still have a neighbour at v_i or later.
GraphTreeDecomposition path_decomposition(const Graph& g,
                                          const std::vector<int>& order);
/// An S-tree over T_k from a caterpillar branch decomposition with leaves in
/// edge order. Isolated vertices sit on the side of leaf 0. Needs at least
/// two edges.
STree caterpillar_branch_stree(const Graph& g);
/// Width of a branch S-tree: the largest label order.
int branch_width_of(const STree& tree, const Universe& u);

/// Subdivides every edge (s,s') with a vertex whose bag is V_s ∩ V_s'.
GraphTreeDecomposition subdivide(const GraphTreeDecomposition& d);

}  // namespace sepsys

#endif  // SEPSYS_INSTANCES_HPP_

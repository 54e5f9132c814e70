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

#ifndef SEPSYS_ORACLES_HPP_
#define SEPSYS_ORACLES_HPP_

#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "sepsys/family.hpp"
#include "sepsys/graph.hpp"
#include "sepsys/instances.hpp"
#include "sepsys/stree.hpp"
#include "sepsys/universe.hpp"

namespace sepsys {

inline constexpr int kTreewidthCap = 16;
inline constexpr int kBranchwidthCap = 14;
inline constexpr int kMatroidTreewidthCap = 10;

/// Exact widths by exhaustive dynamic programming over subsets.
int brute_force_treewidth(const Graph& g);
int brute_force_pathwidth(const Graph& g);
/// A vertex order whose path_decomposition has width brute_force_pathwidth.
std::vector<int> optimal_path_order(const Graph& g);
/// An elimination order (first eliminated first) attaining the treewidth.
std::vector<int> optimal_elimination_order(const Graph& g);
/// Number of uneliminated vertices that v reaches through `eliminated`,
/// when v is the last vertex of `eliminated` to go.
int elimination_degree(const Graph& g, Subset eliminated, int v);
/// Branch width with the middle-set width; 0 for fewer than two edges.
int brute_force_branchwidth(const Graph& g);
/// Branch width with width λ(X) + 1; 0 for fewer than two elements.
int brute_force_branchwidth(const Matroid& m);
/// Minimum over all (T, τ) of the largest bag width.
int brute_force_matroid_treewidth(const Matroid& m);
/// A decomposition attaining brute_force_matroid_treewidth.
MatroidTreeDecomposition optimal_matroid_decomposition(const Matroid& m);

/// Minimum order over the interval [lo, hi], visiting every separation of
/// the interval (no minimal-right shortcut).
int lambda_brute(const Universe& u, const Separation& lo, const Separation& hi);

/// Result of a verifier. `witness` is empty on success.
struct Report {
  std::string property;
  bool pass = true;
  std::string witness;
  std::map<std::string, std::uint64_t> counts;
};

inline constexpr std::uint64_t kDefaultVerifyBudget = std::uint64_t{1} << 22;

Report verify_valid(const Graph& g, const GraphTreeDecomposition& d);
Report verify_valid(const Matroid& m, const MatroidTreeDecomposition& d);

/// For all t != t': the number of disjoint V_t-V_t' paths is at least the
/// smallest adhesion on the t-t' path. Pairs t = t' always pass.
Report verify_linked_td(const Graph& g, const GraphTreeDecomposition& d);

/// Exhaustive over t, t', k < theta, and k-sets Z1 ⊆ V_t, Z2 ⊆ V_t'.
Report verify_lean_td(const Graph& g, const GraphTreeDecomposition& d,
                      std::uint64_t budget = kDefaultVerifyBudget);
Report verify_theta_lean(const Graph& g, const GraphTreeDecomposition& d,
                         int theta,
                         std::uint64_t budget = kDefaultVerifyBudget);

/// Exhaustive over t, t' and disjoint Z1 ⊆ τ⁻¹(t), Z2 ⊆ τ⁻¹(t') with
/// r(Z1) = r(Z2) = k.
Report verify_matroid_lean(const Matroid& m, const MatroidTreeDecomposition& d);

/// The linked condition on every pair of arcs e <= f, with exhaustive λ.
Report verify_linked_stree(const STree& tree, const Universe& u);
/// The lean condition over addable candidates, with exhaustive λ.
Report verify_lean_stree(const STree& tree, const StarFamily& f,
                         const Universe& u, bool exhaustive = false);

}  // namespace sepsys

#endif  // SEPSYS_ORACLES_HPP_

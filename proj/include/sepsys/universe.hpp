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

#ifndef SEPSYS_UNIVERSE_HPP_
#define SEPSYS_UNIVERSE_HPP_

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "sepsys/graph.hpp"
#include "sepsys/rank.hpp"
#include "sepsys/separation.hpp"

namespace sepsys {

enum class UniverseKind {
  kGraphSeparations,  // A ∪ B = V, no edge between A∖B and B∖A
  kBipartitions,      // B = V∖A
};

struct IntervalMinimum {
  int value;
  Separation witness;  // canonically smallest minimizer
};

/// A universe of set separations together with its order function
/// |A,B| = r(A) + r(B) - r(V).
///
/// Graph universes carry the graph (an edgeless graph gives all of sep(V));
/// bipartition universes carry only the ground set. Both are closed under
/// join and meet.
class Universe {
 public:
  static constexpr int kDefaultEnumerationCap = 10;

  /// Separations of g with the cardinality order |A ∩ B|.
  static Universe of_graph(const Graph& g);
  /// Separations of g with an arbitrary rank oracle on V(g).
  static Universe of_graph(const Graph& g, RankOracle rank);
  /// Ordered bipartitions (A, V∖A) with the given rank oracle.
  static Universe bipartitions(RankOracle rank);

  UniverseKind kind() const { return kind_; }
  const GroundSet& ground() const { return ground_; }
  int size() const { return ground_.size(); }
  const RankOracle& rank_oracle() const { return rank_; }
  /// Null for bipartition universes.
  const Graph* graph() const { return graph_ ? &*graph_ : nullptr; }
  bool cardinality_order() const {
    return rank_.kind() == RankKind::kCardinality;
  }

  bool contains(const Separation& s) const;
  int rank(Subset x) const { return rank_(x); }
  int rank_of_ground() const { return rank_ground_; }
  int order(const Separation& s) const {
    return rank_(s.left) + rank_(s.right) - rank_ground_;
  }

  /// leq with a ground-set check on both arguments.
  bool checked_leq(const Separation& a, const Separation& b) const;

  /// Every separation of the universe, in canonical order.
  std::vector<Separation> enumerate(int cap = kDefaultEnumerationCap) const;

  /// Star size Σ r(B_i) - n·r(V) for a star with n+1 members. The empty
  /// star has size r(V). Throws kPrecondition if the multiset is not a
  /// star.
  int star_size(std::span<const Separation> star) const;
  /// star_size without the star check.
  int star_size_unchecked(std::span<const Separation> star) const;

  /// Minimum order over lo <= (X,Y) <= hi in the universe, by exhaustive
  /// enumeration of the interval.
  IntervalMinimum lambda_interval(const Separation& lo,
                                  const Separation& hi) const;
  /// All minimizers of the order on [lo, hi], canonical order.
  std::vector<Separation> interval_minimizers(const Separation& lo,
                                              const Separation& hi,
                                              int* value = nullptr) const;
  /// Calls f(s) for every universe separation in [lo, hi]. When
  /// minimal_right_only is set, only the smallest valid right side per left
  /// side is visited (enough for minimizing a non-decreasing rank).
  template <typename F>
  void for_each_in_interval(const Separation& lo, const Separation& hi,
                            bool minimal_right_only, F&& f) const;

  /// True iff |A ∪ C, B ∩ D| <= |C,D| for every pair (s1,s2) = ((A,B),(C,D))
  /// in `pairs`. Each pair must satisfy invert(s1) <= s2. On failure
  /// *counterexample receives the offending pair.
  bool is_grounded_sample(
      std::span<const std::pair<Separation, Separation>> pairs,
      std::pair<Separation, Separation>* counterexample = nullptr) const;
  /// Exhaustive groundedness check (enumeration cap applies).
  bool is_grounded_exhaustive(
      std::pair<Separation, Separation>* counterexample = nullptr,
      int cap = kDefaultEnumerationCap) const;
  /// Grounded for certain: bipartitions, or a non-decreasing rank.
  bool provably_grounded() const {
    return kind_ == UniverseKind::kBipartitions || rank_.known_monotone();
  }

 private:
  Universe(UniverseKind kind, GroundSet ground, RankOracle rank,
           std::optional<Graph> graph);

  Subset minimal_right(Subset left, Subset forced_right) const;

  UniverseKind kind_;
  GroundSet ground_;
  RankOracle rank_;
  std::optional<Graph> graph_;
  int rank_ground_;
};

inline Subset Universe::minimal_right(Subset left, Subset forced_right) const {
  Subset y = ground_.complement(left) | forced_right;
  if (graph_) y |= graph_->boundary(left);
  return y;
}

template <typename F>
void Universe::for_each_in_interval(const Separation& lo, const Separation& hi,
                                    bool minimal_right_only, F&& f) const {
  if (!leq(lo, hi)) return;
  const Subset free_left = hi.left - lo.left;
  for_each_subset(free_left, [&](Subset add) {
    const Subset x = lo.left | add;
    if (kind_ == UniverseKind::kBipartitions) {
      const Subset y = ground_.complement(x);
      if (hi.right.subset_of(y) && y.subset_of(lo.right)) f(Separation{x, y});
      return;
    }
    const Subset y0 = minimal_right(x, hi.right);
    if (!y0.subset_of(lo.right)) return;
    if (minimal_right_only) {
      f(Separation{x, y0});
      return;
    }
    for_each_subset(lo.right - y0, [&](Subset extra) {
      f(Separation{x, y0 | extra});
    });
  });
}

}  // namespace sepsys

#endif  // SEPSYS_UNIVERSE_HPP_

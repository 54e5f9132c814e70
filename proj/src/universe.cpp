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

#include "sepsys/universe.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "sepsys/error.hpp"

namespace sepsys {

Universe::Universe(UniverseKind kind, GroundSet ground, RankOracle rank,
                   std::optional<Graph> graph)
    : kind_(kind),
      ground_(ground),
      rank_(std::move(rank)),
      graph_(std::move(graph)),
      rank_ground_(rank_(ground_.all())) {
  require(ground_.size() >= 1, ErrorKind::kInvalidInput,
          "ground set must be nonempty");
  require(rank_.ground_size() == ground_.size(), ErrorKind::kInvalidInput,
          "rank oracle and ground set sizes differ");
}

Universe Universe::of_graph(const Graph& g) {
  return Universe(UniverseKind::kGraphSeparations, GroundSet(g.vertex_count()),
                  cardinality_rank(g.vertex_count()), g);
}

Universe Universe::of_graph(const Graph& g, RankOracle rank) {
  return Universe(UniverseKind::kGraphSeparations, GroundSet(g.vertex_count()),
                  std::move(rank), g);
}

Universe Universe::bipartitions(RankOracle rank) {
  const int n = rank.ground_size();
  return Universe(UniverseKind::kBipartitions, GroundSet(n), std::move(rank),
                  std::nullopt);
}

bool Universe::contains(const Separation& s) const {
  if (!ground_.contains(s.left) || !ground_.contains(s.right)) return false;
  if ((s.left | s.right) != ground_.all()) return false;
  if (kind_ == UniverseKind::kBipartitions)
    return s.right == ground_.complement(s.left);
  const Subset only_left = s.left - s.right;
  const Subset only_right = s.right - s.left;
  bool ok = true;
  for_each_element(only_left, [&](int v) {
    if (graph_->neighbours(v).intersects(only_right)) ok = false;
  });
  return ok;
}

bool Universe::checked_leq(const Separation& a, const Separation& b) const {
  require(ground_.contains(a.left) && ground_.contains(a.right) &&
              ground_.contains(b.left) && ground_.contains(b.right),
          ErrorKind::kPrecondition, "separation outside the ground set");
  return leq(a, b);
}

std::vector<Separation> Universe::enumerate(int cap) const {
  require(size() <= cap, ErrorKind::kCapExceeded,
          "enumeration over " + std::to_string(size()) +
              " elements exceeds cap " + std::to_string(cap));
  std::vector<Separation> out;
  for_each_in_interval(Separation{Subset(), ground_.all()},
                       Separation{ground_.all(), Subset()}, false,
                       [&](const Separation& s) { out.push_back(s); });
  std::sort(out.begin(), out.end());
  return out;
}

int Universe::star_size_unchecked(std::span<const Separation> star) const {
  if (star.empty()) return rank_ground_;
  int total = 0;
  for (const auto& s : star) total += rank_(s.right);
  return total - static_cast<int>(star.size() - 1) * rank_ground_;
}

int Universe::star_size(std::span<const Separation> star) const {
  require(is_star(star), ErrorKind::kPrecondition, "multiset is not a star");
  return star_size_unchecked(star);
}

IntervalMinimum Universe::lambda_interval(const Separation& lo,
                                          const Separation& hi) const {
  require(leq(lo, hi), ErrorKind::kPrecondition,
          "interval bounds are not comparable: " + lo.to_string() + " vs " +
              hi.to_string());
  IntervalMinimum best{std::numeric_limits<int>::max(), lo};
  for_each_in_interval(lo, hi, rank_.known_monotone(),
                       [&](const Separation& s) {
                         const int v = order(s);
                         if (v < best.value ||
                             (v == best.value && s < best.witness)) {
                           best = {v, s};
                         }
                       });
  require(best.value != std::numeric_limits<int>::max(),
          ErrorKind::kPrecondition, "interval contains no separation");
  return best;
}

std::vector<Separation> Universe::interval_minimizers(const Separation& lo,
                                                      const Separation& hi,
                                                      int* value) const {
  require(leq(lo, hi), ErrorKind::kPrecondition,
          "interval bounds are not comparable");
  // With cardinality rank every extra right element raises the order, so
  // only minimal right sides can minimize.
  const bool minimal_only = cardinality_order();
  int best = std::numeric_limits<int>::max();
  std::vector<Separation> out;
  for_each_in_interval(lo, hi, minimal_only, [&](const Separation& s) {
    const int v = order(s);
    if (v < best) {
      best = v;
      out.clear();
    }
    if (v == best) out.push_back(s);
  });
  std::sort(out.begin(), out.end());
  if (value != nullptr) *value = best;
  return out;
}

bool Universe::is_grounded_sample(
    std::span<const std::pair<Separation, Separation>> pairs,
    std::pair<Separation, Separation>* counterexample) const {
  for (const auto& [s1, s2] : pairs) {
    require(leq(invert(s1), s2), ErrorKind::kPrecondition,
            "grounded check needs (B,A) <= (C,D)");
    const Separation corner{s1.left | s2.left, s1.right & s2.right};
    if (order(corner) > order(s2)) {
      if (counterexample != nullptr) *counterexample = {s1, s2};
      return false;
    }
  }
  return true;
}

bool Universe::is_grounded_exhaustive(
    std::pair<Separation, Separation>* counterexample, int cap) const {
  const auto all = enumerate(cap);
  std::vector<std::pair<Separation, Separation>> pairs;
  for (const auto& a : all)
    for (const auto& c : all)
      if (leq(invert(a), c)) pairs.emplace_back(a, c);
  return is_grounded_sample(pairs, counterexample);
}

}  // namespace sepsys

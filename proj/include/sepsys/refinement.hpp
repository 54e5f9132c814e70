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

#ifndef SEPSYS_REFINEMENT_HPP_
#define SEPSYS_REFINEMENT_HPP_

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sepsys/family.hpp"
#include "sepsys/shift.hpp"
#include "sepsys/stree.hpp"
#include "sepsys/universe.hpp"

namespace sepsys {

enum class RefineMode { kLinked, kLean, kCombined };

const char* to_string(RefineMode mode);

/// Level-wise potential. For each level p from `top` down to 0 the profile
/// stores, in order:
///   linked:   e_p, e_p - c_p      (edges of order >= p, their components)
///   lean:     v_p, v_p - c_p      (vertices of star size >= p, components of
///                                  the induced subforest)
///   combined: the linked pair followed by the lean pair.
/// Smaller is better, lexicographically from the top level down.
struct PotentialProfile {
  RefineMode mode = RefineMode::kLinked;
  int top = 0;
  std::vector<int> values;

  int per_level() const { return mode == RefineMode::kCombined ? 4 : 2; }
};

PotentialProfile potential(const STree& tree, const Universe& u,
                           RefineMode mode, int top);

/// Negative if a ≺ b, zero if equal, positive otherwise. Profiles must share
/// mode and top.
int compare(const PotentialProfile& a, const PotentialProfile& b);

/// Memoized λ(lo, hi). Uses the flow fast path on graph universes with the
/// cardinality order, exhaustive interval search otherwise.
class LambdaCache {
 public:
  explicit LambdaCache(const Universe& u) : u_(&u) {}
  int operator()(const Separation& lo, const Separation& hi);
  std::size_t size() const { return memo_.size(); }

 private:
  const Universe* u_;
  std::unordered_map<std::pair<Separation, Separation>, int,
                     SeparationPairHash>
      memo_;
};

inline constexpr int kNoPath = std::numeric_limits<int>::max();

struct LinkedViolation {
  Arc e = -1;
  Arc f = -1;
  int ell = 0;
  Separation witness;
  int path_min = 0;
};

struct LeanViolation {
  int t = -1;
  int t2 = -1;
  Separation add;   // addable at t
  Separation add2;  // addable at t2
  int ell = 0;
  int path_min = kNoPath;  // kNoPath when t == t2
};

std::optional<LinkedViolation> find_linked_violation(const STree& tree,
                                                     const Universe& u,
                                                     LambdaCache* cache =
                                                         nullptr);

/// Candidate lists are interned by star so repeated stars cost nothing.
class LeanSearch {
 public:
  LeanSearch(const StarFamily& f, const Universe& u, LambdaCache& cache,
             AddableOptions options = {})
      : f_(&f), u_(&u), lambda_(&cache), options_(options) {}

  std::optional<LeanViolation> find(const STree& tree);

 private:
  int intern(const std::vector<Separation>& star);
  int deficiency(int i, int j);

  const StarFamily* f_;
  const Universe* u_;
  LambdaCache* lambda_;
  AddableOptions options_;
  std::map<std::vector<Separation>, int> ids_;
  std::vector<std::vector<Separation>> lists_;
  std::map<std::pair<int, int>, int> deficiency_;
};

std::optional<LeanViolation> find_lean_violation(
    const STree& tree, const StarFamily& f, const Universe& u,
    const AddableOptions& options = {});

/// Among the minimizers of the order on [lo, hi], one nested with the most
/// edge labels of the tree; ties go to the canonically smallest.
Separation choose_shift_separation(const Separation& lo, const Separation& hi,
                                   const STree& tree, const Universe& u);

struct GlueResult {
  STree tree;
  std::vector<int> from_first;        // vertex of t1 -> vertex, or -1
  std::vector<int> from_second;       // vertex of t2 -> vertex, or -1
  std::vector<int> edge_from_first;   // edge of t1 -> edge, or -1
  std::vector<int> edge_from_second;  // edge of t2 -> edge, or -1
  int glued_edge = -1;
};

/// Drops the leaf tail(e1) of t1 and the leaf head(f2) of t2, and joins
/// tail(f2) to head(e1) by an edge whose arc towards head(e1) carries
/// α1(e1) = α2(f2).
GlueResult glue_linked(const STree& t1, Arc e1, const STree& t2, Arc f2);

struct TraceRecord {
  std::uint64_t iteration = 0;
  std::string step;  // "linked" or "lean"
  int e = -1, f = -1;
  int t = -1, t2 = -1;
  Separation add, add2;
  int ell = 0;
  Separation chosen;
  std::vector<int> potential_before;
  std::vector<int> potential_after;
  int vertices_after = 0;
  bool decreased = true;
};

struct RefineOptions {
  AddableOptions addable;
  bool trace = false;
  /// Zero selects 10·k·|E|²+1000 for the input tree.
  std::uint64_t iteration_cap = 0;
};

struct RefineResult {
  STree tree;
  std::uint64_t iterations = 0;
  std::uint64_t linked_steps = 0;
  std::uint64_t lean_steps = 0;
  std::vector<TraceRecord> trace;
  /// Combined mode only: iterations whose combined profile did not drop.
  std::vector<std::string> combined_failures;
};

/// One step of each kind; exposed for tests. Both check their runtime
/// invariants and throw kInternalInvariant when one fails.
STree linked_step(const STree& tree, const LinkedViolation& v,
                  const StarFamily& f, const Universe& u,
                  Separation* chosen = nullptr);
STree lean_step(const STree& tree, const LeanViolation& v, const StarFamily& f,
                const Universe& u, Separation* chosen = nullptr);

RefineResult refine_to_linked(const STree& tree, const StarFamily& f,
                              const Universe& u,
                              const RefineOptions& options = {});
RefineResult refine_to_lean(const STree& tree, const StarFamily& f,
                            const Universe& u,
                            const RefineOptions& options = {});
RefineResult refine_combined(const STree& tree, const StarFamily& f,
                             const Universe& u,
                             const RefineOptions& options = {});

}  // namespace sepsys

#endif  // SEPSYS_REFINEMENT_HPP_

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

#ifndef SEPSYS_RANK_HPP_
#define SEPSYS_RANK_HPP_

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sepsys/graph.hpp"
#include "sepsys/subset.hpp"

namespace sepsys {

enum class RankKind { kCardinality, kGraphic, kUniform, kLinear, kUserTable };

const char* to_string(RankKind kind);

/// A set function r : 2^V -> Z used to induce the order |A,B| =
/// r(A) + r(B) - r(V).
///
/// Values are memoized. For ground sets of at most kEagerTableLimit
/// elements the full table is computed at construction, so evaluation is a
/// lock-free read; larger ground sets use a mutex-guarded cache. Copies
/// share the cache.
class RankOracle {
 public:
  static constexpr int kEagerTableLimit = 16;

  RankOracle(RankKind kind, int ground_size, std::function<int(Subset)> eval);

  int operator()(Subset x) const;

  RankKind kind() const { return kind_; }
  int ground_size() const { return ground_size_; }
  /// True for the kinds that are non-decreasing by construction.
  bool known_monotone() const { return kind_ != RankKind::kUserTable; }

 private:
  struct Cache;

  RankKind kind_;
  int ground_size_;
  std::shared_ptr<Cache> cache_;
};

RankOracle cardinality_rank(int ground_size);
/// Cycle-matroid rank: |V(X)| minus the number of components of (V(X), X),
/// where elements index g.edges().
RankOracle graphic_rank(const Graph& g);
RankOracle uniform_rank(int rank, int ground_size);
/// Rank of the selected columns of `matrix` over GF(prime), prime <= 7.
/// Entries must already be reduced into [0, prime).
RankOracle linear_rank(const std::vector<std::vector<int>>& matrix, int prime);
/// values[x.bits()] is r(x); values.size() must be 2^ground_size.
RankOracle user_table_rank(int ground_size, std::vector<int> values);

struct RankCheckReport {
  enum class Violation { kNone, kNegative, kNotMonotone, kNotSubmodular };

  Violation violation = Violation::kNone;
  Subset x;  // witness sets
  Subset y;
  std::uint64_t checked = 0;
  bool sampled = false;

  bool valid() const { return violation == Violation::kNone; }
  std::string describe() const;
};

struct RankCheckOptions {
  int exhaustive_cap = 16;
  bool allow_sampling = false;
  std::uint64_t samples = 200000;
  std::uint64_t seed = 1;
};

/// Validates non-negativity, monotonicity and submodularity. Exhaustive up
/// to the cap (local-exchange forms, which are equivalent to the global
/// ones); past the cap requires allow_sampling.
RankCheckReport check_rank_oracle(const RankOracle& r,
                                  const RankCheckOptions& options = {});

}  // namespace sepsys

#endif  // SEPSYS_RANK_HPP_

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

#ifndef SEPSYS_FLOW_HPP_
#define SEPSYS_FLOW_HPP_

#include "sepsys/graph.hpp"
#include "sepsys/separation.hpp"
#include "sepsys/subset.hpp"

namespace sepsys {

struct MengerResult {
  int count = 0;
  /// A minimum S-T vertex cut inside the allowed vertices; |cut| == count.
  Subset cut;
};

/// Maximum number of vertex-disjoint S-T paths using only vertices of
/// `within`. A vertex of S ∩ T is a trivial path. S and T must be nonempty
/// subsets of `within`.
MengerResult menger(const Graph& g, Subset s, Subset t, Subset within);
inline MengerResult menger(const Graph& g, Subset s, Subset t) {
  return menger(g, s, t, g.vertices());
}

/// λ(lo, hi) for the separations of g under the cardinality order: the
/// number of disjoint (lo.left ∩ lo.right)-(hi.left ∩ hi.right) paths in
/// G[lo.right ∩ hi.left]. Requires lo <= hi.
int lambda_flow(const Graph& g, const Separation& lo, const Separation& hi);

}  // namespace sepsys

#endif  // SEPSYS_FLOW_HPP_

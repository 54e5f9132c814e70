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

// Shorthand for building subsets and separations in tests.

#ifndef SEPSYS_TESTS_HELPERS_HPP_
#define SEPSYS_TESTS_HELPERS_HPP_

#include <initializer_list>
#include <vector>

#include "sepsys/graph.hpp"
#include "sepsys/instances.hpp"
#include "sepsys/separation.hpp"
#include "sepsys/subset.hpp"

namespace sepsys::test {

inline Subset set(std::initializer_list<int> elements) {
  return Subset::of(elements);
}

inline Separation sep(std::initializer_list<int> left,
                      std::initializer_list<int> right) {
  return Separation{Subset::of(left), Subset::of(right)};
}

inline Graph p3() { return Graph::path(3); }
inline Graph c4() { return Graph::cycle(4); }
inline Graph k4() { return Graph::complete(4); }

// Element indices of M(K3): edges are sorted, so 01 -> 0, 02 -> 1, 12 -> 2.
inline constexpr int e01 = 0;
inline constexpr int e02 = 1;
inline constexpr int e12 = 2;

inline GraphTreeDecomposition decomposition(
    std::vector<std::pair<int, int>> edges, std::vector<Subset> bags) {
  GraphTreeDecomposition d;
  d.tree.vertex_count = static_cast<int>(bags.size());
  d.tree.edges = std::move(edges);
  d.bags = std::move(bags);
  return d;
}

inline std::vector<int> identity(int n) {
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  return order;
}

}  // namespace sepsys::test

#endif  // SEPSYS_TESTS_HELPERS_HPP_

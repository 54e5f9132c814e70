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

#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "sepsys/corpus.hpp"

using namespace sepsys;
using namespace sepsys::test;

// Graph counts up to isomorphism: OEIS A000088 and A001349.
TEST_CASE("isomorph-free corpus sizes") {
  const std::size_t all[] = {1, 2, 4, 11, 34, 156, 1044};
  const std::size_t connected[] = {1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n) {
    CHECK(all_graphs(n).size() == all[n - 1]);
    CHECK(connected_graphs(n).size() == connected[n - 1]);
  }
}

TEST_CASE("canonical codes ignore relabelling") {
  const Graph a(4, {{0, 1}, {1, 2}, {2, 3}, {0, 2}});
  const Graph b(4, {{3, 2}, {2, 1}, {1, 0}, {3, 1}});
  const Graph c(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  CHECK(canonical_code(a) == canonical_code(b));
  CHECK(canonical_code(a) != canonical_code(c));
  std::set<std::uint64_t> codes;
  for (const Graph& g : all_graphs(5)) codes.insert(canonical_code(g));
  CHECK(codes.size() == 34);
}

TEST_CASE("random corpora are connected and reproducible") {
  const auto a = random_connected_graphs(8, 4, 7);
  const auto b = random_connected_graphs(8, 4, 7);
  REQUIRE(a.size() == 4);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].connected());
    CHECK(a[i].edges() == b[i].edges());
  }
  const auto m = matroid_corpus(6, 5, 1);
  std::size_t graphic = 0;
  for (int n = 2; n <= 7; ++n)
    for (const Graph& g : connected_graphs(n)) graphic += g.edge_count() <= 6;
  CHECK(m.size() == graphic + 2 + 5);
  int random = 0, uniform = 0;
  for (const auto& nm : m) {
    CHECK(nm.matroid.size() <= 6);
    if (nm.matroid.kind() == RankKind::kLinear) ++random;
    if (nm.matroid.kind() == RankKind::kUniform) ++uniform;
  }
  CHECK(random == 5);
  CHECK(uniform == 2);
}

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

#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "sepsys/corpus.hpp"
#include "sepsys/error.hpp"
#include "sepsys/family.hpp"
#include "sepsys/instances.hpp"
#include "sepsys/oracles.hpp"
#include "sepsys/stree.hpp"

using namespace sepsys;
using namespace sepsys::test;

TEST_CASE("graph separation universe") {
  const Universe p = Universe::of_graph(p3());
  CHECK(p.contains(sep({0, 1}, {1, 2})));
  CHECK_FALSE(p.contains(sep({0}, {1, 2})));
  CHECK(p.contains(sep({0, 1, 2}, {0, 1, 2})));
  const Universe k3 = Universe::of_graph(Graph::complete(3));
  CHECK_FALSE(k3.contains(sep({0, 1}, {1, 2})));
  CHECK(k3.contains(sep({0, 1, 2}, {0, 1, 2})));
  // Separations of P3: every (A,B) covering V with 0 and 2 not split by 1.
  CHECK(p.enumerate().size() == 17);
}

TEST_CASE("matroid rank oracles") {
  const RankOracle g = graphic_rank(Graph::complete(3));
  CHECK(g(set({0, 1, 2})) == 2);
  CHECK(g(set({0})) == 1);
  CHECK(g(Subset{}) == 0);
  CHECK(uniform_rank(1, 3)(set({0, 1})) == 1);
  const RankOracle l = linear_rank({{1, 0, 1}, {0, 1, 1}}, 2);
  CHECK(l(set({0, 1, 2})) == 2);
  CHECK(l(set({2})) == 1);
  CHECK(check_rank_oracle(l).valid());
  CHECK(linear_rank({{1, 0, 1}, {0, 1, 1}}, 3)(set({0, 1, 2})) == 2);
  CHECK(linear_rank({{1, 1, 1}, {0, 1, 2}}, 3)(set({1, 2})) == 2);
  CHECK_THROWS_AS(linear_rank({{1, 2}}, 2), Error);
  CHECK_THROWS_AS(linear_rank({{1, 0}, {1}}, 2), Error);
  CHECK_THROWS_AS(linear_rank({{1}}, 4), Error);
  CHECK_THROWS_AS(uniform_rank(4, 3), Error);
}

TEST_CASE("graph normalization") {
  const Graph g(3, {{0, 1}, {1, 0}, {1, 1}, {2, 1}});
  CHECK(g.edge_count() == 2);
  CHECK_THROWS_AS(Graph(2, {{0, 2}}), Error);
  CHECK_THROWS_AS(Graph(0, {}), Error);
}

TEST_CASE("s-tree to tree decomposition") {
  const Universe u = Universe::of_graph(p3());
  const STree path = treedecomp_to_stree(
      p3(), decomposition({{0, 1}, {1, 2}}, {set({0, 1}), set({1}), set({1, 2})}));
  const auto d = stree_to_treedecomp(path, u);
  CHECK(d.bags == std::vector<Subset>{set({0, 1}), set({1}), set({1, 2})});

  STree edge(2);
  edge.add_edge(0, 1, sep({0, 1}, {1, 2}));
  CHECK(stree_to_treedecomp(edge, u).bags ==
        std::vector<Subset>{set({0, 1}), set({1, 2})});

  const STree single(1);
  CHECK(stree_to_treedecomp(single, u).bags ==
        std::vector<Subset>{set({0, 1, 2})});
}

TEST_CASE("tree decomposition to s-tree") {
  const STree p = treedecomp_to_stree(
      p3(), decomposition({{0, 1}}, {set({0, 1}), set({1, 2})}));
  REQUIRE(p.edge_count() == 1);
  CHECK(p.alpha(0) == sep({0, 1}, {1, 2}));

  const STree one =
      treedecomp_to_stree(p3(), decomposition({}, {set({0, 1, 2})}));
  CHECK(one.vertex_count() == 1);
  CHECK(one.edge_count() == 0);

  const STree c = treedecomp_to_stree(
      c4(), decomposition({{0, 1}}, {set({0, 1, 2}), set({0, 2, 3})}));
  CHECK(c.alpha(0) == sep({0, 1, 2}, {0, 2, 3}));

  CHECK_THROWS_AS(
      treedecomp_to_stree(p3(), decomposition({}, {set({0, 1})})), Error);
}

TEST_CASE("decomposition validity") {
  CHECK(validate_decomposition(p3(), decomposition({{0, 1}}, {set({0, 1}), set({1, 2})})).ok);
  CHECK_FALSE(validate_decomposition(p3(), decomposition({{0, 1}}, {set({0, 1}), set({2})})).ok);
  CHECK_FALSE(validate_decomposition(
                  p3(), decomposition({{0, 1}, {1, 2}},
                                      {set({0, 1}), set({2}), set({1, 2})}))
                  .ok);
  CHECK_FALSE(validate_decomposition(p3(), decomposition({{0, 1}}, {set({0, 1, 2})})).ok);
}

TEST_CASE("matroid decompositions") {
  const Matroid k3 = Matroid::graphic(Graph::complete(3));
  MatroidTreeDecomposition one;
  one.tau = {0, 0, 0};
  const STree t1 = matroid_decomp_to_stree(one, k3);
  CHECK(t1.vertex_count() == 1);
  CHECK(matroid_width(k3, one) == 2);

  MatroidTreeDecomposition two;
  two.tree.vertex_count = 2;
  two.tree.edges = {{0, 1}};
  two.tau = {0, 1, 1};
  const STree t2 = matroid_decomp_to_stree(two, k3);
  CHECK(t2.alpha(0) == sep({e01}, {e02, e12}));
  CHECK(matroid_bag_width(k3, two, 0) == 1);
  CHECK(matroid_bag_width(k3, two, 1) == 2);

  MatroidTreeDecomposition gap;
  gap.tree.vertex_count = 3;
  gap.tree.edges = {{0, 1}, {1, 2}};
  gap.tau = {0, 2, 2};
  CHECK(validate_decomposition(k3, gap).ok);
  CHECK(matroid_bag_width(k3, gap, 1) == 1 + 2 - 2);

  MatroidTreeDecomposition bad = two;
  bad.tau = {0, 1};
  CHECK_FALSE(validate_decomposition(k3, bad).ok);
}

// Bag width equals star size, and both conversions are inverse to each
// other on the trees they produce.
TEST_CASE("conversion round trips on small graphs") {
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& g : connected_graphs(n)) {
      const Universe u = Universe::of_graph(g);
      const auto d = elimination_decomposition(g, identity(n));
      REQUIRE(validate_decomposition(g, d).ok);
      const STree t = treedecomp_to_stree(g, d);
      CHECK(stree_to_treedecomp(t, u) == d);
      CHECK(treedecomp_to_stree(g, stree_to_treedecomp(t, u)) == t);
      const int w = d.width();
      CHECK(validate_stree(t, u).max_star_size == w + 1);
      CHECK(check_over_family(t, StarFamily::fk(w + 2), u).ok);
      CHECK_FALSE(check_over_family(t, StarFamily::fk(w + 1), u).ok);

      const auto sd = subdivide(d);
      CHECK(validate_decomposition(g, sd).ok);
      CHECK(sd.width() == w);
    }
  }
}

TEST_CASE("matroid round trips") {
  for (int n = 2; n <= 5; ++n) {
    for (const Graph& g : connected_graphs(n)) {
      if (g.edge_count() > 7) continue;
      const Matroid m = Matroid::graphic(g);
      const Universe u = m.universe();
      const auto d = optimal_matroid_decomposition(m);
      const STree t = matroid_decomp_to_stree(d, m);
      CHECK(matroid_decomp_to_stree(stree_to_matroid_decomp(t, m), m) == t);
      int widest = 0;
      for (int v = 0; v < d.tree.vertex_count; ++v) {
        CHECK(matroid_bag_width(m, d, v) == u.star_size(t.star(v)));
        widest = std::max(widest, matroid_bag_width(m, d, v));
      }
      CHECK(widest == matroid_width(m, d));
    }
  }
}

TEST_CASE("elimination and path decompositions are valid") {
  for (const Graph& g : connected_graphs(5)) {
    CHECK(validate_decomposition(g, elimination_decomposition(g, identity(5))).ok);
    CHECK(validate_decomposition(g, path_decomposition(g, identity(5))).ok);
    CHECK(validate_decomposition(
              g, elimination_decomposition(g, optimal_elimination_order(g)))
              .ok);
  }
}

TEST_CASE("caterpillar branch trees") {
  for (int n = 2; n <= 5; ++n) {
    for (const Graph& g : all_graphs(n)) {
      if (g.edge_count() < 2) continue;
      const Universe u = Universe::of_graph(g);
      const STree t = caterpillar_branch_stree(g);
      const auto rep = validate_stree(t, u);
      CHECK(rep.valid());
      bool over = false;
      for (int k = 1; k <= n + 2 && !over; ++k)
        over = check_over_family(t, StarFamily::tk(k), u).ok;
      CHECK(over);
      CHECK(branch_width_of(t, u) >= brute_force_branchwidth(g));
    }
  }
}

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
#include "sepsys/instances.hpp"
#include "sepsys/rank.hpp"
#include "sepsys/universe.hpp"

using namespace sepsys;
using namespace sepsys::test;

TEST_CASE("invert swaps the sides") {
  CHECK(invert(sep({0, 1}, {1, 2})) == sep({1, 2}, {0, 1}));
  CHECK(invert(sep({}, {0, 1, 2})) == sep({0, 1, 2}, {}));
  CHECK(invert(sep({e01}, {e12, e02})) == sep({e12, e02}, {e01}));
  const Separation s = sep({0}, {0, 1});
  CHECK(invert(invert(s)) == s);
}

TEST_CASE("leq compares left up and right down") {
  CHECK(leq(sep({0}, {0, 1, 2}), sep({0, 1}, {1, 2})));
  CHECK_FALSE(leq(sep({0, 1}, {1, 2}), sep({0}, {0, 1, 2})));
  const Separation s = sep({0, 1}, {1, 2});
  CHECK(leq(s, s));
}

TEST_CASE("join and meet are the corners") {
  const Separation a = sep({0}, {0, 1, 2});
  const Separation b = sep({0, 1}, {1, 2});
  CHECK(join(a, b) == b);
  CHECK(meet(a, b) == a);

  const Universe u = Universe::of_graph(c4());
  const Separation x = sep({0, 1, 2}, {2, 3, 0});
  const Separation y = sep({1, 2, 3}, {3, 0, 1});
  const Separation j = join(x, y);
  CHECK(j == sep({0, 1, 2, 3}, {0, 3}));
  CHECK(u.contains(j));
}

TEST_CASE("nestedness") {
  const Separation s = sep({0, 1}, {1, 2});
  CHECK(nested(s, invert(s)));
  CHECK(nested(sep({}, {0, 1, 2}), s));
  CHECK_FALSE(nested(sep({0, 1, 2}, {0, 2, 3}), sep({1, 2, 3}, {0, 1, 3})));
}

TEST_CASE("order function") {
  const Universe p = Universe::of_graph(p3());
  CHECK(p.order(sep({0, 1}, {1, 2})) == 1);
  CHECK(p.order(sep({0, 1, 2}, {0, 1, 2})) == 3);

  const Matroid k3 = Matroid::graphic(Graph::complete(3));
  const Universe m = k3.universe();
  CHECK(m.order(sep({e01}, {e12, e02})) == 1);
  CHECK(m.order(sep({0, 1, 2}, {0, 1, 2})) == k3.rank_of_ground());
}

TEST_CASE("stars") {
  const std::vector<Separation> two = {sep({0}, {0, 1, 2}),
                                       sep({2}, {0, 1, 2})};
  CHECK(is_star(two));
  const std::vector<Separation> twice = {sep({0, 1}, {1, 2}),
                                         sep({0, 1}, {1, 2})};
  CHECK_FALSE(is_star(twice));
  const std::vector<Separation> one = {sep({0, 1}, {1, 2})};
  CHECK(is_star(one));
}

TEST_CASE("star sizes") {
  const Universe p = Universe::of_graph(p3());
  const std::vector<Separation> two = {sep({0}, {0, 1, 2}),
                                       sep({2}, {0, 1, 2})};
  CHECK(p.star_size(two) == 3);
  const std::vector<Separation> one = {sep({0, 1}, {1, 2})};
  CHECK(p.star_size(one) == 2);
  CHECK(p.star_size(std::vector<Separation>{}) == 3);
  const std::vector<Separation> twice = {sep({0, 1}, {1, 2}),
                                         sep({0, 1}, {1, 2})};
  CHECK_THROWS_AS(p.star_size(twice), Error);

  const Universe m = Matroid::graphic(Graph::complete(3)).universe();
  const std::vector<Separation> sigma = {sep({e01}, {e12, e02}),
                                         sep({e12}, {e01, e02})};
  CHECK(m.star_size(sigma) == 2);
}

TEST_CASE("interval connectivity") {
  const Universe p = Universe::of_graph(p3());
  const Separation lo = sep({0}, {0, 1, 2});
  const Separation hi = sep({0, 1, 2}, {2});
  const auto min = p.lambda_interval(lo, hi);
  CHECK(min.value == 1);
  CHECK(leq(lo, min.witness));
  CHECK(leq(min.witness, hi));
  CHECK(p.order(min.witness) == 1);
  const auto all = p.interval_minimizers(lo, hi);
  CHECK(std::find(all.begin(), all.end(), sep({0, 1}, {1, 2})) != all.end());

  const Separation s = sep({0, 1}, {1, 2});
  const auto point = p.lambda_interval(s, s);
  CHECK(point.value == 1);
  CHECK(point.witness == s);

  const Universe m = Matroid::graphic(Graph::complete(3)).universe();
  CHECK(m.lambda_interval(sep({e01}, {e02, e12}),
                          invert(sep({e12}, {e01, e02})))
            .value == 1);
}

TEST_CASE("groundedness") {
  const Universe card = Universe::of_graph(c4());
  CHECK(card.is_grounded_exhaustive());
  const Universe bip = Universe::bipartitions(uniform_rank(2, 4));
  CHECK(bip.is_grounded_exhaustive());

  // A non-monotone table on two elements over sep(V) that is not grounded.
  bool found = false;
  const Graph empty(2, {});
  for (int code = 0; code < 81 && !found; ++code) {
    std::vector<int> values(4);
    for (int i = 0, c = code; i < 4; ++i, c /= 3) values[i] = c % 3;
    const Universe u = Universe::of_graph(empty, user_table_rank(2, values));
    std::pair<Separation, Separation> cex;
    if (u.is_grounded_exhaustive(&cex)) continue;
    found = true;
    const auto [s1, s2] = cex;
    CHECK(leq(invert(s1), s2));
    CHECK(u.order(Separation{s1.left | s2.left, s1.right & s2.right}) >
          u.order(s2));
  }
  CHECK(found);
}

TEST_CASE("rank oracle validation") {
  CHECK(check_rank_oracle(cardinality_rank(4)).valid());
  CHECK(check_rank_oracle(graphic_rank(Graph::complete(3))).valid());
  const auto bad = check_rank_oracle(user_table_rank(2, {0, 2, 0, 1}));
  CHECK(bad.violation == RankCheckReport::Violation::kNotMonotone);
  CHECK(bad.x == set({0}));
  CHECK(bad.y == set({0, 1}));
  CHECK_THROWS_AS(check_rank_oracle(cardinality_rank(20)), Error);
}

// Lattice, involution and submodularity laws over every graph on at most
// five vertices.
TEST_CASE("separation laws on small graphs") {
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& g : all_graphs(n)) {
      const Universe u = Universe::of_graph(g);
      const auto all = u.enumerate();
      for (const auto& a : all) {
        CHECK(u.order(a) == u.order(invert(a)));
        CHECK(u.order(a) == (a.left & a.right).count());
        for (const auto& b : all) {
          CHECK(leq(a, b) == leq(invert(b), invert(a)));
          const Separation j = join(a, b);
          const Separation m = meet(a, b);
          REQUIRE(u.contains(j));
          REQUIRE(u.contains(m));
          CHECK(leq(a, j));
          CHECK(leq(b, j));
          CHECK(leq(m, a));
          CHECK(leq(m, b));
          CHECK(u.order(j) + u.order(m) <= u.order(a) + u.order(b));
        }
      }
    }
  }
}

TEST_CASE("supremum and infimum are least and greatest bounds") {
  const Universe u = Universe::of_graph(c4());
  const auto all = u.enumerate();
  for (const auto& a : all)
    for (const auto& b : all)
      for (const auto& c : all) {
        if (leq(a, c) && leq(b, c)) CHECK(leq(join(a, b), c));
        if (leq(c, a) && leq(c, b)) CHECK(leq(c, meet(a, b)));
      }
}

TEST_CASE("interval minimum is a lower bound attained by its witness") {
  for (const Graph& g : connected_graphs(4)) {
    const Universe u = Universe::of_graph(g);
    const auto all = u.enumerate();
    for (const auto& lo : all)
      for (const auto& hi : all) {
        if (!leq(lo, hi)) continue;
        const auto min = u.lambda_interval(lo, hi);
        CHECK(u.order(min.witness) == min.value);
        for (const auto& s : all)
          if (leq(lo, s) && leq(s, hi)) CHECK(min.value <= u.order(s));
      }
  }
}

// Nesting with two separations carries over to their corners when those two
// cross; without that hypothesis a counterexample exists on two elements.
TEST_CASE("corner nesting") {
  for (int n = 1; n <= 4; ++n) {
    for (const Graph& g : all_graphs(n)) {
      const auto all = Universe::of_graph(g).enumerate();
      for (const auto& a : all)
        for (const auto& c : all)
          for (const auto& e : all) {
            if (!nested(a, c) || !nested(a, e) || nested(c, e)) continue;
            CHECK(nested(a, join(c, e)));
            CHECK(nested(a, meet(c, e)));
            CHECK(nested(a, join(c, invert(e))));
            CHECK(nested(a, meet(c, invert(e))));
          }
    }
  }

  const Separation a = sep({0}, {1});
  const Separation c = sep({0}, {0, 1});
  const Separation e = sep({1}, {0, 1});
  CHECK(nested(a, c));
  CHECK(nested(a, e));
  CHECK(nested(c, e));
  CHECK(join(c, e) == sep({0, 1}, {0, 1}));
  CHECK_FALSE(nested(a, join(c, e)));
}

// For chains Z_0, Z_1, Z_2 with Z*_i ∪ Z_{i+1} = V, where Z*_i is the meet
// of Z_0..Z_i: Σ r(Z_i ∩ X) >= r(Z*_n ∩ X) + n·r(X).
TEST_CASE("chain inequality for submodular ranks") {
  const Matroid m = Matroid::graphic(Graph::complete(4));
  const RankOracle& r = m.rank();
  const Subset ground = GroundSet(m.size()).all();
  std::uint64_t checked = 0;
  for_each_subset(ground, [&](Subset z0) {
    for_each_subset(z0, [&](Subset extra1) {
      const Subset z1 = (ground - z0) | extra1;
      const Subset p1 = z0 & z1;
      for_each_subset(p1, [&](Subset extra2) {
        const Subset z2 = (ground - p1) | extra2;
        const Subset p2 = p1 & z2;
        for (std::uint64_t xb : {0x0FULL, 0x33ULL, 0x2AULL, 0x3FULL}) {
          const Subset x(xb);
          CHECK(r(z0 & x) + r(z1 & x) + r(z2 & x) >= r(p2 & x) + 2 * r(x));
          ++checked;
        }
      });
    });
  });
  CHECK(checked > 0);
}

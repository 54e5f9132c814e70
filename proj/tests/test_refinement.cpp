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
#include "sepsys/family.hpp"
#include "sepsys/instances.hpp"
#include "sepsys/oracles.hpp"
#include "sepsys/refinement.hpp"

using namespace sepsys;
using namespace sepsys::test;

namespace {

STree p3_optimal() {
  return treedecomp_to_stree(
      p3(), decomposition({{0, 1}}, {set({0, 1}), set({1, 2})}));
}

STree single_bag(const Graph& g) {
  return treedecomp_to_stree(g, decomposition({}, {g.vertices()}));
}

// A path of three edges on P4, every label of order 2, whose end labels are
// separated by ({0,1},{1,2,3}) of order 1.
STree unlinked_p4() {
  STree t(4);
  t.add_edge(0, 1, sep({0, 1}, {0, 1, 2, 3}));
  t.add_edge(1, 2, sep({0, 1, 2}, {1, 2, 3}));
  t.add_edge(2, 3, sep({0, 1, 2, 3}, {2, 3}));
  return t;
}

int max_order(const STree& t, const Universe& u) {
  return validate_stree(t, u).max_order;
}

}  // namespace

TEST_CASE("potential profiles") {
  const Universe u = Universe::of_graph(p3());
  STree edge(2);
  edge.add_edge(0, 1, sep({0, 1}, {1, 2}));
  CHECK(potential(edge, u, RefineMode::kLinked, 2).values ==
        std::vector<int>{0, 0, 1, 0, 1, 0});
  STree flipped(2);
  flipped.add_edge(1, 0, sep({1, 2}, {0, 1}));
  CHECK(compare(potential(edge, u, RefineMode::kLinked, 2),
                potential(flipped, u, RefineMode::kLinked, 2)) == 0);

  const Universe e4 = Universe::of_graph(Graph(4, {}));
  STree a(3), b(3);
  a.add_edge(0, 1, sep({0, 1}, {0, 1, 2, 3}));
  a.add_edge(1, 2, sep({0, 1, 2, 3}, {2, 3}));
  b.add_edge(0, 1, sep({0, 1}, {0, 1, 2, 3}));
  b.add_edge(1, 2, sep({0, 1, 2, 3}, {3}));
  const auto pa = potential(a, e4, RefineMode::kLinked, 3);
  const auto pb = potential(b, e4, RefineMode::kLinked, 3);
  CHECK(compare(pb, pa) < 0);
  CHECK(compare(pa, pb) > 0);
}

TEST_CASE("linked violations") {
  const Universe u = Universe::of_graph(p3());
  STree edge(2);
  edge.add_edge(0, 1, sep({0, 1}, {1, 2}));
  CHECK_FALSE(find_linked_violation(edge, u).has_value());
  CHECK_FALSE(find_linked_violation(p3_optimal(), u).has_value());

  const Universe u4 = Universe::of_graph(Graph::path(4));
  const auto v = find_linked_violation(unlinked_p4(), u4);
  REQUIRE(v.has_value());
  CHECK(v->ell == 1);
  CHECK(v->path_min == 2);
  CHECK(u4.order(v->witness) == 1);
}

TEST_CASE("lean violations") {
  const Universe u = Universe::of_graph(p3());
  CHECK_FALSE(
      find_lean_violation(p3_optimal(), StarFamily::fk(3), u).has_value());

  const auto v = find_lean_violation(single_bag(p3()), StarFamily::fk(4), u);
  REQUIRE(v.has_value());
  CHECK(v->t == v->t2);
  CHECK(v->path_min == kNoPath);
  CHECK(v->ell == 1);
  CHECK(v->ell < std::min(u.rank(v->add.left), u.rank(v->add2.left)));
  CHECK(leq(v->add, invert(v->add2)));

  // In M(K3) two disjoint sets cannot both have rank 2, so the single bag
  // is already lean.
  const Matroid k3 = Matroid::graphic(Graph::complete(3));
  MatroidTreeDecomposition one;
  one.tau = {0, 0, 0};
  const Universe mu = k3.universe();
  CHECK_FALSE(find_lean_violation(matroid_decomp_to_stree(one, k3),
                                  StarFamily::matroid_fk(3), mu)
                  .has_value());
  CHECK(verify_matroid_lean(k3, one).pass);

  // The single M(K4) bag: the driver and the verifier agree.
  const Matroid k4m = Matroid::graphic(k4());
  MatroidTreeDecomposition bag;
  bag.tau.assign(6, 0);
  const Universe ku = k4m.universe();
  const auto mv = find_lean_violation(matroid_decomp_to_stree(bag, k4m),
                                      StarFamily::matroid_fk(4), ku);
  CHECK(mv.has_value() == !verify_matroid_lean(k4m, bag).pass);
  if (mv) {
    CHECK(mv->ell < std::min(ku.rank(mv->add.left), ku.rank(mv->add2.left)));
    CHECK(ku.lambda_interval(mv->add, invert(mv->add2)).value == mv->ell);
  }
}

TEST_CASE("shift separation choice") {
  const Universe u4 = Universe::of_graph(Graph::path(4));
  const STree t = unlinked_p4();
  const Separation s = t.alpha(0);
  CHECK(choose_shift_separation(s, s, t, u4) == s);

  // A minimum-order tree label inside the interval is nested with every
  // label, so it is among the best choices.
  STree lab(3);
  lab.add_edge(0, 1, sep({0, 1}, {1, 2, 3}));
  lab.add_edge(1, 2, sep({0, 1, 2, 3}, {3}));
  const Separation chosen = choose_shift_separation(
      sep({0, 1}, {0, 1, 2, 3}), sep({0, 1, 2, 3}, {2, 3}), lab, u4);
  CHECK(chosen == sep({0, 1}, {1, 2, 3}));

  // The choice is a minimizer nested with as many labels as any minimizer.
  const Separation lo = t.alpha(0);
  const Separation hi = t.alpha(4);
  int value = 0;
  const auto mins = u4.interval_minimizers(lo, hi, &value);
  const Separation pick = choose_shift_separation(lo, hi, t, u4);
  CHECK(u4.order(pick) == value);
  auto nested_count = [&](const Separation& x) {
    int c = 0;
    for (int e = 0; e < t.edge_count(); ++e) c += nested(x, t.alpha(2 * e));
    return c;
  };
  for (const auto& m : mins) CHECK(nested_count(m) <= nested_count(pick));
}

TEST_CASE("glue") {
  STree a(2), b(2);
  a.add_edge(0, 1, sep({0, 1}, {1, 2}));
  b.add_edge(0, 1, sep({0, 1}, {1, 2}));
  const auto g = glue_linked(a, 0, b, 0);
  CHECK(g.tree.vertex_count() == 2);
  CHECK(g.tree.edge_count() == 1);
  CHECK(g.tree.alpha(2 * g.glued_edge) == sep({0, 1}, {1, 2}));

  const STree p = unlinked_p4();
  // Arc 5 runs from vertex 3 to 2; its tail is a leaf of p.
  STree single(2);
  single.add_edge(0, 1, p.alpha(5));
  const auto h = glue_linked(p, 5, single, 0);
  CHECK(canonical_form(h.tree) == canonical_form(p));

  STree other(2);
  other.add_edge(0, 1, sep({0}, {0, 1, 2}));
  CHECK_THROWS(glue_linked(a, 0, other, 0));
}

TEST_CASE("refine to linked") {
  const Universe u = Universe::of_graph(p3());
  const auto same = refine_to_linked(p3_optimal(), StarFamily::fk(3), u);
  CHECK(same.iterations == 0);
  CHECK(same.tree == p3_optimal());

  const Universe u4 = Universe::of_graph(Graph::path(4));
  const auto res = refine_to_linked(unlinked_p4(), StarFamily::fk(4), u4);
  CHECK(res.iterations > 0);
  CHECK_FALSE(find_linked_violation(res.tree, u4).has_value());
  CHECK(verify_linked_stree(res.tree, u4).pass);
  CHECK(max_order(res.tree, u4) <= 2);

  const Matroid k3 = Matroid::graphic(Graph::complete(3));
  MatroidTreeDecomposition path;
  path.tree.vertex_count = 3;
  path.tree.edges = {{0, 1}, {1, 2}};
  path.tau = {0, 1, 2};
  const Universe mu = k3.universe();
  const STree start = matroid_decomp_to_stree(path, k3);
  const auto mres = refine_to_linked(start, StarFamily::matroid_fk(3), mu);
  CHECK(verify_linked_stree(mres.tree, mu).pass);
  CHECK(max_order(mres.tree, mu) <= max_order(start, mu));
}

TEST_CASE("refine to lean") {
  const Universe u = Universe::of_graph(p3());
  const auto same = refine_to_lean(p3_optimal(), StarFamily::fk(3), u);
  CHECK(same.iterations == 0);

  const Universe c = Universe::of_graph(c4());
  const auto res = refine_to_lean(single_bag(c4()), StarFamily::fk(5), c);
  const auto d = stree_to_treedecomp(res.tree, c);
  CHECK(d.width() == 2);
  CHECK(validate_stree(res.tree, c).max_star_size == 3);
  CHECK(verify_lean_td(c4(), d).pass);

  const Matroid k4m = Matroid::graphic(k4());
  MatroidTreeDecomposition one;
  one.tau.assign(6, 0);
  const auto mres = refine_to_lean(matroid_decomp_to_stree(one, k4m),
                                   StarFamily::matroid_fk(4), k4m.universe());
  const auto md = stree_to_matroid_decomp(mres.tree, k4m);
  CHECK(matroid_width(k4m, md) == 3);
  CHECK(verify_matroid_lean(k4m, md).pass);
}

TEST_CASE("refine combined") {
  const Universe u = Universe::of_graph(p3());
  const auto same = refine_combined(p3_optimal(), StarFamily::fk(3), u);
  CHECK(same.iterations == 0);

  const Universe c = Universe::of_graph(c4());
  const auto res = refine_combined(single_bag(c4()), StarFamily::fk(5), c);
  const auto d = stree_to_treedecomp(res.tree, c);
  CHECK(verify_linked_td(c4(), d).pass);
  CHECK(verify_lean_td(c4(), d).pass);
  CHECK(verify_linked_stree(res.tree, c).pass);
  CHECK(res.combined_failures.empty());

  const auto p = refine_combined(single_bag(p3()), StarFamily::fk(4), u);
  const auto pd = stree_to_treedecomp(p.tree, u);
  CHECK(pd.width() == 1);
  CHECK(verify_linked_td(p3(), pd).pass);
  CHECK(verify_lean_td(p3(), pd).pass);
}

TEST_CASE("traces record strict potential decrease") {
  const Graph g(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}});
  const Universe u = Universe::of_graph(g);
  RefineOptions options;
  options.trace = true;
  for (auto mode : {RefineMode::kLinked, RefineMode::kLean}) {
    const STree start =
        treedecomp_to_stree(g, path_decomposition(g, identity(5)));
    const auto res = mode == RefineMode::kLinked
                         ? refine_to_linked(start, StarFamily::fk(6), u, options)
                         : refine_to_lean(single_bag(g), StarFamily::fk(6), u,
                                          options);
    CHECK(res.trace.size() == res.iterations);
    for (const auto& r : res.trace) {
      CHECK(r.decreased);
      CHECK(r.potential_after < r.potential_before);
    }
  }
}

// Refinement from an optimal elimination order keeps treewidth and yields
// linked and lean outputs; a second pass changes nothing.
TEST_CASE("refinement properties on small graphs") {
  for (int n = 2; n <= 5; ++n) {
    for (const Graph& g : connected_graphs(n)) {
      const Universe u = Universe::of_graph(g);
      const int tw = brute_force_treewidth(g);
      const STree start = treedecomp_to_stree(
          g, elimination_decomposition(g, optimal_elimination_order(g)));
      const auto f = StarFamily::fk(tw + 2);
      const auto lean = refine_to_lean(start, f, u);
      const auto d = stree_to_treedecomp(lean.tree, u);
      CHECK(d.width() == tw);
      CHECK(verify_lean_td(g, d).pass);
      const auto again = refine_to_lean(lean.tree, f, u);
      CHECK(again.iterations == 0);

      const auto linked = refine_to_linked(start, f, u);
      CHECK(verify_linked_stree(linked.tree, u).pass);
      CHECK(verify_linked_td(g, stree_to_treedecomp(linked.tree, u)).pass);
      CHECK(max_order(linked.tree, u) <= max_order(start, u));
      CHECK(refine_to_linked(linked.tree, f, u).iterations == 0);

      const auto bag = refine_to_lean(single_bag(g), StarFamily::fk(n + 1), u);
      const auto bd = stree_to_treedecomp(bag.tree, u);
      CHECK(verify_lean_td(g, bd).pass);
      CHECK(bd.width() == tw);
    }
  }
}

// Lean refinement from one bag stops at any lean tree, and a lean tree need
// not have minimum width: K_{3,3} plus an edge inside one side.
TEST_CASE("a lean output from one bag can exceed treewidth") {
  const Graph g(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5},
                    {2, 3}, {2, 4}, {2, 5}, {3, 5}});
  const Universe u = Universe::of_graph(g);
  REQUIRE(brute_force_treewidth(g) == 3);
  const auto res = refine_to_lean(single_bag(g), StarFamily::fk(7), u);
  const auto d = stree_to_treedecomp(res.tree, u);
  CHECK(verify_lean_td(g, d).pass);
  CHECK(d.width() == 4);

  const STree start = treedecomp_to_stree(
      g, elimination_decomposition(g, optimal_elimination_order(g)));
  const auto opt = refine_to_lean(start, StarFamily::fk(5), u);
  const auto od = stree_to_treedecomp(opt.tree, u);
  CHECK(od.width() == 3);
  CHECK(verify_lean_td(g, od).pass);
}

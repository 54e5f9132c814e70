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

#include <sstream>

#include "doctest.h"
#include "helpers.hpp"
#include "sepsys/corpus.hpp"
#include "sepsys/error.hpp"
#include "sepsys/io.hpp"

using namespace sepsys;
using namespace sepsys::test;

TEST_CASE("edge lists") {
  std::istringstream in("# a path\n3 2\n0 1\n\n1 2 # middle\n");
  const Graph g = read_edge_list(in);
  CHECK(g.vertex_count() == 3);
  CHECK(g.edges() == p3().edges());
  std::istringstream again(write_edge_list(g));
  CHECK(read_edge_list(again).edges() == g.edges());

  std::istringstream short_list("3 2\n0 1\n");
  CHECK_THROWS_AS(read_edge_list(short_list), Error);
  std::istringstream bad_vertex("2 1\n0 5\n");
  CHECK_THROWS_AS(read_edge_list(bad_vertex), Error);
  std::istringstream empty("");
  CHECK_THROWS_AS(read_edge_list(empty), Error);
}

TEST_CASE("dimacs") {
  std::istringstream in("c triangle\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n");
  const Graph g = read_dimacs(in);
  CHECK(g.edges() == Graph::complete(3).edges());
  std::istringstream bad("p edge 2 1\ne 1 3\n");
  CHECK_THROWS_AS(read_dimacs(bad), Error);
  std::istringstream missing("e 1 2\n");
  CHECK_THROWS_AS(read_dimacs(missing), Error);
}

TEST_CASE("matroid json") {
  const Matroid k3 = matroid_from_json(Json::parse(
      R"({"kind":"graphic","graph":{"n":3,"edges":[[0,1],[1,2],[0,2]]}})"));
  CHECK(k3.size() == 3);
  CHECK(k3.rank_of_ground() == 2);
  const Matroid u = matroid_from_json(Json::parse(R"({"kind":"uniform","r":2,"n":4})"));
  CHECK(u.rank()(set({0, 1, 2})) == 2);
  const Matroid l = matroid_from_json(
      Json::parse(R"({"kind":"linear","matrix":[[1,0,1],[0,1,1]],"prime":2})"));
  CHECK(l.rank_of_ground() == 2);
  for (const Matroid& m : {k3, u, l}) {
    const Matroid back = matroid_from_json(to_json(m));
    CHECK(back.kind() == m.kind());
    CHECK(back.size() == m.size());
    for_each_subset(GroundSet(m.size()).all(),
                    [&](Subset x) { CHECK(back.rank()(x) == m.rank()(x)); });
  }
  CHECK_THROWS_AS(matroid_from_json(Json::parse(R"({"kind":"nope"})")), Error);
  CHECK_THROWS_AS(matroid_from_json(Json::parse(R"({"kind":"uniform"})")), Error);
}

TEST_CASE("decomposition json") {
  const auto d = decomposition({{0, 1}}, {set({0, 1}), set({1, 2})});
  const Json j = to_json(d);
  CHECK(j["type"] == "graph");
  CHECK(graph_decomposition_from_json(j) == d);

  MatroidTreeDecomposition m;
  m.tree.vertex_count = 2;
  m.tree.edges = {{0, 1}};
  m.tau = {0, 1, 1};
  CHECK(matroid_decomposition_from_json(to_json(m)) == m);

  CHECK_THROWS_AS(graph_decomposition_from_json(Json::parse("[1,2]")), Error);
  CHECK_THROWS_AS(graph_decomposition_from_json(Json::parse(
                      R"({"type":"graph","vertices":1,"edges":[],"bags":[[70]]})")),
                  Error);
}

TEST_CASE("s-tree json round trip") {
  for (const Graph& g : connected_graphs(5)) {
    const Universe u = Universe::of_graph(g);
    const STree t = treedecomp_to_stree(
        g, elimination_decomposition(g, identity(g.vertex_count())));
    int size = 0;
    const STree back = stree_from_json(stree_to_json(t, u.size()), &size);
    CHECK(size == u.size());
    CHECK(back == t);
  }
  CHECK_THROWS_AS(stree_from_json(Json::parse(R"({"ground_size":3})")), Error);
}

TEST_CASE("reports") {
  Report pass{"lean", true, "", {{"pairs", 3}}};
  const Json j = to_json(pass);
  CHECK(j["pass"] == true);
  CHECK_FALSE(j.contains("witness"));
  CHECK(j["counts"]["pairs"] == 3);
  Report fail{"lean", false, "Z1={0}", {}};
  CHECK(to_json(fail)["witness"] == "Z1={0}");
}

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

#include "sepsys/io.hpp"

#include <fstream>
#include <istream>
#include <sstream>

#include "sepsys/error.hpp"

namespace sepsys {

namespace {

// Next non-comment line, trimmed of the comment; false at end of input.
bool next_line(std::istream& in, std::string& line, char comment) {
  while (std::getline(in, line)) {
    const auto pos = line.find(comment);
    if (pos != std::string::npos) line.erase(pos);
    if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
  }
  return false;
}

std::vector<int> indices_of(const Json& arr) {
  require(arr.is_array(), ErrorKind::kInvalidInput, "expected an index array");
  std::vector<int> out;
  for (const auto& x : arr) out.push_back(x.get<int>());
  return out;
}

Json index_array(Subset s) {
  Json arr = Json::array();
  for_each_element(s, [&](int e) { arr.push_back(e); });
  return arr;
}

Tree tree_from_json(const Json& j) {
  Tree t;
  t.vertex_count = j.at("vertices").get<int>();
  for (const auto& e : j.at("edges"))
    t.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  require(t.valid(), ErrorKind::kInvalidInput, "decomposition tree is not a tree");
  return t;
}

Json edges_json(const std::vector<std::pair<int, int>>& edges) {
  Json arr = Json::array();
  for (auto [u, v] : edges) arr.push_back({u, v});
  return arr;
}

// Runs f, turning json type and key errors into kInvalidInput.
template <typename F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::kInvalidInput, std::string(what) + ": " + e.what());
  }
}

Subset subset_of_indices(const Json& arr, int size, const char* what) {
  const auto idx = indices_of(arr);
  for (int v : idx)
    require(v >= 0 && v < size, ErrorKind::kInvalidInput,
            std::string(what) + " index out of range");
  return Subset::from_indices(idx);
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  require(next_line(in, line, '#'), ErrorKind::kInvalidInput,
          "edge list is empty");
  std::istringstream head(line);
  int n = 0, m = 0;
  require(static_cast<bool>(head >> n >> m) && m >= 0, ErrorKind::kInvalidInput,
          "edge list header must be \"n m\"");
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i) {
    require(next_line(in, line, '#'), ErrorKind::kInvalidInput,
            "edge list ended after " + std::to_string(i) + " of " +
                std::to_string(m) + " edges");
    std::istringstream row(line);
    int u = 0, v = 0;
    require(static_cast<bool>(row >> u >> v), ErrorKind::kInvalidInput,
            "bad edge line: " + line);
    edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

Graph read_dimacs(std::istream& in) {
  std::string line;
  int n = -1;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    std::istringstream row(line);
    std::string tag;
    if (!(row >> tag) || tag == "c") continue;
    if (tag == "p") {
      std::string format;
      int m = 0;
      require(static_cast<bool>(row >> format >> n >> m) &&
                  (format == "edge" || format == "col"),
              ErrorKind::kInvalidInput, "bad problem line: " + line);
    } else if (tag == "e") {
      require(n >= 0, ErrorKind::kInvalidInput, "edge before problem line");
      int u = 0, v = 0;
      require(static_cast<bool>(row >> u >> v) && u >= 1 && v >= 1 && u <= n &&
                  v <= n,
              ErrorKind::kInvalidInput, "bad edge line: " + line);
      edges.emplace_back(u - 1, v - 1);
    } else {
      fail(ErrorKind::kInvalidInput, "unknown line: " + line);
    }
  }
  require(n >= 0, ErrorKind::kInvalidInput, "missing problem line");
  return Graph(n, edges);
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

Matroid matroid_from_json(const Json& j) {
  return guarded("matroid", [&] {
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "graphic") {
      const auto& g = j.at("graph");
      std::vector<Edge> edges;
      for (const auto& e : g.at("edges"))
        edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
      return Matroid::graphic(Graph(g.at("n").get<int>(), edges));
    }
    if (kind == "uniform")
      return Matroid::uniform(j.at("r").get<int>(), j.at("n").get<int>());
    if (kind == "linear")
      return Matroid::linear(
          j.at("matrix").get<std::vector<std::vector<int>>>(),
          j.at("prime").get<int>());
    fail(ErrorKind::kInvalidInput, "unknown matroid kind: " + kind);
  });
}

Json to_json(const Matroid& m) {
  Json j;
  switch (m.kind()) {
    case RankKind::kGraphic: {
      j["kind"] = "graphic";
      const Graph& g = *m.graph();
      j["graph"] = {{"n", g.vertex_count()}, {"edges", edges_json(g.edges())}};
      break;
    }
    case RankKind::kUniform:
      j["kind"] = "uniform";
      j["r"] = m.uniform_rank();
      j["n"] = m.size();
      break;
    case RankKind::kLinear:
      j["kind"] = "linear";
      j["matrix"] = m.matrix();
      j["prime"] = m.prime();
      break;
    default:
      fail(ErrorKind::kInvalidInput, "matroid kind has no JSON form");
  }
  return j;
}

GraphTreeDecomposition graph_decomposition_from_json(const Json& j) {
  return guarded("decomposition", [&] {
    require(j.value("type", "graph") == "graph", ErrorKind::kInvalidInput,
            "expected a graph decomposition");
    GraphTreeDecomposition d;
    d.tree = tree_from_json(j);
    for (const auto& b : j.at("bags"))
      d.bags.push_back(subset_of_indices(b, kMaxGroundSize, "bag"));
    require(static_cast<int>(d.bags.size()) == d.tree.vertex_count,
            ErrorKind::kInvalidInput, "need one bag per tree vertex");
    return d;
  });
}

Json to_json(const GraphTreeDecomposition& d) {
  Json bags = Json::array();
  for (Subset b : d.bags) bags.push_back(index_array(b));
  return {{"type", "graph"},
          {"vertices", d.tree.vertex_count},
          {"edges", edges_json(d.tree.edges)},
          {"bags", bags}};
}

MatroidTreeDecomposition matroid_decomposition_from_json(const Json& j) {
  return guarded("decomposition", [&] {
    require(j.at("type").get<std::string>() == "matroid",
            ErrorKind::kInvalidInput, "expected a matroid decomposition");
    MatroidTreeDecomposition d;
    d.tree = tree_from_json(j);
    d.tau = j.at("tau").get<std::vector<int>>();
    for (int t : d.tau)
      require(t >= 0 && t < d.tree.vertex_count, ErrorKind::kInvalidInput,
              "tau maps outside the tree");
    return d;
  });
}

Json to_json(const MatroidTreeDecomposition& d) {
  return {{"type", "matroid"},
          {"vertices", d.tree.vertex_count},
          {"edges", edges_json(d.tree.edges)},
          {"tau", d.tau}};
}

Json stree_to_json(const STree& tree, int ground_size) {
  Json edges = Json::array();
  Json alpha = Json::array();
  for (int e = 0; e < tree.edge_count(); ++e)
    edges.push_back({tree.ends(e).first, tree.ends(e).second});
  for (Arc a = 0; a < tree.arc_count(); ++a)
    alpha.push_back({{"edge", edge_of(a)},
                     {"from", tree.tail(a)},
                     {"to", tree.head(a)},
                     {"left", index_array(tree.alpha(a).left)},
                     {"right", index_array(tree.alpha(a).right)}});
  return {{"ground_size", ground_size},
          {"vertices", tree.vertex_count()},
          {"edges", edges},
          {"alpha", alpha}};
}

STree stree_from_json(const Json& j, int* ground_size) {
  return guarded("s-tree", [&] {
    const int size = j.at("ground_size").get<int>();
    GroundSet ground(size);
    const int n = j.at("vertices").get<int>();
    require(n >= 1, ErrorKind::kInvalidInput, "an s-tree needs a vertex");
    STree tree(n);
    for (const auto& e : j.at("edges")) {
      const int u = e.at(0).get<int>(), v = e.at(1).get<int>();
      require(u >= 0 && u < n && v >= 0 && v < n && u != v,
              ErrorKind::kInvalidInput, "s-tree edge out of range");
      tree.add_edge(u, v, Separation{ground.all(), ground.all()});
    }
    const auto& alpha = j.at("alpha");
    require(alpha.size() == static_cast<std::size_t>(tree.arc_count()),
            ErrorKind::kInvalidInput, "alpha must list every oriented edge");
    for (const auto& rec : alpha) {
      const int e = rec.at("edge").get<int>();
      require(e >= 0 && e < tree.edge_count(), ErrorKind::kInvalidInput,
              "alpha edge out of range");
      const int from = rec.at("from").get<int>();
      const int to = rec.at("to").get<int>();
      Arc a = 2 * e;
      if (tree.tail(a) != from) a = reverse(a);
      require(tree.tail(a) == from && tree.head(a) == to,
              ErrorKind::kInvalidInput, "alpha endpoints do not match edge");
      tree.set_alpha_raw(a, {subset_of_indices(rec.at("left"), size, "left"),
                             subset_of_indices(rec.at("right"), size, "right")});
    }
    require(tree.is_tree(), ErrorKind::kInvalidInput, "s-tree is not a tree");
    if (ground_size) *ground_size = size;
    return tree;
  });
}

Json to_json(const Report& r) {
  Json j{{"property", r.property}, {"pass", r.pass}};
  if (!r.pass) j["witness"] = r.witness;
  Json counts = Json::object();
  for (const auto& [k, v] : r.counts) counts[k] = v;
  j["counts"] = counts;
  return j;
}

Json to_json(const TraceRecord& r) {
  auto sep = [](const Separation& s) {
    return Json{{"left", index_array(s.left)}, {"right", index_array(s.right)}};
  };
  Json j{{"iteration", r.iteration}, {"step", r.step}};
  if (r.step == "linked") {
    j["violation"] = {{"e", r.e}, {"f", r.f}, {"lambda", r.ell}};
  } else {
    j["violation"] = {{"t", r.t},
                      {"t2", r.t2},
                      {"add", sep(r.add)},
                      {"add2", sep(r.add2)},
                      {"lambda", r.ell}};
  }
  j["chosen"] = sep(r.chosen);
  j["potential_before"] = r.potential_before;
  j["potential_after"] = r.potential_after;
  j["vertices_after"] = r.vertices_after;
  j["decreased"] = r.decreased;
  return j;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), ErrorKind::kInvalidInput,
          "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::kInvalidInput, path + ": " + e.what());
  }
}

Instance read_instance(const std::string& path) {
  auto ends_with = [&](const std::string& suffix) {
    return path.size() >= suffix.size() &&
           path.compare(path.size() - suffix.size(), suffix.size(), suffix) ==
               0;
  };
  Instance inst;
  if (ends_with(".json")) {
    inst.matroid = matroid_from_json(read_json_file(path));
    return inst;
  }
  std::ifstream in(path);
  require(static_cast<bool>(in), ErrorKind::kInvalidInput,
          "cannot open " + path);
  inst.graph = ends_with(".col") ? read_dimacs(in) : read_edge_list(in);
  return inst;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  require(static_cast<bool>(out), ErrorKind::kInvalidInput,
          "cannot write " + path);
  out << text;
}

}  // namespace sepsys

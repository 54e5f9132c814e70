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

#include "sepsys/shift.hpp"

#include <algorithm>

#include "sepsys/error.hpp"

namespace sepsys {

ShiftResult shift(const STree& tree, Arc base, const Separation& target) {
  require(base >= 0 && base < tree.arc_count(), ErrorKind::kPrecondition,
          "base arc out of range");
  require(leq(tree.alpha(base), target), ErrorKind::kPrecondition,
          "shift target must lie above the base label");
  std::vector<int> verts = tree.subtree_vertices(base);
  std::sort(verts.begin(), verts.end());
  std::vector<int> index(tree.vertex_count(), -1);
  for (std::size_t i = 0; i < verts.size(); ++i) index[verts[i]] = (int)i;

  // Arcs pointing away from the tail: walk outward from the tail.
  std::vector<char> away(tree.arc_count(), 0);
  const int x = tree.tail(base);
  std::vector<Arc> stack{base};
  while (!stack.empty()) {
    const Arc a = stack.back();
    stack.pop_back();
    away[a] = 1;
    for (Arc b : tree.out_arcs(tree.head(a)))
      if (b != reverse(a)) stack.push_back(b);
  }

  ShiftResult r;
  r.tree = STree(static_cast<int>(verts.size()));
  r.vertex_origin = verts;
  for (int e = 0; e < tree.edge_count(); ++e) {
    const auto [u, v] = tree.ends(e);
    if (index[u] < 0 || index[v] < 0) continue;
    if ((u == x || v == x) && e != edge_of(base)) continue;
    const Arc forward = 2 * e;
    const Separation label = away[forward]
                                 ? join(tree.alpha(forward), target)
                                 : invert(join(tree.alpha(reverse(forward)),
                                               target));
    const Arc copy = r.tree.add_edge(index[u], index[v], label);
    r.edge_origin.push_back(e);
    if (e == edge_of(base)) r.base = copy | (base & 1);
  }
  r.tail = index[x];
  return r;
}

bool linked_to(const Universe& u, const Separation& s,
               const Separation& target) {
  if (!leq(s, target)) return false;
  return u.order(target) == u.lambda_interval(s, target).value;
}

ShiftingReport is_fixed_under_shifting_sample(const StarFamily& f,
                                              const Universe& u,
                                              const std::vector<STree>& trees) {
  ShiftingReport rep;
  const auto all = u.enumerate();
  for (const auto& tree : trees) {
    for (Arc a = 0; a < tree.arc_count() && rep.ok; ++a) {
      for (const auto& target : all) {
        if (!linked_to(u, tree.alpha(a), target)) continue;
        const auto res = shift(tree, a, target);
        ++rep.shifts;
        const auto valid = validate_stree(res.tree, u);
        if (!valid.valid() || !valid.order_preserving) {
          rep.ok = false;
          rep.witness = "shift of arc " + std::to_string(a) + " onto " +
                        target.to_string() + " is not tame: " + valid.message;
          break;
        }
        for (int e = 0; e < res.tree.edge_count(); ++e) {
          const Arc copy = 2 * e;
          const Arc orig = 2 * res.edge_origin[e];
          if (u.order(res.tree.alpha(copy)) > u.order(tree.alpha(orig))) {
            rep.ok = false;
            rep.witness = "order grew on edge " + std::to_string(e) +
                          " shifting arc " + std::to_string(a) + " onto " +
                          target.to_string();
          }
        }
        for (int v = 0; v < res.tree.vertex_count() && rep.ok; ++v) {
          if (v == res.tail) continue;
          ++rep.stars_checked;
          const auto shifted = res.tree.star(v);
          const auto original = tree.star(res.vertex_origin[v]);
          if (!family_contains(shifted, f, u)) {
            rep.ok = false;
            rep.witness = "shifted star at vertex " + std::to_string(v) +
                          " left " + f.name() + " (arc " + std::to_string(a) +
                          " onto " + target.to_string() + ")";
          } else if (u.star_size_unchecked(shifted) >
                     u.star_size_unchecked(original)) {
            rep.ok = false;
            rep.witness = "star grew at vertex " + std::to_string(v);
          }
        }
        if (!rep.ok) break;
      }
    }
  }
  return rep;
}

}  // namespace sepsys

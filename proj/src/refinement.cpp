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

#include "sepsys/refinement.hpp"

#include <algorithm>
#include <numeric>

#include "sepsys/error.hpp"
#include "sepsys/flow.hpp"

namespace sepsys {

const char* to_string(RefineMode mode) {
  switch (mode) {
    case RefineMode::kLinked:
      return "linked";
    case RefineMode::kLean:
      return "lean";
    case RefineMode::kCombined:
      return "combined";
  }
  return "unknown";
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<int> parent_;
};

// (count, count - components) for each level top..0, appended to out in
// blocks of `stride` starting at `offset`.
void edge_levels(const STree& tree, const Universe& u, int top,
                 std::vector<int>& out, int stride, int offset) {
  const int m = tree.edge_count();
  std::vector<int> order(m);
  std::vector<int> by_order(m);
  for (int e = 0; e < m; ++e) order[e] = u.order(tree.alpha(2 * e));
  std::iota(by_order.begin(), by_order.end(), 0);
  std::sort(by_order.begin(), by_order.end(),
            [&](int a, int b) { return order[a] > order[b]; });
  UnionFind uf(tree.vertex_count());
  std::vector<char> present(tree.vertex_count(), 0);
  int count = 0;
  int components = 0;
  std::size_t next = 0;
  for (int p = top; p >= 0; --p) {
    while (next < by_order.size() && order[by_order[next]] >= p) {
      const auto [a, b] = tree.ends(by_order[next]);
      ++count;
      components += 2 - present[a] - present[b];
      present[a] = present[b] = 1;
      if (uf.unite(a, b)) {
        --components;
      }
      ++next;
    }
    const std::size_t base = static_cast<std::size_t>(top - p) * stride;
    out[base + offset] = count;
    out[base + offset + 1] = count - components;
  }
}

void vertex_levels(const STree& tree, const Universe& u, int top,
                   std::vector<int>& out, int stride, int offset) {
  const int n = tree.vertex_count();
  std::vector<int> size(n);
  std::vector<int> by_size(n);
  for (int t = 0; t < n; ++t) {
    const auto sigma = tree.star(t);
    size[t] = u.star_size_unchecked(sigma);
  }
  std::iota(by_size.begin(), by_size.end(), 0);
  std::sort(by_size.begin(), by_size.end(),
            [&](int a, int b) { return size[a] > size[b]; });
  UnionFind uf(n);
  std::vector<char> present(n, 0);
  int count = 0;
  int components = 0;
  std::size_t next = 0;
  for (int p = top; p >= 0; --p) {
    while (next < by_size.size() && size[by_size[next]] >= p) {
      const int t = by_size[next];
      present[t] = 1;
      ++count;
      ++components;
      for (Arc a : tree.out_arcs(t)) {
        const int w = tree.head(a);
        if (present[w] && uf.unite(t, w)) --components;
      }
      ++next;
    }
    const std::size_t base = static_cast<std::size_t>(top - p) * stride;
    out[base + offset] = count;
    out[base + offset + 1] = count - components;
  }
}

int max_star_size(const STree& tree, const Universe& u) {
  int best = 0;
  for (int t = 0; t < tree.vertex_count(); ++t) {
    const auto sigma = tree.star(t);
    best = std::max(best, u.star_size_unchecked(sigma));
  }
  return best;
}

int max_order(const STree& tree, const Universe& u) {
  int best = 0;
  for (int e = 0; e < tree.edge_count(); ++e)
    best = std::max(best, u.order(tree.alpha(2 * e)));
  return best;
}

void invariant(bool cond, const std::string& what) {
  require(cond, ErrorKind::kInternalInvariant, what);
}

}  // namespace

PotentialProfile potential(const STree& tree, const Universe& u,
                           RefineMode mode, int top) {
  PotentialProfile prof;
  prof.mode = mode;
  prof.top = top;
  const int stride = prof.per_level();
  prof.values.assign(static_cast<std::size_t>(top + 1) * stride, 0);
  switch (mode) {
    case RefineMode::kLinked:
      edge_levels(tree, u, top, prof.values, stride, 0);
      break;
    case RefineMode::kLean:
      vertex_levels(tree, u, top, prof.values, stride, 0);
      break;
    case RefineMode::kCombined:
      edge_levels(tree, u, top, prof.values, stride, 0);
      vertex_levels(tree, u, top, prof.values, stride, 2);
      break;
  }
  return prof;
}

int compare(const PotentialProfile& a, const PotentialProfile& b) {
  require(a.mode == b.mode && a.top == b.top, ErrorKind::kPrecondition,
          "profiles are not comparable");
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    if (a.values[i] != b.values[i]) return a.values[i] < b.values[i] ? -1 : 1;
  }
  return 0;
}

int LambdaCache::operator()(const Separation& lo, const Separation& hi) {
  const auto key = std::make_pair(lo, hi);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  const int value = (u_->graph() != nullptr && u_->cardinality_order())
                        ? lambda_flow(*u_->graph(), lo, hi)
                        : u_->lambda_interval(lo, hi).value;
  memo_.emplace(key, value);
  return value;
}

std::optional<LinkedViolation> find_linked_violation(const STree& tree,
                                                     const Universe& u,
                                                     LambdaCache* cache) {
  LambdaCache local(u);
  LambdaCache& lambda = cache != nullptr ? *cache : local;
  std::vector<int> order(tree.arc_count());
  for (Arc a = 0; a < tree.arc_count(); ++a) order[a] = u.order(tree.alpha(a));

  std::vector<std::pair<Arc, int>> found;
  std::vector<std::pair<Arc, int>> stack;
  for (Arc e = 0; e < tree.arc_count(); ++e) {
    found.clear();
    stack.clear();
    for (Arc b : tree.out_arcs(tree.head(e)))
      if (b != reverse(e)) stack.emplace_back(b, std::min(order[e], order[b]));
    while (!stack.empty()) {
      const auto [b, pm] = stack.back();
      stack.pop_back();
      if (pm == 0) continue;
      found.emplace_back(b, pm);
      for (Arc c : tree.out_arcs(tree.head(b)))
        if (c != reverse(b)) stack.emplace_back(c, std::min(pm, order[c]));
    }
    std::sort(found.begin(), found.end());
    for (const auto& [f, pm] : found) {
      const int ell = lambda(tree.alpha(e), tree.alpha(f));
      if (ell < pm) {
        LinkedViolation v;
        v.e = e;
        v.f = f;
        v.ell = ell;
        v.path_min = pm;
        v.witness = u.lambda_interval(tree.alpha(e), tree.alpha(f)).witness;
        return v;
      }
    }
  }
  return std::nullopt;
}

int LeanSearch::intern(const std::vector<Separation>& star) {
  auto key = canonical_multiset(star);
  auto it = ids_.find(key);
  if (it != ids_.end()) return it->second;
  const int id = static_cast<int>(lists_.size());
  lists_.push_back(addable_candidates(key, *f_, *u_, options_));
  ids_.emplace(std::move(key), id);
  return id;
}

int LeanSearch::deficiency(int i, int j) {
  const auto key = std::minmax(i, j);
  auto it = deficiency_.find(key);
  if (it != deficiency_.end()) return it->second;
  int best = kNoPath;
  for (const auto& a : lists_[i]) {
    const int ra = u_->rank(a.left);
    for (const auto& b : lists_[j]) {
      if (!leq(a, invert(b))) continue;
      const int bound = std::min(ra, u_->rank(b.left));
      if (bound == 0) continue;
      const int ell = (*lambda_)(a, invert(b));
      if (ell < bound) best = std::min(best, ell);
    }
  }
  deficiency_.emplace(key, best);
  return best;
}

std::optional<LeanViolation> LeanSearch::find(const STree& tree) {
  const int n = tree.vertex_count();
  std::vector<int> list_of(n);
  for (int t = 0; t < n; ++t) list_of[t] = intern(tree.star(t));

  std::vector<int> pm(n);
  std::vector<std::pair<int, int>> stack;
  for (int t = 0; t < n; ++t) {
    if (lists_[list_of[t]].empty()) continue;
    std::fill(pm.begin(), pm.end(), 0);
    pm[t] = kNoPath;
    stack.assign(1, {t, -1});
    while (!stack.empty()) {
      const auto [x, parent] = stack.back();
      stack.pop_back();
      for (Arc a : tree.out_arcs(x)) {
        const int y = tree.head(a);
        if (y == parent) continue;
        pm[y] = std::min(pm[x], u_->order(tree.alpha(a)));
        if (pm[y] > 0) stack.emplace_back(y, x);
      }
    }
    for (int t2 = t; t2 < n; ++t2) {
      if (pm[t2] == 0 || lists_[list_of[t2]].empty()) continue;
      if (deficiency(list_of[t], list_of[t2]) >= pm[t2]) continue;
      for (const auto& a : lists_[list_of[t]]) {
        const int ra = u_->rank(a.left);
        for (const auto& b : lists_[list_of[t2]]) {
          if (!leq(a, invert(b))) continue;
          const int ell = (*lambda_)(a, invert(b));
          if (ell < std::min(ra, u_->rank(b.left)) && ell < pm[t2]) {
            LeanViolation v;
            v.t = t;
            v.t2 = t2;
            v.add = a;
            v.add2 = b;
            v.ell = ell;
            v.path_min = pm[t2];
            return v;
          }
        }
      }
      invariant(false, "deficiency cache disagrees with the candidate scan");
    }
  }
  return std::nullopt;
}

std::optional<LeanViolation> find_lean_violation(
    const STree& tree, const StarFamily& f, const Universe& u,
    const AddableOptions& options) {
  LambdaCache cache(u);
  LeanSearch search(f, u, cache, options);
  return search.find(tree);
}

Separation choose_shift_separation(const Separation& lo, const Separation& hi,
                                   const STree& tree, const Universe& u) {
  const auto minimizers = u.interval_minimizers(lo, hi);
  require(!minimizers.empty(), ErrorKind::kPrecondition, "empty interval");
  int best_count = -1;
  Separation best = minimizers.front();
  for (const auto& m : minimizers) {
    int count = 0;
    for (int e = 0; e < tree.edge_count(); ++e)
      if (nested(m, tree.alpha(2 * e))) ++count;
    if (count > best_count) {
      best_count = count;
      best = m;
    }
  }
  return best;
}

GlueResult glue_linked(const STree& t1, Arc e1, const STree& t2, Arc f2) {
  require(t1.alpha(e1) == t2.alpha(f2), ErrorKind::kPrecondition,
          "glued arcs carry different labels");
  const int drop1 = t1.tail(e1);
  const int drop2 = t2.head(f2);
  require(t1.degree(drop1) == 1 && t2.degree(drop2) == 1,
          ErrorKind::kPrecondition, "glue needs leaves at the dropped ends");
  GlueResult g;
  g.from_first.assign(t1.vertex_count(), -1);
  g.from_second.assign(t2.vertex_count(), -1);
  g.edge_from_first.assign(t1.edge_count(), -1);
  g.edge_from_second.assign(t2.edge_count(), -1);
  for (int v = 0; v < t1.vertex_count(); ++v)
    if (v != drop1) g.from_first[v] = g.tree.add_vertex();
  for (int v = 0; v < t2.vertex_count(); ++v)
    if (v != drop2) g.from_second[v] = g.tree.add_vertex();
  for (int e = 0; e < t1.edge_count(); ++e) {
    if (e == edge_of(e1)) continue;
    const auto [a, b] = t1.ends(e);
    g.tree.add_edge(g.from_first[a], g.from_first[b], t1.alpha(2 * e));
    g.edge_from_first[e] = g.tree.edge_count() - 1;
  }
  for (int e = 0; e < t2.edge_count(); ++e) {
    if (e == edge_of(f2)) continue;
    const auto [a, b] = t2.ends(e);
    g.tree.add_edge(g.from_second[a], g.from_second[b], t2.alpha(2 * e));
    g.edge_from_second[e] = g.tree.edge_count() - 1;
  }
  g.tree.add_edge(g.from_second[t2.tail(f2)], g.from_first[t1.head(e1)],
                  t1.alpha(e1));
  g.glued_edge = g.tree.edge_count() - 1;
  return g;
}

namespace {

// copy[w] lists the glued-tree copies of source edge w.
void check_widths(const STree& before, const STree& after,
                  const std::vector<std::vector<int>>& copies, int ell,
                  int glued_edge, const StarFamily& f, const Universe& u,
                  const char* step) {
  for (int w = 0; w < before.edge_count(); ++w) {
    const int ow = u.order(before.alpha(2 * w));
    for (int c : copies[w])
      invariant(u.order(after.alpha(2 * c)) <= ow,
                std::string(step) + " step raised the order of edge " +
                    std::to_string(w));
  }
  invariant(u.order(after.alpha(2 * glued_edge)) == ell,
            std::string(step) + " step glued with the wrong order");
  invariant(max_star_size(after, u) <= max_star_size(before, u),
            std::string(step) + " step raised the maximum star size");
  const auto rep = check_over_family(after, f, u);
  invariant(rep.ok, std::string(step) + " step left the family: " +
                        rep.message);
}

int top_level(const STree& tree, const Universe& u) {
  return std::max(max_order(tree, u), max_star_size(tree, u));
}

}  // namespace

STree linked_step(const STree& tree, const LinkedViolation& v,
                  const StarFamily& f, const Universe& u, Separation* chosen) {
  const Separation x =
      choose_shift_separation(tree.alpha(v.e), tree.alpha(v.f), tree, u);
  invariant(u.order(x) == v.ell, "flow and interval minimum disagree");
  if (chosen != nullptr) *chosen = x;
  const ShiftResult s1 = shift(tree, v.e, x);
  const ShiftResult s2 = shift(tree, reverse(v.f), invert(x));
  GlueResult g = glue_linked(s1.tree, s1.base, s2.tree, reverse(s2.base));

  // Copies of each original edge in the glued tree.
  const int m = tree.edge_count();
  std::vector<int> copy1(m, -1);
  std::vector<int> copy2(m, -1);
  for (int e = 0; e < s1.tree.edge_count(); ++e)
    copy1[s1.edge_origin[e]] = g.edge_from_first[e];
  for (int e = 0; e < s2.tree.edge_count(); ++e)
    copy2[s2.edge_origin[e]] = g.edge_from_second[e];
  copy1[edge_of(v.e)] = g.glued_edge;
  copy2[edge_of(v.f)] = g.glued_edge;
  for (int w = 0; w < m; ++w) {
    const int ow = u.order(tree.alpha(2 * w));
    if (ow <= v.ell || copy1[w] < 0 || copy2[w] < 0) continue;
    const int o1 = u.order(g.tree.alpha(2 * copy1[w]));
    const int o2 = u.order(g.tree.alpha(2 * copy2[w]));
    invariant(!(o1 == ow && o2 > v.ell) && !(o2 == ow && o1 > v.ell),
              "both copies of edge " + std::to_string(w) +
                  " keep a high order");
  }

  std::vector<std::vector<int>> copies(m);
  for (int w = 0; w < m; ++w) {
    if (copy1[w] >= 0 && copy1[w] != g.glued_edge) copies[w].push_back(copy1[w]);
    if (copy2[w] >= 0 && copy2[w] != g.glued_edge) copies[w].push_back(copy2[w]);
  }
  check_widths(tree, g.tree, copies, v.ell, g.glued_edge, f, u, "linked");
  const int top = top_level(tree, u);
  invariant(compare(potential(g.tree, u, RefineMode::kLinked, top),
                    potential(tree, u, RefineMode::kLinked, top)) < 0,
            "linked potential did not decrease");
  return std::move(g.tree);
}

STree lean_step(const STree& tree, const LeanViolation& v, const StarFamily& f,
                const Universe& u, Separation* chosen) {
  STree t1 = tree;
  const int leaf1 = t1.add_vertex();
  const Arc a1 = t1.add_edge(leaf1, v.t, v.add);
  STree t2 = tree;
  const int leaf2 = t2.add_vertex();
  const Arc a2 = t2.add_edge(leaf2, v.t2, v.add2);

  const Separation x =
      choose_shift_separation(v.add, invert(v.add2), tree, u);
  invariant(u.order(x) == v.ell, "flow and interval minimum disagree");
  if (chosen != nullptr) *chosen = x;
  const ShiftResult s1 = shift(t1, a1, x);
  const ShiftResult s2 = shift(t2, a2, invert(x));
  GlueResult g = glue_linked(s1.tree, s1.base, s2.tree, reverse(s2.base));

  // The shifts cover the whole augmented trees, so vertex ids are kept.
  const int n = tree.vertex_count();
  std::vector<int> old_size(n);
  for (int s = 0; s < n; ++s) {
    const auto sigma = tree.star(s);
    old_size[s] = u.star_size_unchecked(sigma);
  }
  auto new_size = [&](int vertex) {
    const auto sigma = g.tree.star(vertex);
    return u.star_size_unchecked(sigma);
  };
  invariant(new_size(g.from_first[v.t]) < old_size[v.t] &&
                new_size(g.from_second[v.t2]) < old_size[v.t2],
            "glued bags did not shrink");
  for (int s = 0; s < n; ++s) {
    if (old_size[s] <= v.ell) continue;
    const int z1 = new_size(g.from_first[s]);
    const int z2 = new_size(g.from_second[s]);
    invariant(!(z1 == old_size[s] && z2 > v.ell) &&
                  !(z2 == old_size[s] && z1 > v.ell),
              "both copies of vertex " + std::to_string(s) +
                  " keep a large star");
  }

  std::vector<std::vector<int>> copies(tree.edge_count());
  for (int e = 0; e < tree.edge_count(); ++e) {
    copies[e].push_back(g.edge_from_first[e]);
    copies[e].push_back(g.edge_from_second[e]);
  }
  check_widths(tree, g.tree, copies, v.ell, g.glued_edge, f, u, "lean");
  const int top = top_level(tree, u);
  invariant(compare(potential(g.tree, u, RefineMode::kLean, top),
                    potential(tree, u, RefineMode::kLean, top)) < 0,
            "lean potential did not decrease");
  return std::move(g.tree);
}

namespace {

RefineResult run(const STree& input, const StarFamily& f, const Universe& u,
                 const RefineOptions& options, RefineMode mode) {
  const auto rep = check_over_family(input, f, u);
  require(rep.ok, ErrorKind::kPrecondition,
          "input is not a tame S-tree over " + f.name() + ": " + rep.message);
  require(u.provably_grounded(), ErrorKind::kPrecondition,
          "refinement needs a grounded universe");
  const std::uint64_t edges = input.edge_count();
  const std::uint64_t cap =
      options.iteration_cap != 0
          ? options.iteration_cap
          : 10ull * f.order_bound() * edges * edges + 1000;
  const int top = top_level(input, u);

  RefineResult res;
  res.tree = input;
  LambdaCache cache(u);
  LeanSearch lean(f, u, cache, options.addable);
  while (true) {
    std::optional<LinkedViolation> lv;
    std::optional<LeanViolation> nv;
    if (mode != RefineMode::kLean) lv = find_linked_violation(res.tree, u, &cache);
    if (mode != RefineMode::kLinked && !lv) nv = lean.find(res.tree);
    if (!lv && !nv) break;
    require(res.iterations < cap, ErrorKind::kIterationCap,
            "refinement exceeded " + std::to_string(cap) + " iterations");
    const auto before = potential(res.tree, u, mode, top);
    TraceRecord rec;
    rec.iteration = res.iterations;
    STree next;
    if (lv) {
      next = linked_step(res.tree, *lv, f, u, &rec.chosen);
      rec.step = "linked";
      rec.e = lv->e;
      rec.f = lv->f;
      rec.ell = lv->ell;
      ++res.linked_steps;
    } else {
      next = lean_step(res.tree, *nv, f, u, &rec.chosen);
      rec.step = "lean";
      rec.t = nv->t;
      rec.t2 = nv->t2;
      rec.add = nv->add;
      rec.add2 = nv->add2;
      rec.ell = nv->ell;
      ++res.lean_steps;
    }
    const auto after = potential(next, u, mode, top);
    rec.decreased = compare(after, before) < 0;
    if (!rec.decreased) {
      // Only reachable in combined mode; the per-mode steps assert their own
      // potentials.
      res.combined_failures.push_back(
          "iteration " + std::to_string(res.iterations) + " (" + rec.step +
          " step) did not lower the combined profile");
    }
    if (options.trace) {
      rec.potential_before = before.values;
      rec.potential_after = after.values;
      rec.vertices_after = next.vertex_count();
      res.trace.push_back(std::move(rec));
    }
    res.tree = std::move(next);
    ++res.iterations;
  }
  return res;
}

}  // namespace

RefineResult refine_to_linked(const STree& tree, const StarFamily& f,
                              const Universe& u, const RefineOptions& options) {
  return run(tree, f, u, options, RefineMode::kLinked);
}

RefineResult refine_to_lean(const STree& tree, const StarFamily& f,
                            const Universe& u, const RefineOptions& options) {
  return run(tree, f, u, options, RefineMode::kLean);
}

RefineResult refine_combined(const STree& tree, const StarFamily& f,
                             const Universe& u, const RefineOptions& options) {
  return run(tree, f, u, options, RefineMode::kCombined);
}

}  // namespace sepsys

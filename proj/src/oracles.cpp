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

#include "sepsys/oracles.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>
#include <vector>

#include "sepsys/error.hpp"
#include "sepsys/flow.hpp"

namespace sepsys {

namespace {

// tw[S] is the best width of eliminating S first; Q is the set of
// uneliminated vertices that v sees through already-eliminated ones.
std::vector<int> treewidth_table(const Graph& g) {
  const int n = g.vertex_count();
  require(n <= kTreewidthCap, ErrorKind::kCapExceeded,
          "treewidth oracle is limited to " + std::to_string(kTreewidthCap) +
              " vertices");
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  std::vector<int> tw(full + 1, 0);
  tw[0] = -1;
  for (std::uint64_t s = 1; s <= full; ++s) {
    int best = n;
    for_each_element(Subset(s), [&](int v) {
      best = std::min(best, std::max(tw[s & ~(std::uint64_t{1} << v)],
                                     elimination_degree(g, Subset(s), v)));
    });
    tw[s] = best;
  }
  return tw;
}

}  // namespace

int elimination_degree(const Graph& g, Subset eliminated, int v) {
  const Subset rest = eliminated - Subset::of({v});
  const Subset region = g.reachable(Subset::of({v}), rest | Subset::of({v}));
  Subset q;
  for_each_element(region, [&](int w) { q |= g.neighbours(w); });
  return (q - rest - Subset::of({v})).count();
}

int brute_force_treewidth(const Graph& g) {
  return treewidth_table(g).back();
}

std::vector<int> optimal_elimination_order(const Graph& g) {
  const auto tw = treewidth_table(g);
  std::vector<int> order;
  Subset s = g.vertices();
  while (!s.empty()) {
    int pick = -1;
    for_each_element(s, [&](int v) {
      if (pick >= 0) return;
      const Subset rest = s - Subset::of({v});
      if (std::max(tw[rest.bits()], elimination_degree(g, s, v)) ==
          tw[s.bits()])
        pick = v;
    });
    order.push_back(pick);
    s.erase(pick);
  }
  std::reverse(order.begin(), order.end());
  return order;
}

namespace {

// vs[S]: the best vertex separation of orders that list S first.
std::vector<int> pathwidth_table(const Graph& g) {
  const int n = g.vertex_count();
  require(n <= kTreewidthCap, ErrorKind::kCapExceeded,
          "pathwidth oracle is limited to " + std::to_string(kTreewidthCap) +
              " vertices");
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  std::vector<int> vs(full + 1, 0);
  for (std::uint64_t s = 1; s <= full; ++s) {
    const Subset set(s);
    int boundary = 0;
    for_each_element(set, [&](int v) {
      if (!g.neighbours(v).subset_of(set)) ++boundary;
    });
    int best = n;
    for_each_element(set, [&](int v) {
      best = std::min(best, vs[s & ~(std::uint64_t{1} << v)]);
    });
    vs[s] = std::max(best, boundary);
  }
  return vs;
}

}  // namespace

int brute_force_pathwidth(const Graph& g) { return pathwidth_table(g).back(); }

std::vector<int> optimal_path_order(const Graph& g) {
  const auto vs = pathwidth_table(g);
  std::vector<int> order;
  Subset s = g.vertices();
  while (!s.empty()) {
    int pick = -1;
    for_each_element(s, [&](int v) {
      if (pick < 0 || vs[(s - Subset::of({v})).bits()] <
                          vs[(s - Subset::of({pick})).bits()])
        pick = v;
    });
    order.push_back(pick);
    s.erase(pick);
  }
  std::reverse(order.begin(), order.end());
  return order;
}

namespace {

// Branch width over a ground set of m elements with edge width w(X).
template <typename Width>
int branchwidth_dp(int m, Width width) {
  if (m < 2) return 0;
  const std::uint64_t full = (std::uint64_t{1} << m) - 1;
  std::vector<int> f(full + 1, 0);
  std::vector<int> w(full + 1, 0);
  for (std::uint64_t x = 1; x <= full; ++x) w[x] = width(Subset(x));
  for (std::uint64_t x = 1; x <= full; ++x) {
    if (std::popcount(x) == 1) continue;
    int best = std::numeric_limits<int>::max();
    // Split off parts containing the lowest element to visit each split once.
    const std::uint64_t low = x & -x;
    const std::uint64_t rest = x ^ low;
    for (std::uint64_t a = rest;; a = (a - 1) & rest) {
      const std::uint64_t x1 = a | low;
      const std::uint64_t x2 = x ^ x1;
      if (x2 != 0)
        best = std::min(best, std::max({w[x1], w[x2], f[x1], f[x2]}));
      if (a == 0) break;
    }
    f[x] = best;
  }
  int best = std::numeric_limits<int>::max();
  const std::uint64_t low = 1;
  const std::uint64_t rest = full ^ low;
  for (std::uint64_t a = rest;; a = (a - 1) & rest) {
    const std::uint64_t x1 = a | low;
    const std::uint64_t x2 = full ^ x1;
    if (x2 != 0) best = std::min(best, std::max({w[x1], f[x1], f[x2]}));
    if (a == 0) break;
  }
  return best;
}

}  // namespace

int brute_force_branchwidth(const Graph& g) {
  const int m = g.edge_count();
  require(m <= kBranchwidthCap, ErrorKind::kCapExceeded,
          "branchwidth oracle is limited to " +
              std::to_string(kBranchwidthCap) + " edges");
  const auto& edges = g.edges();
  auto touched = [&](Subset x) {
    Subset v;
    for_each_element(x, [&](int e) {
      v |= Subset::of({edges[e].first, edges[e].second});
    });
    return v;
  };
  const Subset all = GroundSet(m).all();
  return branchwidth_dp(
      m, [&](Subset x) { return (touched(x) & touched(all - x)).count(); });
}

int brute_force_branchwidth(const Matroid& m) {
  require(m.size() <= kBranchwidthCap, ErrorKind::kCapExceeded,
          "branchwidth oracle is limited to " +
              std::to_string(kBranchwidthCap) + " elements");
  return branchwidth_dp(m.size(),
                        [&](Subset x) { return m.connectivity(x) + 1; });
}

namespace {

class MatroidTreewidth {
 public:
  explicit MatroidTreewidth(const Matroid& m)
      : m_(m),
        all_(GroundSet(m.size()).all()),
        memo_(std::size_t{1} << m.size(), -1) {}

  int best(Subset s) {
    int& slot = memo_[s.bits()];
    if (slot >= 0) return slot;
    int result = std::numeric_limits<int>::max();
    const int rs = m_.rank()(s);
    for_each_subset(s, [&](Subset q) {
      partitions(s, s - q, 0, 0, q.empty(), rs, result);
    });
    slot = result;
    return result;
  }

  // Adds a subtree for s below `parent` (-1 for the root) realizing best(s).
  void build(Subset s, int parent, MatroidTreeDecomposition& d) {
    const int v = d.tree.vertex_count++;
    if (parent >= 0) d.tree.edges.emplace_back(parent, v);
    const int target = best(s);
    const int rs = m_.rank()(s);
    std::vector<Subset> blocks;
    Subset bag;
    bool found = false;
    for_each_subset(s, [&](Subset q) {
      if (found) return;
      blocks.clear();
      if (realize(s, s - q, 0, 0, q.empty(), rs, target, blocks)) {
        found = true;
        bag = q;
      }
    });
    require(found, ErrorKind::kInternalInvariant,
            "matroid treewidth table is inconsistent");
    for_each_element(bag, [&](int e) { d.tau[e] = v; });
    for (Subset b : blocks) build(b, v, d);
  }

 private:
  bool realize(Subset s, Subset rest, int gain, int child_max, bool no_bag,
               int rs, int target, std::vector<Subset>& blocks) {
    if (child_max > target) return false;
    if (rest.empty()) return std::max(rs + gain, child_max) == target;
    const int low = rest.front();
    const Subset others = rest - Subset::of({low});
    bool done = false;
    for_each_subset(others, [&](Subset extra) {
      if (done) return;
      const Subset block = extra | Subset::of({low});
      if (no_bag && block == s) return;
      const int c = m_.rank()(all_ - block) - m_.rank_of_ground();
      blocks.push_back(block);
      if (realize(s, rest - block, gain + c, std::max(child_max, best(block)),
                  no_bag, rs, target, blocks))
        done = true;
      else
        blocks.pop_back();
    });
    return done;
  }

  // Splits `rest` into blocks; each block is a child subtree.
  void partitions(Subset s, Subset rest, int gain, int child_max,
                  bool no_bag, int rs, int& result) {
    if (child_max >= result) return;
    if (rest.empty()) {
      result = std::min(result, std::max(rs + gain, child_max));
      return;
    }
    const int low = rest.front();
    const Subset others = rest - Subset::of({low});
    for_each_subset(others, [&](Subset extra) {
      const Subset block = extra | Subset::of({low});
      if (no_bag && block == s) return;  // a bare vertex over one child
      const int c = m_.rank()(all_ - block) - m_.rank_of_ground();
      partitions(s, rest - block, gain + c, std::max(child_max, best(block)),
                 no_bag, rs, result);
    });
  }

  const Matroid& m_;
  Subset all_;
  std::vector<int> memo_;
};

}  // namespace

MatroidTreeDecomposition optimal_matroid_decomposition(const Matroid& m) {
  require(m.size() <= kMatroidTreewidthCap, ErrorKind::kCapExceeded,
          "matroid treewidth oracle is limited to " +
              std::to_string(kMatroidTreewidthCap) + " elements");
  MatroidTreewidth dp(m);
  MatroidTreeDecomposition d;
  d.tree.vertex_count = 0;
  d.tau.assign(m.size(), 0);
  dp.build(GroundSet(m.size()).all(), -1, d);
  return d;
}

int brute_force_matroid_treewidth(const Matroid& m) {
  require(m.size() <= kMatroidTreewidthCap, ErrorKind::kCapExceeded,
          "matroid treewidth oracle is limited to " +
              std::to_string(kMatroidTreewidthCap) + " elements");
  MatroidTreewidth dp(m);
  return dp.best(GroundSet(m.size()).all());
}

int lambda_brute(const Universe& u, const Separation& lo,
                 const Separation& hi) {
  require(leq(lo, hi), ErrorKind::kPrecondition, "lo must be <= hi");
  int best = std::numeric_limits<int>::max();
  u.for_each_in_interval(lo, hi, false, [&](const Separation& s) {
    best = std::min(best, u.order(s));
  });
  return best;
}

namespace {

// Smallest adhesion (or label order) on the path from t to every vertex.
std::vector<int> path_minima(const std::vector<std::vector<int>>& adj, int t,
                             const std::function<int(int, int)>& weight) {
  std::vector<int> pm(adj.size(), std::numeric_limits<int>::max());
  std::vector<int> stack{t};
  std::vector<char> seen(adj.size(), 0);
  seen[t] = 1;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (int y : adj[x])
      if (!seen[y]) {
        seen[y] = 1;
        pm[y] = std::min(pm[x], weight(x, y));
        stack.push_back(y);
      }
  }
  return pm;
}

void require_valid(const Graph& g, const GraphTreeDecomposition& d) {
  const auto rep = validate_decomposition(g, d);
  require(rep.ok, ErrorKind::kInvalidInput, rep.message);
}

}  // namespace

Report verify_valid(const Graph& g, const GraphTreeDecomposition& d) {
  Report r;
  r.property = "valid";
  const auto rep = validate_decomposition(g, d);
  r.pass = rep.ok;
  r.witness = rep.message;
  r.counts["bags"] = d.bags.size();
  return r;
}

Report verify_valid(const Matroid& m, const MatroidTreeDecomposition& d) {
  Report r;
  r.property = "valid";
  const auto rep = validate_decomposition(m, d);
  r.pass = rep.ok;
  r.witness = rep.message;
  r.counts["vertices"] = d.tree.vertex_count;
  return r;
}

Report verify_linked_td(const Graph& g, const GraphTreeDecomposition& d) {
  require_valid(g, d);
  Report r;
  r.property = "linked";
  const auto adj = d.tree.adjacency();
  auto adhesion = [&](int a, int b) { return (d.bags[a] & d.bags[b]).count(); };
  std::uint64_t pairs = 0;
  for (int t = 0; t < d.tree.vertex_count && r.pass; ++t) {
    const auto pm = path_minima(adj, t, adhesion);
    for (int t2 = t + 1; t2 < d.tree.vertex_count; ++t2) {
      ++pairs;
      const int paths = (d.bags[t].empty() || d.bags[t2].empty())
                            ? 0
                            : menger(g, d.bags[t], d.bags[t2]).count;
      if (paths < pm[t2]) {
        r.pass = false;
        r.witness = "bags " + std::to_string(t) + " " +
                    d.bags[t].to_string() + " and " + std::to_string(t2) +
                    " " + d.bags[t2].to_string() + ": " +
                    std::to_string(paths) +
                    " disjoint paths but every adhesion between is >= " +
                    std::to_string(pm[t2]);
        break;
      }
    }
  }
  r.counts["pairs"] = pairs;
  return r;
}

namespace {

Report lean_td(const Graph& g, const GraphTreeDecomposition& d, int theta,
               std::uint64_t budget, const std::string& property) {
  require_valid(g, d);
  std::uint64_t cost = 0;
  for (Subset b : d.bags) cost += std::uint64_t{1} << b.count();
  require(cost <= budget, ErrorKind::kBudgetExceeded,
          "bag subsets exceed the verification budget");
  Report r;
  r.property = property;
  const auto adj = d.tree.adjacency();
  auto adhesion = [&](int a, int b) { return (d.bags[a] & d.bags[b]).count(); };

  struct Deficit {
    int k = std::numeric_limits<int>::max();
    Subset z1, z2;
  };
  std::unordered_map<std::uint64_t, Deficit> memo;
  std::unordered_map<std::uint64_t, int> flows;
  std::uint64_t flow_calls = 0;
  auto paths = [&](Subset z1, Subset z2) {
    const std::uint64_t key = z1.bits() * 0x9E3779B97F4A7C15ULL ^ z2.bits();
    auto it = flows.find(key);
    if (it != flows.end()) return it->second;
    ++flow_calls;
    const int c = menger(g, z1, z2).count;
    flows.emplace(key, c);
    return c;
  };
  auto smallest_deficit = [&](Subset b1, Subset b2) {
    const std::uint64_t key = b1.bits() * 0x9E3779B97F4A7C15ULL ^ b2.bits();
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    Deficit def;
    const int top = std::min({b1.count(), b2.count(), theta - 1});
    for (int k = 1; k <= top && def.k == std::numeric_limits<int>::max();
         ++k) {
      for_each_subset_of_size(b1, k, [&](Subset z1) {
        if (def.k != std::numeric_limits<int>::max()) return;
        for_each_subset_of_size(b2, k, [&](Subset z2) {
          if (def.k != std::numeric_limits<int>::max()) return;
          if (paths(z1, z2) < k) def = {k, z1, z2};
        });
      });
    }
    memo.emplace(key, def);
    return def;
  };

  std::uint64_t pairs = 0;
  for (int t = 0; t < d.tree.vertex_count && r.pass; ++t) {
    const auto pm = path_minima(adj, t, adhesion);
    for (int t2 = t; t2 < d.tree.vertex_count; ++t2) {
      ++pairs;
      const Deficit def = smallest_deficit(d.bags[t], d.bags[t2]);
      if (def.k != std::numeric_limits<int>::max() && def.k <= pm[t2]) {
        r.pass = false;
        r.witness = "t=" + std::to_string(t) + " t'=" + std::to_string(t2) +
                    " Z1=" + def.z1.to_string() + " Z2=" + def.z2.to_string() +
                    " k=" + std::to_string(def.k) +
                    ": fewer than k disjoint paths and no adhesion below k";
        break;
      }
    }
  }
  r.counts["pairs"] = pairs;
  r.counts["flows"] = flow_calls;
  return r;
}

}  // namespace

Report verify_lean_td(const Graph& g, const GraphTreeDecomposition& d,
                      std::uint64_t budget) {
  return lean_td(g, d, std::numeric_limits<int>::max(), budget, "lean");
}

Report verify_theta_lean(const Graph& g, const GraphTreeDecomposition& d,
                         int theta, std::uint64_t budget) {
  require(theta >= 1, ErrorKind::kInvalidInput, "theta must be positive");
  return lean_td(g, d, theta, budget, "theta-lean");
}

Report verify_matroid_lean(const Matroid& m,
                           const MatroidTreeDecomposition& d) {
  require(m.size() <= kMatroidTreewidthCap, ErrorKind::kCapExceeded,
          "matroid leanness check is limited to " +
              std::to_string(kMatroidTreewidthCap) + " elements");
  const auto valid = validate_decomposition(m, d);
  require(valid.ok, ErrorKind::kInvalidInput, valid.message);
  Report r;
  r.property = "matroid-lean";
  const GroundSet ground(m.size());
  const auto adj = d.tree.adjacency();
  const int n = d.tree.vertex_count;
  std::vector<Subset> part(n);
  for (int e = 0; e < m.size(); ++e) part[d.tau[e]].insert(e);

  // λ(Z1, Z2) by enumerating every X with Z1 ⊆ X ⊆ E∖Z2.
  std::vector<int> connectivity(std::size_t{1} << m.size());
  for (std::uint64_t x = 0; x < connectivity.size(); ++x)
    connectivity[x] = m.connectivity(Subset(x));
  auto lambda = [&](Subset z1, Subset z2) {
    int best = std::numeric_limits<int>::max();
    for_each_subset(ground.all() - z1 - z2, [&](Subset extra) {
      best = std::min(best, connectivity[(z1 | extra).bits()]);
    });
    return best;
  };
  // Separation induced by the tree edge a-b: elements on a's side.
  auto edge_order = [&](int a, int b) {
    std::vector<int> comp{a};
    std::vector<char> seen(n, 0);
    seen[a] = seen[b] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (int y : adj[comp[i]])
        if (!seen[y]) {
          seen[y] = 1;
          comp.push_back(y);
        }
    Subset x;
    for (int s : comp) x |= part[s];
    return connectivity[x.bits()];
  };

  std::uint64_t checked = 0;
  for (int t = 0; t < n && r.pass; ++t) {
    const auto pm = path_minima(adj, t, edge_order);
    for (int t2 = t; t2 < n && r.pass; ++t2) {
      for_each_subset(part[t], [&](Subset z1) {
        if (!r.pass || z1.empty()) return;
        const int k = m.rank()(z1);
        if (k == 0) return;
        for_each_subset(part[t2] - z1, [&](Subset z2) {
          if (!r.pass || z2.empty() || m.rank()(z2) != k) return;
          ++checked;
          const int lam = lambda(z1, z2);
          if (lam < k && pm[t2] >= k) {
            r.pass = false;
            r.witness = "t=" + std::to_string(t) + " t'=" +
                        std::to_string(t2) + " Z1=" + z1.to_string() +
                        " Z2=" + z2.to_string() + " k=" + std::to_string(k) +
                        " lambda=" + std::to_string(lam);
          }
        });
      });
    }
  }
  r.counts["pairs"] = checked;
  return r;
}

Report verify_linked_stree(const STree& tree, const Universe& u) {
  Report r;
  r.property = "linked-stree";
  std::unordered_map<std::pair<Separation, Separation>, int,
                     SeparationPairHash>
      memo;
  std::uint64_t pairs = 0;
  for (Arc e = 0; e < tree.arc_count() && r.pass; ++e) {
    std::vector<std::pair<Arc, int>> stack{{e, u.order(tree.alpha(e))}};
    while (!stack.empty() && r.pass) {
      const auto [f, pm] = stack.back();
      stack.pop_back();
      ++pairs;
      const auto key = std::make_pair(tree.alpha(e), tree.alpha(f));
      auto it = memo.find(key);
      const int lam = it != memo.end()
                          ? it->second
                          : memo.emplace(key, u.lambda_interval(key.first,
                                                                key.second)
                                                  .value)
                                .first->second;
      if (lam != pm) {
        r.pass = false;
        r.witness = "arcs " + std::to_string(e) + " <= " + std::to_string(f) +
                    ": lambda " + std::to_string(lam) +
                    " but the smallest label between has order " +
                    std::to_string(pm);
      }
      for (Arc g : tree.out_arcs(tree.head(f)))
        if (g != reverse(f))
          stack.emplace_back(g, std::min(pm, u.order(tree.alpha(g))));
    }
  }
  r.counts["arc_pairs"] = pairs;
  return r;
}

Report verify_lean_stree(const STree& tree, const StarFamily& f,
                         const Universe& u, bool exhaustive) {
  Report r;
  r.property = "lean-stree";
  AddableOptions options;
  options.exhaustive = exhaustive;
  const int n = tree.vertex_count();
  std::vector<std::vector<Separation>> candidates(n);
  for (int t = 0; t < n; ++t)
    candidates[t] = addable_candidates(tree, t, f, u, options);
  std::vector<std::vector<int>> adj(n);
  for (int e = 0; e < tree.edge_count(); ++e) {
    adj[tree.ends(e).first].push_back(tree.ends(e).second);
    adj[tree.ends(e).second].push_back(tree.ends(e).first);
  }
  auto label_order = [&](int a, int b) {
    for (Arc x : tree.out_arcs(a))
      if (tree.head(x) == b) return u.order(tree.alpha(x));
    fail(ErrorKind::kInternalInvariant, "missing tree edge");
  };
  std::unordered_map<std::pair<Separation, Separation>, int,
                     SeparationPairHash>
      memo;
  std::uint64_t pairs = 0;
  for (int t = 0; t < n && r.pass; ++t) {
    const auto pm = path_minima(adj, t, label_order);
    for (int t2 = t; t2 < n && r.pass; ++t2) {
      for (const auto& a : candidates[t]) {
        if (!r.pass) break;
        for (const auto& b : candidates[t2]) {
          if (!leq(a, invert(b))) continue;
          const int bound = std::min(u.rank(a.left), u.rank(b.left));
          if (bound == 0 || pm[t2] == 0) continue;
          ++pairs;
          const auto key = std::make_pair(a, invert(b));
          auto it = memo.find(key);
          const int lam =
              it != memo.end()
                  ? it->second
                  : memo.emplace(key, u.lambda_interval(a, invert(b)).value)
                        .first->second;
          if (lam < bound && lam < pm[t2]) {
            r.pass = false;
            r.witness = "t=" + std::to_string(t) + " t'=" +
                        std::to_string(t2) + " add " + a.to_string() +
                        " and " + b.to_string() + ": lambda " +
                        std::to_string(lam);
            break;
          }
        }
      }
    }
  }
  r.counts["candidate_pairs"] = pairs;
  return r;
}

}  // namespace sepsys

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

#include "sepsys/acceptance.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <mutex>
#include <sstream>
#include <thread>

#include "sepsys/corpus.hpp"
#include "sepsys/error.hpp"
#include "sepsys/flow.hpp"
#include "sepsys/instances.hpp"
#include "sepsys/oracles.hpp"
#include "sepsys/refinement.hpp"
#include "sepsys/shift.hpp"

namespace sepsys {

namespace {

constexpr std::size_t kKeptFailures = 5;

// Runs body(i) for i in [0, n) on `jobs` threads.
void parallel_for(int n, int jobs, const std::function<void(int)>& body) {
  if (jobs <= 1 || n <= 1) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  for (int j = 0; j < std::min(jobs, n); ++j)
    pool.emplace_back([&] {
      for (int i = next++; i < n; i = next++) body(i);
    });
  for (auto& t : pool) t.join();
}

// Tallies shared by every refinement run of the suite (criterion 6).
struct RunStats {
  std::mutex mutex;
  std::uint64_t runs = 0;
  std::uint64_t iterations = 0;
  std::uint64_t max_iterations = 0;
  std::uint64_t non_decreasing = 0;
  std::uint64_t combined_runs = 0;
  std::uint64_t combined_failures = 0;
  std::vector<std::string> errors;
  std::vector<std::string> combined_examples;
};

RunStats& stats() {
  static RunStats s;
  return s;
}

bool lex_less(const std::vector<int>& a, const std::vector<int>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Iteration cap of the refinement loop for a given start.
std::uint64_t cap_for(const STree& start, const StarFamily& f) {
  const std::uint64_t m = start.edge_count();
  return 10 * static_cast<std::uint64_t>(f.order_bound()) * m * m + 1000;
}

// Runs one refinement with tracing and records it for criterion 6.
std::optional<RefineResult> tracked(RefineMode mode, const STree& start,
                                    const StarFamily& f, const Universe& u,
                                    const std::string& label) {
  RefineOptions options;
  options.trace = true;
  try {
    RefineResult res = mode == RefineMode::kLinked ? refine_to_linked(start, f, u, options)
                       : mode == RefineMode::kLean ? refine_to_lean(start, f, u, options)
                                                   : refine_combined(start, f, u, options);
    std::uint64_t bad = 0;
    if (mode != RefineMode::kCombined)
      for (const auto& rec : res.trace)
        if (!rec.decreased ||
            !lex_less(rec.potential_after, rec.potential_before))
          ++bad;
    auto& s = stats();
    std::lock_guard<std::mutex> lock(s.mutex);
    ++s.runs;
    s.iterations += res.iterations;
    s.max_iterations = std::max(s.max_iterations, res.iterations);
    if (res.iterations > cap_for(start, f))
      s.errors.push_back(label + ": iterations above cap");
    s.non_decreasing += bad;
    if (mode == RefineMode::kCombined) {
      ++s.combined_runs;
      s.combined_failures += res.combined_failures.size();
      if (!res.combined_failures.empty() && s.combined_examples.size() < 3)
        s.combined_examples.push_back(label + ": " +
                                      res.combined_failures.front());
    }
    return res;
  } catch (const Error& e) {
    auto& s = stats();
    std::lock_guard<std::mutex> lock(s.mutex);
    ++s.runs;
    s.errors.push_back(label + ": " + e.what());
    return std::nullopt;
  }
}

struct Collector {
  std::mutex mutex;
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;
  std::vector<std::string> examples;

  void ok() {
    std::lock_guard<std::mutex> lock(mutex);
    ++checked;
  }
  void bad(const std::string& what) {
    std::lock_guard<std::mutex> lock(mutex);
    ++checked;
    ++failed;
    if (examples.size() < kKeptFailures) examples.push_back(what);
  }
  void check(bool cond, const std::string& what) {
    if (cond)
      ok();
    else
      bad(what);
  }
};

std::vector<int> identity_order(int n) {
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  return order;
}

MatroidTreeDecomposition path_tau(int size) {
  MatroidTreeDecomposition d;
  d.tree.vertex_count = size;
  for (int i = 0; i + 1 < size; ++i) d.tree.edges.emplace_back(i, i + 1);
  d.tau = identity_order(size);
  return d;
}

// Smallest k with the tree over make(k); the tree's label orders and star
// sizes are at most |V|, so k = |V| + 2 always suffices when any k does.
int smallest_k(const STree& tree, const Universe& u,
               StarFamily (*make)(int)) {
  for (int k = 1; k <= u.size() + 2; ++k)
    if (check_over_family(tree, make(k), u).ok) return k;
  return -1;
}

std::vector<Graph> graphs_up_to(int n, bool connected_only) {
  std::vector<Graph> out;
  for (int i = 1; i <= n; ++i)
    for (auto& g : connected_only ? connected_graphs(i) : all_graphs(i))
      out.push_back(g);
  return out;
}

void finish(CriterionResult& r, const Collector& c, const std::string& noun) {
  r.pass = c.failed == 0 && c.checked > 0;
  r.summary = std::to_string(c.checked - c.failed) + "/" +
              std::to_string(c.checked) + " " + noun;
  r.failures = c.examples;
}

// 1. Lean refinement of a single bag over F_{n+1} reaches treewidth.
CriterionResult criterion1(const AcceptanceOptions& o) {
  CriterionResult r;
  r.id = 1;
  r.title = "lean graph decompositions of treewidth width";
  std::vector<Graph> corpus;
  for (int n = 3; n <= o.max_n; ++n)
    for (auto& g : connected_graphs(n)) corpus.push_back(g);
  corpus.push_back(Graph::complete(8));
  for (auto& g : random_connected_graphs(8, o.random_graphs, o.seed))
    corpus.push_back(g);

  Collector width, lean, faithful;
  parallel_for(static_cast<int>(corpus.size()), o.jobs, [&](int i) {
    const Graph& g = corpus[i];
    const Universe u = Universe::of_graph(g);
    const int tw = brute_force_treewidth(g);
    const auto res = tracked(RefineMode::kLean, STree(1),
                             StarFamily::fk(g.vertex_count() + 1), u,
                             "c1 " + describe(g));
    if (!res) {
      width.bad(describe(g) + ": refinement raised");
      lean.bad(describe(g) + ": refinement raised");
    } else {
      const auto d = stree_to_treedecomp(res->tree, u);
      width.check(std::abs(d.width() - tw) <= kWidthTolerance,
                  describe(g) + ": width " + std::to_string(d.width()) +
                      ", treewidth " + std::to_string(tw));
      const auto rep = verify_lean_td(g, d);
      lean.check(rep.pass, describe(g) + ": " + rep.witness);
    }
    // Same run from an optimal start, over F_{tw+2}.
    const auto opt = elimination_decomposition(g, optimal_elimination_order(g));
    const auto res2 =
        tracked(RefineMode::kLean, treedecomp_to_stree(g, opt),
                StarFamily::fk(tw + 2), u, "c1* " + describe(g));
    if (!res2) {
      faithful.bad(describe(g) + ": refinement raised");
    } else {
      const auto d = stree_to_treedecomp(res2->tree, u);
      faithful.check(d.width() == tw && verify_lean_td(g, d).pass,
                     describe(g) + ": optimal start lost width or leanness");
    }
  });
  r.pass = width.failed == 0 && lean.failed == 0;
  r.summary = "single-bag start over F_{n+1}: width = tw on " +
              std::to_string(width.checked - width.failed) + "/" +
              std::to_string(width.checked) + ", lean on " +
              std::to_string(lean.checked - lean.failed) + "/" +
              std::to_string(lean.checked) +
              "; optimal start over F_{tw+2}: width = tw and lean on " +
              std::to_string(faithful.checked - faithful.failed) + "/" +
              std::to_string(faithful.checked);
  r.failures = width.examples;
  for (auto& e : lean.examples) r.failures.push_back(e);
  for (auto& e : faithful.examples) r.failures.push_back(e);
  return r;
}

// 2. Lean refinement of a single bag over matroid F_{r(E)+1}.
CriterionResult criterion2(const AcceptanceOptions& o) {
  CriterionResult r;
  r.id = 2;
  r.title = "lean matroid decompositions of matroid treewidth";
  const auto corpus = matroid_corpus(6, o.random_matroids, o.seed);
  Collector c, faithful;
  parallel_for(static_cast<int>(corpus.size()), o.jobs, [&](int i) {
    const auto& [name, m] = corpus[i];
    const Universe u = m.universe();
    {
      const int tw = brute_force_matroid_treewidth(m);
      const STree start =
          matroid_decomp_to_stree(optimal_matroid_decomposition(m), m);
      const auto res = tracked(RefineMode::kLean, start,
                               StarFamily::matroid_fk(tw + 1), u,
                               "c2* " + name);
      if (!res) {
        faithful.bad(name + ": refinement from optimal start raised");
      } else {
        const auto d = stree_to_matroid_decomp(res->tree, m);
        faithful.check(matroid_width(m, d) == tw &&
                           verify_matroid_lean(m, d).pass,
                       name + ": optimal start lost width or leanness");
      }
    }
    const auto res = tracked(RefineMode::kLean, STree(1),
                             StarFamily::matroid_fk(m.rank_of_ground() + 1), u,
                             "c2 " + name);
    if (!res) return c.bad(name + ": refinement raised");
    const auto d = stree_to_matroid_decomp(res->tree, m);
    const int w = matroid_width(m, d);
    const int tw = brute_force_matroid_treewidth(m);
    if (std::abs(w - tw) > kWidthTolerance)
      return c.bad(name + ": width " + std::to_string(w) + ", treewidth " +
                   std::to_string(tw));
    const auto rep = verify_matroid_lean(m, d);
    c.check(rep.pass, name + ": " + rep.witness);
  });
  r.pass = c.failed == 0 && c.checked > 0;
  r.summary = "single-bag start: " + std::to_string(c.checked - c.failed) +
              "/" + std::to_string(c.checked) +
              " lean at treewidth; optimal start over F_{tw+1}: " +
              std::to_string(faithful.checked - faithful.failed) + "/" +
              std::to_string(faithful.checked);
  r.failures = c.examples;
  for (auto& e : faithful.examples) r.failures.push_back(e);
  return r;
}

// 3. tw(G) = tw(M(G)).
CriterionResult criterion3(const AcceptanceOptions& o) {
  CriterionResult r;
  r.id = 3;
  r.title = "graph and cycle-matroid treewidth agree";
  std::vector<Graph> corpus;
  for (auto& g : graphs_up_to(5, true))
    if (g.edge_count() >= 1) corpus.push_back(g);
  Collector c;
  parallel_for(static_cast<int>(corpus.size()), o.jobs, [&](int i) {
    const Graph& g = corpus[i];
    const int a = brute_force_treewidth(g);
    const int b = brute_force_matroid_treewidth(Matroid::graphic(g));
    c.check(a == b, describe(g) + ": tw " + std::to_string(a) +
                        ", matroid tw " + std::to_string(b));
  });
  finish(r, c, "graphs");
  return r;
}

// 4. Linked refinement across families.
CriterionResult criterion4(const AcceptanceOptions& o) {
  CriterionResult r;
  r.id = 4;
  r.title = "linked refinement over F_k, P_k, T_k, matroid F_k";
  struct Job {
    std::string name;
    std::optional<Graph> graph;
    std::optional<Matroid> matroid;
    FamilyKind kind;
  };
  std::vector<Job> jobs;
  for (auto& g : graphs_up_to(6, true)) {
    jobs.push_back({"Fk " + describe(g), g, std::nullopt, FamilyKind::kFk});
    jobs.push_back({"Pk " + describe(g), g, std::nullopt, FamilyKind::kPk});
  }
  for (auto& g : graphs_up_to(7, true))
    if (g.edge_count() >= 2 && g.edge_count() <= 6)
      jobs.push_back({"Tk " + describe(g), g, std::nullopt, FamilyKind::kTk});
  for (auto& [name, m] : matroid_corpus(6, o.random_matroids, o.seed))
    jobs.push_back({"MFk " + name, std::nullopt, m, FamilyKind::kMatroidFk});

  Collector c;
  parallel_for(static_cast<int>(jobs.size()), o.jobs, [&](int i) {
    const Job& job = jobs[i];
    const Universe u =
        job.graph ? Universe::of_graph(*job.graph) : job.matroid->universe();
    STree start;
    switch (job.kind) {
      case FamilyKind::kFk:
        start = treedecomp_to_stree(
            *job.graph, elimination_decomposition(
                            *job.graph, identity_order(job.graph->vertex_count())));
        break;
      case FamilyKind::kPk:
        start = treedecomp_to_stree(
            *job.graph, path_decomposition(*job.graph,
                                           identity_order(job.graph->vertex_count())));
        break;
      case FamilyKind::kTk:
        start = caterpillar_branch_stree(*job.graph);
        break;
      default:
        start = matroid_decomp_to_stree(path_tau(job.matroid->size()),
                                        *job.matroid);
    }
    const auto before = validate_stree(start, u);
    StarFamily (*make)(int) = job.kind == FamilyKind::kFk   ? StarFamily::fk
                              : job.kind == FamilyKind::kPk ? StarFamily::pk
                              : job.kind == FamilyKind::kTk ? StarFamily::tk
                                                            : StarFamily::matroid_fk;
    const int k = smallest_k(start, u, make);
    if (k < 0) return c.bad(job.name + ": start is over no " + make(1).name());
    const StarFamily f = make(k);
    const auto res = tracked(RefineMode::kLinked, start, f, u, "c4 " + job.name);
    if (!res) return c.bad(job.name + ": refinement raised");
    const auto fam = check_over_family(res->tree, f, u);
    if (!fam.ok) return c.bad(job.name + ": output left the family: " + fam.message);
    const auto after = validate_stree(res->tree, u);
    if (after.max_order > k - 1 || after.max_order > before.max_order ||
        (job.kind != FamilyKind::kTk &&
         after.max_star_size > before.max_star_size))
      return c.bad(job.name + ": width grew");
    const auto rep = verify_linked_stree(res->tree, u);
    if (!rep.pass) return c.bad(job.name + ": " + rep.witness);
    if (job.kind == FamilyKind::kFk) {
      const auto td = verify_linked_td(*job.graph,
                                       stree_to_treedecomp(res->tree, u));
      if (!td.pass) return c.bad(job.name + ": decomposition " + td.witness);
    }
    c.ok();
  });
  finish(r, c, "linked outputs");
  return r;
}

// Trees over small universes used by the lemma checks.
struct LemmaCase {
  std::string name;
  Universe universe;
  std::vector<STree> trees;
  std::vector<std::pair<StarFamily, std::vector<STree>>> families;
};

std::vector<LemmaCase> lemma_cases(const AcceptanceOptions& o) {
  std::vector<LemmaCase> out;
  for (auto& g : graphs_up_to(5, false)) {
    Universe u = Universe::of_graph(g);
    LemmaCase lc{describe(g), u, {}, {}};
    const auto order = identity_order(g.vertex_count());
    const STree elim =
        treedecomp_to_stree(g, elimination_decomposition(g, order));
    const STree opt = treedecomp_to_stree(
        g, elimination_decomposition(g, optimal_elimination_order(g)));
    const STree path = treedecomp_to_stree(g, path_decomposition(g, order));
    lc.trees = {elim, opt, path};
    lc.families.push_back({StarFamily::fk(smallest_k(elim, u, StarFamily::fk)), {elim}});
    lc.families.push_back({StarFamily::fk(smallest_k(opt, u, StarFamily::fk)), {opt}});
    lc.families.push_back({StarFamily::pk(smallest_k(path, u, StarFamily::pk)), {path}});
    const auto rep = validate_stree(opt, u);
    lc.families.push_back(
        {StarFamily::ftheta(rep.max_order + 1, rep.max_star_size + 1), {opt}});
    if (g.edge_count() >= 2) {
      const STree branch = caterpillar_branch_stree(g);
      lc.trees.push_back(branch);
      lc.families.push_back(
          {StarFamily::tk(smallest_k(branch, u, StarFamily::tk)), {branch}});
    }
    out.push_back(std::move(lc));
  }
  for (auto& [name, m] : matroid_corpus(6, o.random_matroids, o.seed)) {
    Universe u = m.universe();
    const STree path = matroid_decomp_to_stree(path_tau(m.size()), m);
    const int k = smallest_k(path, u, StarFamily::matroid_fk);
    out.push_back({name, u, {path}, {{StarFamily::matroid_fk(k), {path}}}});
  }
  return out;
}

// 5. The lemma suite.
CriterionResult criterion5(const AcceptanceOptions& o) {
  CriterionResult r;
  r.id = 5;
  r.title = "lemma suite";
  const auto cases = lemma_cases(o);
  Collector un, corner, corner_crossing, sepstar, starint, shifting, stable;
  parallel_for(static_cast<int>(cases.size()), o.jobs, [&](int i) {
    const LemmaCase& lc = cases[i];
    const Universe& u = lc.universe;
    const auto all = u.enumerate();

    std::pair<Separation, Separation> cex;
    un.check(u.is_grounded_exhaustive(&cex),
             lc.name + ": grounded fails at " + cex.first.to_string() + " " +
                 cex.second.to_string());

    bool corner_ok = true, crossing_ok = true;
    std::string corner_witness, crossing_witness;
    for (const auto& a : all) {
      std::vector<const Separation*> near;
      for (const auto& c : all)
        if (nested(a, c)) near.push_back(&c);
      for (const Separation* c : near) {
        for (const Separation* e : near) {
          const Separation corners[] = {join(*c, *e), meet(*c, *e),
                                        join(*c, invert(*e)),
                                        meet(*c, invert(*e))};
          for (const auto& x : corners) {
            if (nested(a, x)) continue;
            const std::string w = a.to_string() + " " + c->to_string() + " " +
                                  e->to_string();
            if (corner_ok) corner_witness = w;
            corner_ok = false;
            if (!nested(*c, *e)) {
              if (crossing_ok) crossing_witness = w;
              crossing_ok = false;
            }
          }
        }
      }
    }
    corner.check(corner_ok, lc.name + ": " + corner_witness);
    corner_crossing.check(crossing_ok, lc.name + ": " + crossing_witness);

    // Stars of the corpus trees and every single separation.
    std::vector<std::vector<Separation>> stars;
    for (const auto& t : lc.trees)
      for (int v = 0; v < t.vertex_count(); ++v) stars.push_back(t.star(v));
    stars.push_back({});
    for (const auto& s : all) stars.push_back({s});
    bool sep_ok = true, stable_ok = true;
    std::string sep_witness, stable_witness;
    for (const auto& sigma : stars) {
      const int size = u.star_size(sigma);
      for (const auto& s : sigma)
        if (size < u.order(s) && sep_ok) {
          sep_ok = false;
          sep_witness = "star smaller than member order";
        }
      for (const auto& s : all) {
        auto bigger = sigma;
        bigger.push_back(s);
        if (!is_star(bigger)) continue;
        if (size < u.rank(s.left) && sep_ok) {
          sep_ok = false;
          sep_witness = "star smaller than r(A) for " + s.to_string();
        }
        if (u.star_size(bigger) > size && stable_ok) {
          stable_ok = false;
          stable_witness = "adding " + s.to_string() + " grew the star";
        }
      }
    }
    sepstar.check(sep_ok, lc.name + ": " + sep_witness);
    stable.check(stable_ok, lc.name + ": " + stable_witness);

    // Chains Z_0..Z_n (n <= 3) with Z*_i ∪ Z_{i+1} = V, all X.
    const Subset ground = u.ground().all();
    bool chain_ok = true;
    std::string chain_witness;
    std::function<void(std::vector<Subset>&, Subset)> extend =
        [&](std::vector<Subset>& z, Subset prefix) {
          for_each_subset(ground, [&](Subset x) {
            if (!chain_ok) return;
            int lhs = 0;
            for (Subset zi : z) lhs += u.rank(zi & x);
            const int n = static_cast<int>(z.size()) - 1;
            if (lhs < u.rank(prefix & x) + n * u.rank(x)) {
              chain_ok = false;
              chain_witness = "chain of length " + std::to_string(n + 1) +
                              " with X=" + x.to_string();
            }
          });
          if (z.size() == 4 || !chain_ok) return;
          // Z_{i+1} must contain every element outside the prefix meet.
          for_each_subset(prefix, [&](Subset extra) {
            z.push_back((ground - prefix) | extra);
            extend(z, prefix & z.back());
            z.pop_back();
          });
        };
    for_each_subset(ground, [&](Subset z0) {
      std::vector<Subset> z{z0};
      extend(z, z0);
    });
    starint.check(chain_ok, lc.name + ": " + chain_witness);

    for (const auto& [f, trees] : lc.families) {
      const auto rep = is_fixed_under_shifting_sample(f, u, trees);
      shifting.check(rep.ok, lc.name + " " + f.name() + ": " + rep.witness);
    }
  });
  const std::pair<const char*, const Collector*> parts[] = {
      {"grounded", &un},         {"corner nesting", &corner},
      {"corner nesting for crossing pairs", &corner_crossing},
      {"star size bounds", &sepstar}, {"chain inequality", &starint},
      {"shifts", &shifting}, {"stability", &stable}};
  r.pass = true;
  std::ostringstream os;
  for (const auto& [name, c] : parts) {
    if (c != &corner_crossing)
      r.pass = r.pass && c->failed == 0 && c->checked > 0;
    os << name << ' ' << (c->checked - c->failed) << '/' << c->checked << ' ';
    for (auto& e : c->examples) r.failures.push_back(std::string(name) + " " + e);
  }
  r.summary = os.str() + "over " + std::to_string(cases.size()) + " universes";
  return r;
}

// 6. Termination, potentials and claim assertions, plus combined runs.
CriterionResult criterion6(const AcceptanceOptions& o) {
  CriterionResult r;
  r.id = 6;
  r.title = "potential decrease and runtime claims";
  std::vector<Graph> corpus = graphs_up_to(6, true);
  parallel_for(static_cast<int>(corpus.size()), o.jobs, [&](int i) {
    const Graph& g = corpus[i];
    const Universe u = Universe::of_graph(g);
    const auto f = StarFamily::fk(g.vertex_count() + 1);
    tracked(RefineMode::kCombined, STree(1), f, u, "c6 " + describe(g));
    const auto start = treedecomp_to_stree(
        g, elimination_decomposition(g, identity_order(g.vertex_count())));
    const auto rep = validate_stree(start, u);
    const auto fk = StarFamily::fk(std::max(rep.max_order, rep.max_star_size) + 1);
    tracked(RefineMode::kLean, start, fk, u, "c6 lean " + describe(g));
    tracked(RefineMode::kCombined, start, fk, u, "c6 combined " + describe(g));
  });
  auto& s = stats();
  std::lock_guard<std::mutex> lock(s.mutex);
  r.pass = s.errors.empty() && s.non_decreasing == 0 &&
           s.combined_failures == 0 && s.runs > 0;
  r.summary = std::to_string(s.runs) + " runs, " +
              std::to_string(s.iterations) + " iterations (max " +
              std::to_string(s.max_iterations) + "), " +
              std::to_string(s.errors.size()) + " raised, " +
              std::to_string(s.non_decreasing) +
              " non-decreasing steps; combined: " +
              std::to_string(s.combined_failures) +
              " non-decreasing steps in " + std::to_string(s.combined_runs) +
              " runs";
  r.failures = s.errors;
  if (r.failures.size() > kKeptFailures) r.failures.resize(kKeptFailures);
  for (auto& e : s.combined_examples) r.failures.push_back("combined " + e);
  return r;
}

// 7. Flow against exhaustive interval minimization.
CriterionResult criterion7(const AcceptanceOptions& o) {
  CriterionResult r;
  r.id = 7;
  r.title = "flow connectivity matches exhaustive search";
  const auto corpus = graphs_up_to(6, false);
  Collector pairs, cuts;
  parallel_for(static_cast<int>(corpus.size()), o.jobs, [&](int i) {
    const Graph& g = corpus[i];
    const Universe u = Universe::of_graph(g);
    const auto all = u.enumerate();
    std::uint64_t agree = 0;
    std::string witness;
    for (const auto& lo : all)
      for (const auto& hi : all) {
        if (!leq(lo, hi)) continue;
        const int a = lambda_flow(g, lo, hi);
        const int b = u.lambda_interval(lo, hi).value;
        const int c = lambda_brute(u, lo, hi);
        if (a == b && b == c)
          ++agree;
        else if (witness.empty())
          witness = lo.to_string() + " " + hi.to_string() + ": flow " +
                    std::to_string(a) + ", interval " + std::to_string(b) +
                    ", brute " + std::to_string(c);
      }
    pairs.check(witness.empty(), describe(g) + ": " + witness);
    const Subset v = g.vertices();
    bool cut_ok = true;
    std::string cut_witness;
    for_each_subset(v, [&](Subset s) {
      if (s.empty() || !cut_ok) return;
      for_each_subset(v, [&](Subset t) {
        if (t.empty() || !cut_ok) return;
        const auto res = menger(g, s, t);
        const Subset left = v - res.cut;
        const bool separates =
            !g.reachable(s - res.cut, left).intersects(t - res.cut);
        if (res.count != res.cut.count() || !separates) {
          cut_ok = false;
          cut_witness = s.to_string() + " " + t.to_string();
        }
      });
    });
    cuts.check(cut_ok, describe(g) + ": cut mismatch at " + cut_witness);
  });
  r.pass = pairs.failed == 0 && cuts.failed == 0;
  r.summary = std::to_string(pairs.checked - pairs.failed) + "/" +
              std::to_string(pairs.checked) + " graphs agree on every pair, " +
              std::to_string(cuts.checked - cuts.failed) + "/" +
              std::to_string(cuts.checked) + " graphs with exact cuts";
  r.failures = pairs.examples;
  for (auto& e : cuts.examples) r.failures.push_back(e);
  return r;
}

// 8. Conversions between decompositions and S-trees.
CriterionResult criterion8(const AcceptanceOptions& o) {
  CriterionResult r;
  r.id = 8;
  r.title = "decomposition and S-tree round trips";
  const auto corpus = graphs_up_to(6, true);
  Collector graph_trips, tree_trips, widths, matroid_trips;
  std::atomic<std::uint64_t> already_canonical{0}, refined_trees{0};
  parallel_for(static_cast<int>(corpus.size()), o.jobs, [&](int i) {
    const Graph& g = corpus[i];
    const Universe u = Universe::of_graph(g);
    const auto order = identity_order(g.vertex_count());
    std::vector<GraphTreeDecomposition> decomps = {
        elimination_decomposition(g, order),
        elimination_decomposition(g, optimal_elimination_order(g)),
        path_decomposition(g, order)};
    const auto lean = refine_to_lean(STree(1),
                                     StarFamily::fk(g.vertex_count() + 1), u);
    const auto linked = refine_to_linked(treedecomp_to_stree(g, decomps[0]),
                                         StarFamily::fk(g.vertex_count() + 1),
                                         u);
    decomps.push_back(stree_to_treedecomp(lean.tree, u));
    for (const auto& d : decomps) {
      const STree t = treedecomp_to_stree(g, d);
      graph_trips.check(stree_to_treedecomp(t, u) == d,
                        describe(g) + ": decomposition round trip differs");
      const int w = d.width();
      const auto rep = validate_stree(t, u);
      widths.check(rep.max_star_size == w + 1 &&
                       check_over_family(t, StarFamily::fk(w + 2), u).ok &&
                       !check_over_family(t, StarFamily::fk(w + 1), u).ok,
                   describe(g) + ": width " + std::to_string(w) +
                       " does not match the star sizes");
    }
    for (const STree* t : {&lean.tree, &linked.tree}) {
      ++refined_trees;
      const auto d = stree_to_treedecomp(*t, u);
      const STree canon = treedecomp_to_stree(g, d);
      if (canon == *t) ++already_canonical;
      tree_trips.check(
          treedecomp_to_stree(g, stree_to_treedecomp(canon, u)) == canon &&
              d.width() + 1 == validate_stree(*t, u).max_star_size,
          describe(g) + ": s-tree round trip is not the identity on its "
                        "canonical form");
    }
  });
  const auto matroids = matroid_corpus(6, o.random_matroids, o.seed);
  parallel_for(static_cast<int>(matroids.size()), o.jobs, [&](int i) {
    const auto& [name, m] = matroids[i];
    const Universe u = m.universe();
    const auto start = path_tau(m.size());
    const auto lean = refine_to_lean(
        STree(1), StarFamily::matroid_fk(m.rank_of_ground() + 1), u);
    for (const auto& d : {start, stree_to_matroid_decomp(lean.tree, m)}) {
      const STree t = matroid_decomp_to_stree(d, m);
      bool ok = stree_to_matroid_decomp(t, m) == d;
      for (int v = 0; v < t.vertex_count(); ++v)
        ok = ok && matroid_bag_width(m, d, v) == u.star_size(t.star(v));
      matroid_trips.check(ok, name + ": matroid round trip or width differs");
    }
    matroid_trips.check(
        matroid_decomp_to_stree(stree_to_matroid_decomp(lean.tree, m), m) ==
            lean.tree,
        name + ": refined matroid s-tree is not reproduced");
  });
  r.pass = graph_trips.failed == 0 && tree_trips.failed == 0 &&
           widths.failed == 0 && matroid_trips.failed == 0;
  r.summary = "decomposition trips " +
              std::to_string(graph_trips.checked - graph_trips.failed) + "/" +
              std::to_string(graph_trips.checked) + ", s-tree trips " +
              std::to_string(tree_trips.checked - tree_trips.failed) + "/" +
              std::to_string(tree_trips.checked) + " (" +
              std::to_string(already_canonical.load()) + "/" +
              std::to_string(refined_trees.load()) +
              " refined trees already canonical), widths " +
              std::to_string(widths.checked - widths.failed) + "/" +
              std::to_string(widths.checked) + ", matroid " +
              std::to_string(matroid_trips.checked - matroid_trips.failed) +
              "/" + std::to_string(matroid_trips.checked);
  for (const Collector* c : {&graph_trips, &tree_trips, &widths, &matroid_trips})
    for (auto& e : c->examples) r.failures.push_back(e);
  return r;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options) {
  using Fn = CriterionResult (*)(const AcceptanceOptions&);
  const Fn criteria[] = {criterion1, criterion2, criterion3, criterion4,
                         criterion5, criterion6, criterion7, criterion8};
  std::vector<CriterionResult> out;
  for (int id = 1; id <= 8; ++id) {
    if (!options.only.empty() && !options.only.count(id)) continue;
    const auto t0 = std::chrono::steady_clock::now();
    CriterionResult r;
    try {
      r = criteria[id - 1](options);
    } catch (const std::exception& e) {
      r.id = id;
      r.title = "criterion " + std::to_string(id);
      r.pass = false;
      r.summary = std::string("raised: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                              t0)
                    .count();
    if (id == 1 && r.seconds > kCriterion1Seconds) {
      r.pass = false;
      r.summary += "; over the time budget";
    }
    if (id == 2 && r.seconds > kCriterion2Seconds) {
      r.pass = false;
      r.summary += "; over the time budget";
    }
    if (options.progress) options.progress(format_line(r));
    out.push_back(std::move(r));
  }
  return out;
}

std::string format_line(const CriterionResult& r) {
  char time[32];
  std::snprintf(time, sizeof time, "%.1fs", r.seconds);
  return std::string(r.pass ? "PASS " : "FAIL ") + std::to_string(r.id) + " " +
         r.title + ": " + r.summary + " (" + time + ")";
}

}  // namespace sepsys

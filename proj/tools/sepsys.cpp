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

// Command-line front end: width, refine, verify and corpus.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sepsys/acceptance.hpp"
#include "sepsys/error.hpp"
#include "sepsys/family.hpp"
#include "sepsys/instances.hpp"
#include "sepsys/io.hpp"
#include "sepsys/oracles.hpp"
#include "sepsys/refinement.hpp"
#include "sepsys/stree.hpp"

namespace {

using namespace sepsys;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

// Relative output paths land under SEPSYS_OUTPUT_DIR when it is set.
std::string output_path(const std::string& path) {
  const char* dir = std::getenv("SEPSYS_OUTPUT_DIR");
  if (dir == nullptr || *dir == '\0' || std::filesystem::path(path).is_absolute())
    return path;
  return (std::filesystem::path(dir) / path).string();
}

void print(const Json& j) { std::cout << j.dump(2) << '\n'; }

bool is_stree_json(const Json& j) { return j.is_object() && j.contains("alpha"); }

// ---- width ----------------------------------------------------------------

struct WidthArgs {
  std::string input;
  std::vector<std::string> measures;
};

int cmd_width(const WidthArgs& a) {
  const Instance inst = read_instance(a.input);
  std::vector<std::string> measures = a.measures;
  if (measures.empty())
    measures = inst.graph ? std::vector<std::string>{"tw", "pw", "bw"}
                          : std::vector<std::string>{"tw", "bw"};
  Json out;
  out["input"] = inst.graph ? "graph" : "matroid";
  for (const auto& m : measures) {
    if (inst.graph) {
      if (m == "tw") out["tw"] = brute_force_treewidth(*inst.graph);
      else if (m == "pw") out["pw"] = brute_force_pathwidth(*inst.graph);
      else out["bw"] = brute_force_branchwidth(*inst.graph);
    } else {
      require(m != "pw", ErrorKind::kInvalidInput,
              "path-width is defined for graphs only");
      if (m == "tw") out["tw"] = brute_force_matroid_treewidth(*inst.matroid);
      else out["bw"] = brute_force_branchwidth(*inst.matroid);
    }
  }
  print(out);
  return kExitPass;
}

// ---- refine ---------------------------------------------------------------

struct RefineArgs {
  std::string input;
  std::string mode = "lean";
  std::string family = "fk";
  std::optional<int> k;
  std::optional<int> theta;
  std::string start = "single";
  std::string decomposition;
  std::string out;
  std::string stree_out;
  std::string trace;
  std::uint64_t budget = kDefaultVerifyBudget;
};

FamilyKind parse_family(const std::string& s) {
  if (s == "fk") return FamilyKind::kFk;
  if (s == "pk") return FamilyKind::kPk;
  if (s == "tk") return FamilyKind::kTk;
  if (s == "ftheta") return FamilyKind::kFTheta;
  return FamilyKind::kMatroidFk;
}

StarFamily make_family(FamilyKind kind, int k, int theta) {
  switch (kind) {
    case FamilyKind::kFk:
      return StarFamily::fk(k);
    case FamilyKind::kPk:
      return StarFamily::pk(k);
    case FamilyKind::kTk:
      return StarFamily::tk(k);
    case FamilyKind::kFTheta:
      return StarFamily::ftheta(theta, k);
    default:
      return StarFamily::matroid_fk(k);
  }
}

STree single_bag_start(const Instance& inst, FamilyKind kind) {
  if (inst.matroid) {
    MatroidTreeDecomposition d;
    d.tau.assign(inst.matroid->size(), 0);
    return matroid_decomp_to_stree(d, *inst.matroid);
  }
  if (kind == FamilyKind::kTk) return caterpillar_branch_stree(*inst.graph);
  GraphTreeDecomposition d;
  d.bags = {inst.graph->vertices()};
  return treedecomp_to_stree(*inst.graph, d);
}

STree optimal_start(const Instance& inst, FamilyKind kind) {
  if (inst.matroid)
    return matroid_decomp_to_stree(optimal_matroid_decomposition(*inst.matroid),
                                   *inst.matroid);
  const Graph& g = *inst.graph;
  require(kind != FamilyKind::kTk, ErrorKind::kPrecondition,
          "no optimal start is available for tk; use --start single or file");
  if (kind == FamilyKind::kPk)
    return treedecomp_to_stree(g, path_decomposition(g, optimal_path_order(g)));
  return treedecomp_to_stree(
      g, elimination_decomposition(g, optimal_elimination_order(g)));
}

STree file_start(const Instance& inst, const std::string& path) {
  const Json j = read_json_file(path);
  if (is_stree_json(j)) {
    int size = 0;
    STree tree = stree_from_json(j, &size);
    const int expected =
        inst.graph ? inst.graph->vertex_count() : inst.matroid->size();
    require(size == expected, ErrorKind::kInvalidInput,
            "s-tree ground size does not match the instance");
    return tree;
  }
  if (inst.graph) {
    const auto d = graph_decomposition_from_json(j);
    const auto v = validate_decomposition(*inst.graph, d);
    require(v.ok, ErrorKind::kInvalidInput, "start decomposition: " + v.message);
    return treedecomp_to_stree(*inst.graph, d);
  }
  const auto d = matroid_decomposition_from_json(j);
  const auto v = validate_decomposition(*inst.matroid, d);
  require(v.ok, ErrorKind::kInvalidInput, "start decomposition: " + v.message);
  return matroid_decomp_to_stree(d, *inst.matroid);
}

// Smallest k (or p, for ftheta) whose family contains the start.
int smallest_k(const STree& tree, const Universe& u, FamilyKind kind,
               int theta) {
  for (int k = kind == FamilyKind::kFTheta ? theta : 1; k <= u.size() + 2; ++k)
    if (check_over_family(tree, make_family(kind, k, theta), u).ok) return k;
  fail(ErrorKind::kPrecondition, "the start lies over no " +
                                     std::string(to_string(kind)) +
                                     " family with k <= |V|+2");
}

std::vector<Report> verify_output(const Instance& inst, const STree& tree,
                                  const StarFamily& f, const Universe& u,
                                  RefineMode mode, std::uint64_t budget) {
  std::vector<Report> reports;
  const bool linked = mode != RefineMode::kLean;
  const bool lean = mode != RefineMode::kLinked;
  if (inst.matroid) {
    const auto d = stree_to_matroid_decomp(tree, *inst.matroid);
    reports.push_back(verify_valid(*inst.matroid, d));
    if (linked) reports.push_back(verify_linked_stree(tree, u));
    if (lean) reports.push_back(verify_matroid_lean(*inst.matroid, d));
    return reports;
  }
  const Graph& g = *inst.graph;
  if (f.kind == FamilyKind::kTk) {
    const auto fam = check_over_family(tree, f, u);
    reports.push_back(Report{"valid", fam.ok, fam.message, {}});
    if (linked) reports.push_back(verify_linked_stree(tree, u));
    if (lean) reports.push_back(verify_lean_stree(tree, f, u));
    return reports;
  }
  const auto d = stree_to_treedecomp(tree, u);
  reports.push_back(verify_valid(g, d));
  if (linked) {
    reports.push_back(verify_linked_stree(tree, u));
    if (f.kind == FamilyKind::kFk) reports.push_back(verify_linked_td(g, d));
  }
  if (lean) {
    if (f.kind == FamilyKind::kFk)
      reports.push_back(verify_lean_td(g, d, budget));
    else if (f.kind == FamilyKind::kFTheta)
      reports.push_back(verify_theta_lean(g, d, f.theta, budget));
    else
      reports.push_back(verify_lean_stree(tree, f, u));
  }
  return reports;
}

int cmd_refine(const RefineArgs& a) {
  const Instance inst = read_instance(a.input);
  const FamilyKind kind = parse_family(a.family);
  require((kind == FamilyKind::kMatroidFk) == inst.matroid.has_value(),
          ErrorKind::kInvalidInput,
          "matroid-fk needs a matroid (.json) input and the graph families "
          "need a graph input");
  require(kind != FamilyKind::kFTheta || a.theta.has_value(),
          ErrorKind::kInvalidInput, "ftheta needs --theta");
  const int theta = a.theta.value_or(0);
  const RefineMode mode = a.mode == "linked" ? RefineMode::kLinked
                          : a.mode == "lean" ? RefineMode::kLean
                                             : RefineMode::kCombined;
  const Universe u =
      inst.graph ? Universe::of_graph(*inst.graph) : inst.matroid->universe();

  const std::string start_kind = a.decomposition.empty() ? a.start : "file";
  require(start_kind != "file" || !a.decomposition.empty(),
          ErrorKind::kInvalidInput, "--start file needs --decomposition");
  const STree start = start_kind == "single"    ? single_bag_start(inst, kind)
                      : start_kind == "optimal" ? optimal_start(inst, kind)
                                                : file_start(inst, a.decomposition);
  const auto shape = validate_stree(start, u);
  require(shape.valid(), ErrorKind::kInvalidInput,
          "start s-tree: " + shape.message);

  const int k = a.k ? *a.k : smallest_k(start, u, kind, theta);
  const StarFamily f = make_family(kind, k, theta);
  const auto fam = check_over_family(start, f, u);
  require(fam.ok, ErrorKind::kPrecondition,
          "start is not over " + f.name() + ": " + fam.message);

  RefineOptions options;
  options.trace = !a.trace.empty();
  const RefineResult res = mode == RefineMode::kLinked
                               ? refine_to_linked(start, f, u, options)
                           : mode == RefineMode::kLean
                               ? refine_to_lean(start, f, u, options)
                               : refine_combined(start, f, u, options);

  Json summary;
  summary["family"] = f.name();
  summary["k"] = k;
  if (kind == FamilyKind::kFTheta) summary["theta"] = theta;
  summary["mode"] = to_string(mode);
  summary["start"] = start_kind;
  summary["iterations"] = res.iterations;
  summary["linked_steps"] = res.linked_steps;
  summary["lean_steps"] = res.lean_steps;
  if (mode == RefineMode::kCombined)
    summary["combined_non_decreasing"] = res.combined_failures.size();

  Json output;
  if (kind == FamilyKind::kTk) {
    summary["width"] = branch_width_of(res.tree, u);
    output = stree_to_json(res.tree, u.size());
  } else if (inst.matroid) {
    const auto d = stree_to_matroid_decomp(res.tree, *inst.matroid);
    summary["width"] = matroid_width(*inst.matroid, d);
    output = to_json(d);
  } else {
    const auto d = stree_to_treedecomp(res.tree, u);
    summary["width"] = d.width();
    output = to_json(d);
  }

  bool pass = true;
  Json checks = Json::array();
  for (const auto& r : verify_output(inst, res.tree, f, u, mode, a.budget)) {
    pass = pass && r.pass;
    checks.push_back(to_json(r));
  }
  summary["verification"] = checks;
  summary["pass"] = pass;

  if (pass) {
    if (!a.out.empty())
      write_text_file(output_path(a.out), output.dump(2) + "\n");
    else
      summary["decomposition"] = output;
    if (!a.stree_out.empty())
      write_text_file(output_path(a.stree_out),
                      stree_to_json(res.tree, u.size()).dump(2) + "\n");
    if (!a.trace.empty()) {
      std::string lines;
      for (const auto& r : res.trace) lines += to_json(r).dump() + "\n";
      write_text_file(output_path(a.trace), lines);
    }
  }
  print(summary);
  return pass ? kExitPass : kExitFail;
}

// ---- verify ---------------------------------------------------------------

struct VerifyArgs {
  std::string input;
  std::string decomposition;
  std::string property = "valid";
  std::optional<int> theta;
  std::uint64_t budget = kDefaultVerifyBudget;
};

Report verify_stree_file(const Instance& inst, const Json& j,
                         const std::string& property) {
  require(property == "valid" || property == "linked",
          ErrorKind::kInvalidInput,
          "s-tree inputs support --property valid or linked");
  int size = 0;
  const STree tree = stree_from_json(j, &size);
  const Universe u =
      inst.graph ? Universe::of_graph(*inst.graph) : inst.matroid->universe();
  require(size == u.size(), ErrorKind::kInvalidInput,
          "s-tree ground size does not match the instance");
  const auto shape = validate_stree(tree, u);
  if (property == "valid" || !shape.valid())
    return Report{"valid", shape.valid(), shape.message, {}};
  return verify_linked_stree(tree, u);
}

int cmd_verify(const VerifyArgs& a) {
  const Instance inst = read_instance(a.input);
  const Json j = read_json_file(a.decomposition);
  Report report;
  if (is_stree_json(j)) {
    report = verify_stree_file(inst, j, a.property);
  } else if (inst.matroid) {
    const auto d = matroid_decomposition_from_json(j);
    const auto valid = verify_valid(*inst.matroid, d);
    if (a.property == "valid" || !valid.pass) {
      report = valid;
    } else if (a.property == "linked") {
      const STree tree = matroid_decomp_to_stree(d, *inst.matroid);
      report = verify_linked_stree(tree, inst.matroid->universe());
    } else if (a.property == "matroid-lean" || a.property == "lean") {
      report = verify_matroid_lean(*inst.matroid, d);
    } else {
      fail(ErrorKind::kInvalidInput,
           "property " + a.property + " applies to graph decompositions");
    }
  } else {
    const Graph& g = *inst.graph;
    const auto d = graph_decomposition_from_json(j);
    const auto valid = verify_valid(g, d);
    if (a.property == "valid" || !valid.pass) {
      report = valid;
    } else if (a.property == "linked") {
      report = verify_linked_td(g, d);
    } else if (a.property == "lean") {
      report = verify_lean_td(g, d, a.budget);
    } else if (a.property == "theta-lean") {
      require(a.theta.has_value(), ErrorKind::kInvalidInput,
              "theta-lean needs --theta");
      report = verify_theta_lean(g, d, *a.theta, a.budget);
    } else {
      fail(ErrorKind::kInvalidInput,
           "matroid-lean needs a matroid (.json) input");
    }
  }
  print(to_json(report));
  return report.pass ? kExitPass : kExitFail;
}

// ---- corpus ---------------------------------------------------------------

int cmd_corpus(AcceptanceOptions options, const std::vector<int>& only) {
  options.only.insert(only.begin(), only.end());
  options.progress = [](const std::string& line) {
    std::cout << line << std::endl;
  };
  bool all = true;
  for (const auto& r : run_acceptance(options)) {
    all = all && r.pass;
    for (const auto& f : r.failures) std::cout << "    " << f << '\n';
  }
  return all ? kExitPass : kExitFail;
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kIterationCap:
    case ErrorKind::kInternalInvariant:
      return kExitFail;
    default:
      return kExitInput;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"separation systems: widths, refinement and verification"};
  app.require_subcommand(1);

  WidthArgs width;
  auto* w = app.add_subcommand("width", "exact widths of a graph or matroid");
  w->add_option("input", width.input, "edge list, .col or matroid .json")
      ->required();
  w->add_option("--measure", width.measures, "tw, pw or bw (default: all)")
      ->check(CLI::IsMember({"tw", "pw", "bw"}));

  RefineArgs refine;
  auto* r = app.add_subcommand("refine", "refine to a linked or lean tree");
  r->add_option("input", refine.input, "edge list, .col or matroid .json")
      ->required();
  r->add_option("--mode", refine.mode)
      ->check(CLI::IsMember({"linked", "lean", "combined"}));
  r->add_option("--family", refine.family)
      ->check(CLI::IsMember({"fk", "pk", "tk", "ftheta", "matroid-fk"}));
  r->add_option("--k", refine.k, "family parameter (p for ftheta)")
      ->check(CLI::PositiveNumber);
  r->add_option("--theta", refine.theta)->check(CLI::PositiveNumber);
  r->add_option("--start", refine.start)
      ->check(CLI::IsMember({"single", "optimal", "file"}));
  r->add_option("--decomposition", refine.decomposition,
                "start decomposition or s-tree JSON");
  r->add_option("--out", refine.out, "refined decomposition JSON");
  r->add_option("--stree-out", refine.stree_out, "refined s-tree JSON");
  r->add_option("--trace", refine.trace, "per-iteration JSONL trace");
  r->add_option("--budget", refine.budget, "verification budget");

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "check a decomposition");
  v->add_option("input", verify.input, "edge list, .col or matroid .json")
      ->required();
  v->add_option("decomposition", verify.decomposition,
                "decomposition or s-tree JSON")
      ->required();
  v->add_option("--property", verify.property)
      ->check(CLI::IsMember(
          {"valid", "linked", "lean", "theta-lean", "matroid-lean"}));
  v->add_option("--theta", verify.theta)->check(CLI::PositiveNumber);
  v->add_option("--budget", verify.budget);

  AcceptanceOptions corpus;
  std::vector<int> only;
  auto* c = app.add_subcommand("corpus", "run the acceptance suite");
  c->add_option("--max-n", corpus.max_n)->check(CLI::Range(3, 7));
  c->add_option("--random-graphs", corpus.random_graphs)
      ->check(CLI::NonNegativeNumber);
  c->add_option("--seed", corpus.seed);
  c->add_option("--jobs", corpus.jobs)->check(CLI::Range(1, 64));
  c->add_option("--only", only, "criteria to run")->check(CLI::Range(1, 8));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitInput;
  }

  try {
    if (*w) return cmd_width(width);
    if (*r) return cmd_refine(refine);
    if (*v) return cmd_verify(verify);
    return cmd_corpus(corpus, only);
  } catch (const Error& e) {
    std::cerr << "sepsys: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "sepsys: " << e.what() << '\n';
    return kExitInput;
  }
}

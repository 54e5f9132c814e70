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

// Prints one PASS/FAIL line per acceptance criterion.

#include <iostream>

#include "CLI11.hpp"
#include "sepsys/acceptance.hpp"

int main(int argc, char** argv) {
  sepsys::AcceptanceOptions options;
  std::vector<int> only;
  CLI::App app{"sepsys acceptance suite"};
  app.add_option("--max-n", options.max_n, "largest exhaustive graph order")
      ->check(CLI::Range(3, 7));
  app.add_option("--random-graphs", options.random_graphs,
                 "random 8-vertex graphs for criterion 1")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--seed", options.seed, "seed for the random instances");
  app.add_option("--jobs", options.jobs, "worker threads")
      ->check(CLI::Range(1, 64));
  app.add_option("--only", only, "criteria to run")->check(CLI::Range(1, 8));
  bool verbose = false;
  app.add_flag("-v,--verbose", verbose, "print counterexamples");
  CLI11_PARSE(app, argc, argv);
  options.only.insert(only.begin(), only.end());

  bool all = true;
  options.progress = [](const std::string& line) {
    std::cout << line << std::endl;
  };
  for (const auto& r : sepsys::run_acceptance(options)) {
    all = all && r.pass;
    if (verbose || !r.pass)
      for (const auto& f : r.failures) std::cout << "    " << f << '\n';
  }
  return all ? 0 : 1;
}

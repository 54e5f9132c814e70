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

#ifndef SEPSYS_ACCEPTANCE_HPP_
#define SEPSYS_ACCEPTANCE_HPP_

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

namespace sepsys {

/// Pinned tolerances. Every width and connectivity comparison is exact.
inline constexpr int kWidthTolerance = 0;
inline constexpr double kCriterion1Seconds = 600.0;
inline constexpr double kCriterion2Seconds = 900.0;

struct AcceptanceOptions {
  int max_n = 7;               // largest exhaustive graph order, criterion 1
  int random_graphs = 12;      // random n = 8 samples, criterion 1
  int random_matroids = 5;     // random GF(2) matroids, criterion 2
  std::uint64_t seed = 20240521;
  int jobs = 1;
  std::set<int> only;  // empty runs all eight
  std::function<void(const std::string&)> progress;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string summary;
  std::vector<std::string> failures;  // first few counterexamples
  double seconds = 0;
};

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options);

/// "PASS 3 <title>: <summary> (1.2s)"
std::string format_line(const CriterionResult& r);

}  // namespace sepsys

#endif  // SEPSYS_ACCEPTANCE_HPP_

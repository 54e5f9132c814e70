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

#ifndef SEPSYS_FAMILY_HPP_
#define SEPSYS_FAMILY_HPP_

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "sepsys/separation.hpp"
#include "sepsys/stree.hpp"
#include "sepsys/universe.hpp"

namespace sepsys {

enum class FamilyKind { kFk, kPk, kTk, kFTheta, kMatroidFk, kCustom };

const char* to_string(FamilyKind kind);

/// A family of stars. k bounds orders and star sizes for Fk, Pk and
/// MatroidFk; Tk bounds only orders. FTheta bounds orders by theta and
/// sizes by p.
struct StarFamily {
  using Predicate =
      std::function<bool(std::span<const Separation>, const Universe&)>;

  FamilyKind kind = FamilyKind::kFk;
  int k = 1;
  int theta = 0;
  int p = 0;
  std::string custom_name;
  Predicate custom;

  static StarFamily fk(int k);
  static StarFamily pk(int k);
  static StarFamily tk(int k);
  static StarFamily ftheta(int theta, int p);
  static StarFamily matroid_fk(int k);
  static StarFamily make_custom(std::string name, Predicate pred);

  /// Every label of a tree over the family has order below this.
  int order_bound() const;
  std::string name() const;
};

/// Membership of a multiset of separations in the family.
bool family_contains(std::span<const Separation> sigma, const StarFamily& f,
                     const Universe& u);

struct AddableOptions {
  std::size_t budget = 1u << 16;
  /// Consider every separation of the universe (ground size <= 5) instead of
  /// the (Z,V) and (A,E∖A) forms.
  bool exhaustive = false;
};

/// Separations addable at t: σ_t plus the separation is in the family.
/// Throws kBudgetExceeded when more than options.budget candidates exist.
std::vector<Separation> addable_candidates(const STree& tree, int t,
                                           const StarFamily& f,
                                           const Universe& u,
                                           const AddableOptions& options = {});

/// Candidate list for a star given directly (tree-free form).
std::vector<Separation> addable_candidates(std::span<const Separation> sigma,
                                           const StarFamily& f,
                                           const Universe& u,
                                           const AddableOptions& options = {});

struct FamilyReport {
  bool ok = true;
  int max_order = 0;
  int max_star_size = 0;
  int bad_vertex = -1;
  std::string message;
};

/// Checks that the tree is a valid tame S_k-tree over f.
FamilyReport check_over_family(const STree& tree, const StarFamily& f,
                               const Universe& u);

}  // namespace sepsys

#endif  // SEPSYS_FAMILY_HPP_

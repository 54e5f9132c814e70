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

#ifndef SEPSYS_SHIFT_HPP_
#define SEPSYS_SHIFT_HPP_

#include <optional>
#include <string>
#include <vector>

#include "sepsys/family.hpp"
#include "sepsys/stree.hpp"
#include "sepsys/universe.hpp"

namespace sepsys {

struct ShiftResult {
  STree tree;
  /// vertex_origin[v] is the vertex of the source tree that v copies.
  std::vector<int> vertex_origin;
  /// edge_origin[e] is the source edge of e; arcs keep their parity.
  std::vector<int> edge_origin;
  /// The copy of the base arc; its label is the target.
  Arc base = -1;
  /// The copy of tail(base arc), whose star is the singleton {(Y,X)}.
  int tail = -1;
};

/// The shift of (T, α) onto target with respect to base: the subtree
/// T(base) with every arc f >= base relabelled α(f) ∨ target.
/// Requires α(base) <= target.
ShiftResult shift(const STree& tree, Arc base, const Separation& target);

/// True iff target is linked to s: s <= target and |target| = λ(s, target).
bool linked_to(const Universe& u, const Separation& s,
               const Separation& target);

struct ShiftingReport {
  bool ok = true;
  std::uint64_t shifts = 0;
  std::uint64_t stars_checked = 0;
  std::string witness;
};

/// For every tree, arc, and linked target: the shifted tree is tame, every
/// shifted star at a non-tail vertex is in f, no edge order increases, and
/// no star grows.
ShiftingReport is_fixed_under_shifting_sample(const StarFamily& f,
                                              const Universe& u,
                                              const std::vector<STree>& trees);

}  // namespace sepsys

#endif  // SEPSYS_SHIFT_HPP_

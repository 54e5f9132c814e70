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

#ifndef SEPSYS_SEPARATION_HPP_
#define SEPSYS_SEPARATION_HPP_

#include <compare>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "sepsys/subset.hpp"

namespace sepsys {

/// An oriented separation (A,B) of a ground set: left = A, right = B.
///
/// Ordering by operator< is the canonical encoding (left bits, then right
/// bits); every minimizer selection breaks ties with it.
struct Separation {
  Subset left;
  Subset right;

  friend constexpr bool operator==(const Separation&,
                                   const Separation&) = default;
  friend constexpr auto operator<=>(const Separation&,
                                    const Separation&) = default;

  std::string to_string() const;
};

constexpr Separation invert(const Separation& s) { return {s.right, s.left}; }

/// (A,B) <= (C,D) iff A ⊆ C and B ⊇ D.
constexpr bool leq(const Separation& a, const Separation& b) {
  return a.left.subset_of(b.left) && b.right.subset_of(a.right);
}

/// Supremum (A ∪ C, B ∩ D).
constexpr Separation join(const Separation& a, const Separation& b) {
  return {a.left | b.left, a.right & b.right};
}

/// Infimum (A ∩ C, B ∪ D).
constexpr Separation meet(const Separation& a, const Separation& b) {
  return {a.left & b.left, a.right | b.right};
}

/// Two separations are nested if some orientations are comparable.
constexpr bool nested(const Separation& a, const Separation& b) {
  return leq(a, b) || leq(a, invert(b)) || leq(invert(a), b) ||
         leq(invert(a), invert(b));
}

/// Star test over a multiset: (A,B) <= (D,C) for every 2-element
/// sub-multiset {(A,B),(C,D)}; a repeated separation is compared with its
/// own inverse.
bool is_star(std::span<const Separation> members);

/// Canonical multiset form: sorted by the canonical encoding.
std::vector<Separation> canonical_multiset(std::vector<Separation> members);

struct SeparationHash {
  std::size_t operator()(const Separation& s) const {
    const std::uint64_t h =
        s.left.bits() * 0x9E3779B97F4A7C15ULL ^ (s.right.bits() + 0x632BE59BD9B4E019ULL);
    return std::hash<std::uint64_t>{}(h ^ (h >> 29));
  }
};

struct SeparationPairHash {
  std::size_t operator()(const std::pair<Separation, Separation>& p) const {
    SeparationHash h;
    return h(p.first) * 31 + h(p.second);
  }
};

}  // namespace sepsys

#endif  // SEPSYS_SEPARATION_HPP_

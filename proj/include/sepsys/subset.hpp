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

#ifndef SEPSYS_SUBSET_HPP_
#define SEPSYS_SUBSET_HPP_

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "sepsys/error.hpp"

namespace sepsys {

inline constexpr int kMaxGroundSize = 64;

/// A subset of a ground set {0, ..., n-1}, n <= 64, stored as a bit-vector.
/// The ground size is carried by the owning GroundSet/Universe, not by the
/// subset itself.
class Subset {
 public:
  constexpr Subset() = default;
  constexpr explicit Subset(std::uint64_t bits) : bits_(bits) {}

  static Subset of(std::initializer_list<int> elements) {
    Subset s;
    for (int e : elements) s.insert(e);
    return s;
  }
  static Subset from_indices(const std::vector<int>& elements);

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int count() const { return std::popcount(bits_); }
  constexpr bool contains(int e) const { return (bits_ >> e) & 1U; }
  constexpr bool subset_of(Subset other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool intersects(Subset other) const {
    return (bits_ & other.bits_) != 0;
  }

  void insert(int e) { bits_ |= std::uint64_t{1} << e; }
  void erase(int e) { bits_ &= ~(std::uint64_t{1} << e); }

  /// Lowest element; undefined on the empty set.
  constexpr int front() const { return std::countr_zero(bits_); }

  std::vector<int> indices() const;
  std::string to_string() const;

  friend constexpr Subset operator|(Subset a, Subset b) {
    return Subset(a.bits_ | b.bits_);
  }
  friend constexpr Subset operator&(Subset a, Subset b) {
    return Subset(a.bits_ & b.bits_);
  }
  /// Set difference.
  friend constexpr Subset operator-(Subset a, Subset b) {
    return Subset(a.bits_ & ~b.bits_);
  }
  Subset& operator|=(Subset b) {
    bits_ |= b.bits_;
    return *this;
  }
  Subset& operator&=(Subset b) {
    bits_ &= b.bits_;
    return *this;
  }

  friend constexpr bool operator==(Subset, Subset) = default;
  friend constexpr auto operator<=>(Subset a, Subset b) {
    return a.bits_ <=> b.bits_;
  }

 private:
  std::uint64_t bits_ = 0;
};

/// The ground set {0, ..., size-1}.
class GroundSet {
 public:
  explicit GroundSet(int size);

  int size() const { return size_; }
  Subset all() const { return all_; }
  Subset complement(Subset s) const { return all_ - s; }
  bool contains(Subset s) const { return s.subset_of(all_); }

  friend bool operator==(const GroundSet&, const GroundSet&) = default;

 private:
  int size_;
  Subset all_;
};

/// Calls f(sub) for every sub ⊆ mask in increasing numeric order.
template <typename F>
void for_each_subset(Subset mask, F&& f) {
  const std::uint64_t m = mask.bits();
  std::uint64_t s = 0;
  while (true) {
    f(Subset(s));
    if (s == m) break;
    s = (s - m) & m;
  }
}

/// Calls f(sub) for every sub ⊆ mask with |sub| == k, increasing order.
template <typename F>
void for_each_subset_of_size(Subset mask, int k, F&& f) {
  for_each_subset(mask, [&](Subset s) {
    if (s.count() == k) f(s);
  });
}

template <typename F>
void for_each_element(Subset s, F&& f) {
  std::uint64_t b = s.bits();
  while (b != 0) {
    f(std::countr_zero(b));
    b &= b - 1;
  }
}

}  // namespace sepsys

#endif  // SEPSYS_SUBSET_HPP_

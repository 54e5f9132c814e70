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

#include "sepsys/separation.hpp"

#include <algorithm>
#include <sstream>

#include "sepsys/error.hpp"
#include "sepsys/subset.hpp"

namespace sepsys {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kPrecondition:
      return "precondition violated";
    case ErrorKind::kInvalidInput:
      return "invalid input";
    case ErrorKind::kCapExceeded:
      return "size cap exceeded";
    case ErrorKind::kBudgetExceeded:
      return "budget exceeded";
    case ErrorKind::kIterationCap:
      return "iteration cap exceeded";
    case ErrorKind::kInternalInvariant:
      return "internal invariant failed";
  }
  return "error";
}

Subset Subset::from_indices(const std::vector<int>& elements) {
  Subset s;
  for (int e : elements) {
    require(e >= 0 && e < kMaxGroundSize, ErrorKind::kInvalidInput,
            "element index out of range: " + std::to_string(e));
    s.insert(e);
  }
  return s;
}

std::vector<int> Subset::indices() const {
  std::vector<int> out;
  out.reserve(count());
  for_each_element(*this, [&](int e) { out.push_back(e); });
  return out;
}

std::string Subset::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for_each_element(*this, [&](int e) {
    if (!first) os << ',';
    os << e;
    first = false;
  });
  os << '}';
  return os.str();
}

GroundSet::GroundSet(int size) : size_(size) {
  require(size >= 0 && size <= kMaxGroundSize, ErrorKind::kCapExceeded,
          "ground sets hold at most 64 elements, got " + std::to_string(size));
  all_ = Subset(size == 64 ? ~std::uint64_t{0}
                           : (std::uint64_t{1} << size) - 1);
}

std::string Separation::to_string() const {
  return "(" + left.to_string() + "," + right.to_string() + ")";
}

bool is_star(std::span<const Separation> members) {
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j < members.size(); ++j) {
      if (i == j) continue;
      if (!leq(members[i], invert(members[j]))) return false;
    }
  }
  return true;
}

std::vector<Separation> canonical_multiset(std::vector<Separation> members) {
  std::sort(members.begin(), members.end());
  return members;
}

}  // namespace sepsys

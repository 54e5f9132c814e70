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

#include "sepsys/family.hpp"

#include <algorithm>

#include "sepsys/error.hpp"

namespace sepsys {

const char* to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::kFk:
      return "fk";
    case FamilyKind::kPk:
      return "pk";
    case FamilyKind::kTk:
      return "tk";
    case FamilyKind::kFTheta:
      return "ftheta";
    case FamilyKind::kMatroidFk:
      return "matroid-fk";
    case FamilyKind::kCustom:
      return "custom";
  }
  return "unknown";
}

StarFamily StarFamily::fk(int k) {
  require(k >= 1, ErrorKind::kInvalidInput, "k must be at least 1");
  StarFamily f;
  f.kind = FamilyKind::kFk;
  f.k = k;
  return f;
}

StarFamily StarFamily::pk(int k) {
  StarFamily f = fk(k);
  f.kind = FamilyKind::kPk;
  return f;
}

StarFamily StarFamily::tk(int k) {
  StarFamily f = fk(k);
  f.kind = FamilyKind::kTk;
  return f;
}

StarFamily StarFamily::ftheta(int theta, int p) {
  require(theta >= 1 && theta <= p, ErrorKind::kInvalidInput,
          "need 1 <= theta <= p");
  StarFamily f;
  f.kind = FamilyKind::kFTheta;
  f.k = p;
  f.theta = theta;
  f.p = p;
  return f;
}

StarFamily StarFamily::matroid_fk(int k) {
  StarFamily f = fk(k);
  f.kind = FamilyKind::kMatroidFk;
  return f;
}

StarFamily StarFamily::make_custom(std::string name, Predicate pred) {
  StarFamily f;
  f.kind = FamilyKind::kCustom;
  f.k = 64;
  f.custom_name = std::move(name);
  f.custom = std::move(pred);
  return f;
}

int StarFamily::order_bound() const {
  return kind == FamilyKind::kFTheta ? theta : k;
}

std::string StarFamily::name() const {
  switch (kind) {
    case FamilyKind::kFTheta:
      return "F^" + std::to_string(theta) + "_" + std::to_string(p);
    case FamilyKind::kCustom:
      return custom_name;
    default:
      return std::string(to_string(kind)) + "(" + std::to_string(k) + ")";
  }
}

namespace {

bool orders_below(std::span<const Separation> sigma, const Universe& u,
                  int bound) {
  return std::all_of(sigma.begin(), sigma.end(), [&](const Separation& s) {
    return u.order(s) < bound;
  });
}

bool covers_graph(std::span<const Separation> sigma, const Graph& g) {
  Subset covered;
  for (const auto& s : sigma) covered |= s.left;
  if (covered != g.vertices()) return false;
  for (auto [a, b] : g.edges()) {
    const bool inside = std::any_of(
        sigma.begin(), sigma.end(), [&](const Separation& s) {
          return s.left.contains(a) && s.left.contains(b);
        });
    if (!inside) return false;
  }
  return true;
}

}  // namespace

bool family_contains(std::span<const Separation> sigma, const StarFamily& f,
                     const Universe& u) {
  if (f.kind == FamilyKind::kCustom) return f.custom(sigma, u);
  if (!is_star(sigma)) return false;
  for (const auto& s : sigma)
    if (!u.contains(s)) return false;
  switch (f.kind) {
    case FamilyKind::kFk:
      return orders_below(sigma, u, f.k) && u.star_size_unchecked(sigma) < f.k;
    case FamilyKind::kPk:
      return sigma.size() <= 2 && orders_below(sigma, u, f.k) &&
             u.star_size_unchecked(sigma) < f.k;
    case FamilyKind::kTk:
      require(u.graph() != nullptr, ErrorKind::kPrecondition,
              "tk needs a graph universe");
      if (sigma.size() == 3)
        return orders_below(sigma, u, f.k) && covers_graph(sigma, *u.graph());
      return sigma.size() == 1 && orders_below(sigma, u, f.k) &&
             u.star_size_unchecked(sigma) < f.k;
    case FamilyKind::kFTheta:
      return orders_below(sigma, u, f.theta) &&
             u.star_size_unchecked(sigma) < f.p;
    case FamilyKind::kMatroidFk:
      require(u.kind() == UniverseKind::kBipartitions,
              ErrorKind::kPrecondition, "matroid-fk needs bipartitions");
      return orders_below(sigma, u, f.k) && u.star_size_unchecked(sigma) < f.k;
    case FamilyKind::kCustom:
      break;
  }
  return false;
}

std::vector<Separation> addable_candidates(std::span<const Separation> sigma,
                                           const StarFamily& f,
                                           const Universe& u,
                                           const AddableOptions& options) {
  std::vector<Separation> out;
  if (f.kind == FamilyKind::kTk) return out;
  std::vector<Separation> extended(sigma.begin(), sigma.end());
  extended.emplace_back();
  auto consider = [&](const Separation& s) {
    extended.back() = s;
    if (family_contains(extended, f, u)) {
      require(out.size() < options.budget, ErrorKind::kBudgetExceeded,
              "more than " + std::to_string(options.budget) +
                  " addable candidates");
      out.push_back(s);
    }
  };
  if (options.exhaustive) {
    require(u.size() <= 5, ErrorKind::kCapExceeded,
            "exhaustive addability is limited to 5 elements");
    for (const auto& s : u.enumerate(5)) consider(s);
    return out;
  }
  if (f.kind == FamilyKind::kPk && sigma.size() >= 2) return out;
  Subset interior = u.ground().all();
  for (const auto& s : sigma) interior &= s.right;
  require(interior.count() < 63 &&
              (std::uint64_t{1} << interior.count()) <= options.budget,
          ErrorKind::kBudgetExceeded,
          "interior of " + std::to_string(interior.count()) +
              " elements exceeds the candidate budget");
  const bool bipartitions = u.kind() == UniverseKind::kBipartitions;
  for_each_subset(interior, [&](Subset z) {
    consider(Separation{z, bipartitions ? u.ground().complement(z)
                                        : u.ground().all()});
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Separation> addable_candidates(const STree& tree, int t,
                                           const StarFamily& f,
                                           const Universe& u,
                                           const AddableOptions& options) {
  const auto sigma = tree.star(t);
  return addable_candidates(sigma, f, u, options);
}

FamilyReport check_over_family(const STree& tree, const StarFamily& f,
                               const Universe& u) {
  FamilyReport r;
  const auto base = validate_stree(tree, u);
  r.max_order = base.max_order;
  r.max_star_size = base.max_star_size;
  if (!base.valid()) {
    r.ok = false;
    r.message = base.message;
    return r;
  }
  if (r.max_order >= f.order_bound()) {
    r.ok = false;
    r.message = "label of order " + std::to_string(r.max_order) +
                " is not below " + std::to_string(f.order_bound());
    return r;
  }
  for (int t = 0; t < tree.vertex_count(); ++t) {
    const auto sigma = tree.star(t);
    if (!family_contains(sigma, f, u)) {
      r.ok = false;
      r.bad_vertex = t;
      r.message = "star at vertex " + std::to_string(t) + " is not in " +
                  f.name();
      return r;
    }
  }
  return r;
}

}  // namespace sepsys

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

#include "sepsys/rank.hpp"

#include <mutex>
#include <numeric>
#include <random>
#include <unordered_map>

#include "sepsys/error.hpp"

namespace sepsys {

const char* to_string(RankKind kind) {
  switch (kind) {
    case RankKind::kCardinality:
      return "cardinality";
    case RankKind::kGraphic:
      return "graphic";
    case RankKind::kUniform:
      return "uniform";
    case RankKind::kLinear:
      return "linear";
    case RankKind::kUserTable:
      return "user-table";
  }
  return "unknown";
}

struct RankOracle::Cache {
  std::function<int(Subset)> eval;
  std::vector<int> table;  // full table when eager
  std::mutex mutex;
  std::unordered_map<std::uint64_t, int> lazy;
};

RankOracle::RankOracle(RankKind kind, int ground_size,
                       std::function<int(Subset)> eval)
    : kind_(kind),
      ground_size_(ground_size),
      cache_(std::make_shared<Cache>()) {
  GroundSet ground(ground_size);  // range check
  cache_->eval = std::move(eval);
  if (kind_ != RankKind::kCardinality && ground_size <= kEagerTableLimit) {
    cache_->table.resize(std::size_t{1} << ground_size);
    for (std::uint64_t b = 0; b < cache_->table.size(); ++b)
      cache_->table[b] = cache_->eval(Subset(b));
  }
}

int RankOracle::operator()(Subset x) const {
  if (kind_ == RankKind::kCardinality) return x.count();
  if (!cache_->table.empty()) return cache_->table[x.bits()];
  std::lock_guard<std::mutex> lock(cache_->mutex);
  auto it = cache_->lazy.find(x.bits());
  if (it != cache_->lazy.end()) return it->second;
  const int value = cache_->eval(x);
  cache_->lazy.emplace(x.bits(), value);
  return value;
}

RankOracle cardinality_rank(int ground_size) {
  return RankOracle(RankKind::kCardinality, ground_size,
                    [](Subset x) { return x.count(); });
}

RankOracle graphic_rank(const Graph& g) {
  auto edges = g.edges();
  const int n = g.vertex_count();
  return RankOracle(
      RankKind::kGraphic, g.edge_count(), [edges, n](Subset x) {
        std::vector<int> parent(n);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int v) {
          while (parent[v] != v) v = parent[v] = parent[parent[v]];
          return v;
        };
        int rank = 0;
        for_each_element(x, [&](int e) {
          const int a = find(edges[e].first);
          const int b = find(edges[e].second);
          if (a != b) {
            parent[a] = b;
            ++rank;
          }
        });
        return rank;
      });
}

RankOracle uniform_rank(int rank, int ground_size) {
  require(rank >= 0 && rank <= ground_size, ErrorKind::kInvalidInput,
          "uniform matroid needs 0 <= r <= n");
  return RankOracle(RankKind::kUniform, ground_size,
                    [rank](Subset x) { return std::min(x.count(), rank); });
}

namespace {

bool is_small_prime(int p) { return p == 2 || p == 3 || p == 5 || p == 7; }

int inverse_mod(int a, int p) {
  for (int b = 1; b < p; ++b)
    if ((a * b) % p == 1) return b;
  fail(ErrorKind::kInternalInvariant, "no inverse mod p");
}

}  // namespace

RankOracle linear_rank(const std::vector<std::vector<int>>& matrix,
                       int prime) {
  require(is_small_prime(prime), ErrorKind::kInvalidInput,
          "linear matroids use a prime field with p <= 7");
  require(!matrix.empty() && !matrix[0].empty(), ErrorKind::kInvalidInput,
          "linear matroid matrix is empty");
  const std::size_t cols = matrix[0].size();
  for (const auto& row : matrix) {
    require(row.size() == cols, ErrorKind::kInvalidInput,
            "linear matroid matrix is ragged");
    for (int v : row)
      require(v >= 0 && v < prime, ErrorKind::kInvalidInput,
              "matrix entry not reduced mod p");
  }
  return RankOracle(
      RankKind::kLinear, static_cast<int>(cols), [matrix, prime](Subset x) {
        // Gaussian elimination on the selected columns, stored as rows.
        std::vector<std::vector<int>> vecs;
        for_each_element(x, [&](int c) {
          std::vector<int> v(matrix.size());
          for (std::size_t r = 0; r < matrix.size(); ++r) v[r] = matrix[r][c];
          vecs.push_back(std::move(v));
        });
        int rank = 0;
        const std::size_t width = matrix.size();
        for (std::size_t col = 0; col < width && rank < (int)vecs.size();
             ++col) {
          int pivot = -1;
          for (int i = rank; i < (int)vecs.size(); ++i)
            if (vecs[i][col] != 0) {
              pivot = i;
              break;
            }
          if (pivot < 0) continue;
          std::swap(vecs[rank], vecs[pivot]);
          const int inv = inverse_mod(vecs[rank][col], prime);
          for (auto& v : vecs[rank]) v = (v * inv) % prime;
          for (int i = 0; i < (int)vecs.size(); ++i) {
            if (i == rank || vecs[i][col] == 0) continue;
            const int f = vecs[i][col];
            for (std::size_t k = 0; k < width; ++k)
              vecs[i][k] = ((vecs[i][k] - f * vecs[rank][k]) % prime + prime) %
                           prime;
          }
          ++rank;
        }
        return rank;
      });
}

RankOracle user_table_rank(int ground_size, std::vector<int> values) {
  require(ground_size <= 24, ErrorKind::kCapExceeded,
          "user tables are limited to 24 elements");
  require(values.size() == (std::size_t{1} << ground_size),
          ErrorKind::kInvalidInput, "user table must have 2^n entries");
  return RankOracle(RankKind::kUserTable, ground_size,
                    [values = std::move(values)](Subset x) {
                      return values[x.bits()];
                    });
}

std::string RankCheckReport::describe() const {
  switch (violation) {
    case Violation::kNone:
      return "valid";
    case Violation::kNegative:
      return "negative value at " + x.to_string();
    case Violation::kNotMonotone:
      return "monotonicity violated: r(" + x.to_string() + ") > r(" +
             y.to_string() + ")";
    case Violation::kNotSubmodular:
      return "submodularity violated at X=" + x.to_string() +
             " Y=" + y.to_string();
  }
  return "unknown";
}

namespace {

// Checks one base set: non-negativity, single-element monotonicity and the
// local exchange inequality r(X+a) + r(X+b) >= r(X+a+b) + r(X).
bool check_at(const RankOracle& r, Subset all, Subset x,
              RankCheckReport& report) {
  const int rx = r(x);
  if (rx < 0) {
    report.violation = RankCheckReport::Violation::kNegative;
    report.x = x;
    return false;
  }
  const Subset outside = all - x;
  bool ok = true;
  for_each_element(outside, [&](int a) {
    if (!ok) return;
    const Subset xa = x | Subset::of({a});
    const int rxa = r(xa);
    if (rx > rxa) {
      report.violation = RankCheckReport::Violation::kNotMonotone;
      report.x = x;
      report.y = xa;
      ok = false;
      return;
    }
    for_each_element(outside, [&](int b) {
      if (!ok || b <= a) return;
      const Subset xb = x | Subset::of({b});
      if (rxa + r(xb) < r(xa | xb) + rx) {
        report.violation = RankCheckReport::Violation::kNotSubmodular;
        report.x = xa;
        report.y = xb;
        ok = false;
      }
    });
  });
  ++report.checked;
  return ok;
}

}  // namespace

RankCheckReport check_rank_oracle(const RankOracle& r,
                                  const RankCheckOptions& options) {
  RankCheckReport report;
  const GroundSet ground(r.ground_size());
  if (r.ground_size() <= options.exhaustive_cap) {
    for_each_subset(ground.all(), [&](Subset x) {
      if (report.valid()) check_at(r, ground.all(), x, report);
    });
    return report;
  }
  require(options.allow_sampling, ErrorKind::kCapExceeded,
          "ground set of " + std::to_string(r.ground_size()) +
              " elements exceeds the exhaustive cap; enable sampling");
  report.sampled = true;
  std::mt19937_64 rng(options.seed);
  for (std::uint64_t i = 0; i < options.samples && report.valid(); ++i) {
    const Subset x(rng() & ground.all().bits());
    check_at(r, ground.all(), x, report);
  }
  return report;
}

}  // namespace sepsys

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

#include "sepsys/flow.hpp"

#include <array>
#include <vector>

#include "sepsys/error.hpp"

namespace sepsys {

namespace {

// Unit vertex capacities via splitting: node 2v is v_in, 2v+1 is v_out,
// then a source and a sink.
class SplitNetwork {
 public:
  explicit SplitNetwork(int n) : n_(n), head_(2 * n + 2, -1) {}

  int source() const { return 2 * n_; }
  int sink() const { return 2 * n_ + 1; }

  void add_arc(int from, int to, int cap) {
    arcs_.push_back({to, cap, head_[from]});
    head_[from] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({from, 0, head_[to]});
    head_[to] = static_cast<int>(arcs_.size()) - 1;
  }

  int max_flow() {
    int flow = 0;
    std::vector<int> via(head_.size());
    while (true) {
      std::fill(via.begin(), via.end(), -1);
      std::vector<int> queue{source()};
      via[source()] = -2;
      for (std::size_t i = 0; i < queue.size() && via[sink()] == -1; ++i) {
        const int x = queue[i];
        for (int a = head_[x]; a != -1; a = arcs_[a].next) {
          const int y = arcs_[a].to;
          if (arcs_[a].cap > 0 && via[y] == -1) {
            via[y] = a;
            queue.push_back(y);
          }
        }
      }
      if (via[sink()] == -1) return flow;
      for (int y = sink(); y != source(); y = arcs_[via[y] ^ 1].to) {
        arcs_[via[y]].cap -= 1;
        arcs_[via[y] ^ 1].cap += 1;
      }
      ++flow;
    }
  }

  std::vector<char> residual_reachable() const {
    std::vector<char> seen(head_.size(), 0);
    std::vector<int> stack{source()};
    seen[source()] = 1;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int a = head_[x]; a != -1; a = arcs_[a].next) {
        const int y = arcs_[a].to;
        if (arcs_[a].cap > 0 && !seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
      }
    }
    return seen;
  }

 private:
  struct Arc {
    int to;
    int cap;
    int next;
  };

  int n_;
  std::vector<int> head_;
  std::vector<Arc> arcs_;
};

constexpr int kInfinite = 1 << 20;

}  // namespace

MengerResult menger(const Graph& g, Subset s, Subset t, Subset within) {
  require(!s.empty() && !t.empty(), ErrorKind::kPrecondition,
          "menger needs nonempty S and T");
  require(s.subset_of(within) && t.subset_of(within),
          ErrorKind::kPrecondition, "S and T must lie inside the allowed set");
  const int n = g.vertex_count();
  SplitNetwork net(n);
  for_each_element(within, [&](int v) {
    net.add_arc(2 * v, 2 * v + 1, 1);
    if (s.contains(v)) net.add_arc(net.source(), 2 * v, kInfinite);
    if (t.contains(v)) net.add_arc(2 * v + 1, net.sink(), kInfinite);
    for_each_element(g.neighbours(v) & within,
                     [&](int w) { net.add_arc(2 * v + 1, 2 * w, kInfinite); });
  });
  MengerResult r;
  r.count = net.max_flow();
  const auto seen = net.residual_reachable();
  for_each_element(within, [&](int v) {
    if (seen[2 * v] && !seen[2 * v + 1]) r.cut.insert(v);
  });
  return r;
}

int lambda_flow(const Graph& g, const Separation& lo, const Separation& hi) {
  require(leq(lo, hi), ErrorKind::kPrecondition,
          "lambda_flow needs lo <= hi");
  const Subset s = lo.left & lo.right;
  const Subset t = hi.left & hi.right;
  if (s.empty() || t.empty()) return 0;
  return menger(g, s, t, lo.right & hi.left).count;
}

}  // namespace sepsys

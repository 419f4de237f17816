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

#include "uavnet/planner.h"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <numeric>
#include <string>

#include "uavnet/parallel.h"

namespace uavnet {
namespace {

int ISqrt(int x) {
  int r = static_cast<int>(std::sqrt(static_cast<double>(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

double Seconds(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

// Union-find for Kruskal.
class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int Find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool Unite(int a, int b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<int> parent_;
};

RootTrace RunRoot(int root, PlanningContext& ctx, KnapsackMode mode) {
  RootTrace t;
  t.root = root;
  const std::vector<int> v_j = ConstrainedMaxThroughput(root, ctx, mode);
  const HopField& field = ctx.hops().Get(root);
  for (int v : v_j) t.knapsack_cost += field.dist[v];
  t.v_prime = v_j;
  t.v_prime.insert(
      std::lower_bound(t.v_prime.begin(), t.v_prime.end(), root), root);
  t.s_j = ConnectViaMst(t.v_prime, ctx.hops(), &t.tree);
  t.s_prime = GreedyAugment(t.s_j, ctx.k(), ctx.graph(), ctx.Oracle());
  t.value = ctx.F(t.s_prime);
  return t;
}

}  // namespace

PlanningContext::PlanningContext(const Scenario& scenario,
                                 const RateTable& rates, const NetGraph& graph)
    : scenario_(scenario), rates_(rates), graph_(graph), hops_(graph) {
  if (rates.num_sites() != scenario.num_sites() ||
      graph.num_sites() != scenario.num_sites() ||
      rates.num_users() != scenario.num_users()) {
    throw std::invalid_argument(
        "scenario, rate table and graph dimensions disagree");
  }
}

int ComputeDBound(int k) {
  if (k < 2) throw std::invalid_argument("D is defined for K >= 2");
  const int even = 2 * ISqrt(k - 1);
  int odd = ISqrt(4 * k - 3);
  if (odd % 2 == 0) --odd;
  return std::max(even, odd);
}

std::vector<int> ConstrainedMaxThroughput(int root, PlanningContext& ctx,
                                          KnapsackMode mode) {
  const HopField& field = ctx.hops().Get(root);
  KnapsackInstance inst;
  inst.budget = ctx.k() - 1;
  for (int v = 0; v < ctx.graph().num_sites(); ++v) {
    if (v == root || field.dist[v] == kUnreachable) continue;
    if (field.dist[v] > inst.budget) continue;
    inst.ground.push_back(v);
    inst.cost.push_back(field.dist[v]);
  }
  inst.oracle = [&ctx, root](std::span<const int> set) {
    std::vector<int> with_root(set.begin(), set.end());
    with_root.insert(
        std::lower_bound(with_root.begin(), with_root.end(), root), root);
    return ctx.F(with_root);
  };
  return MaximizeUnderKnapsack(inst, mode);
}

MetricTree MetricMst(std::span<const int> nodes, HopCache& hops) {
  MetricTree tree;
  tree.nodes.assign(nodes.begin(), nodes.end());
  std::sort(tree.nodes.begin(), tree.nodes.end());
  tree.nodes.erase(std::unique(tree.nodes.begin(), tree.nodes.end()),
                   tree.nodes.end());
  const int n = static_cast<int>(tree.nodes.size());
  std::vector<std::tuple<int, int, int>> edges;  // (hops, i, j), i < j
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const int d = hops.Distance(tree.nodes[i], tree.nodes[j]);
      if (d == kUnreachable) {
        throw NoPathError("sites " + std::to_string(tree.nodes[i]) + " and " +
                          std::to_string(tree.nodes[j]) +
                          " are not connected in the site graph");
      }
      edges.emplace_back(d, i, j);
    }
  }
  std::sort(edges.begin(), edges.end());
  DisjointSets dsu(n);
  for (const auto& [d, i, j] : edges) {
    if (!dsu.Unite(i, j)) continue;
    tree.edges.emplace_back(tree.nodes[i], tree.nodes[j], d);
    tree.total_weight += d;
  }
  return tree;
}

std::vector<int> ConnectViaMst(std::span<const int> v_prime, HopCache& hops,
                               MetricTree* tree) {
  MetricTree mst = MetricMst(v_prime, hops);
  std::vector<int> nodes = mst.nodes;
  for (const auto& [a, b, d] : mst.edges) {
    const std::vector<int> path = hops.Path(a, b);
    nodes.insert(nodes.end(), path.begin(), path.end());
  }
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  if (tree != nullptr) *tree = std::move(mst);
  return nodes;
}

Plan FinalizePlan(PlanningContext& ctx, std::vector<int> sites,
                  std::string algo) {
  std::sort(sites.begin(), sites.end());
  sites.erase(std::unique(sites.begin(), sites.end()), sites.end());
  Plan plan;
  plan.sites = std::move(sites);
  plan.assignment = MaxAssignment(plan.sites, ctx.rates(), ctx.capacity());
  plan.throughput = plan.assignment.throughput;
  plan.colors = SpectrumColoring(plan.sites, ctx.scenario());
  plan.algo = std::move(algo);
  return plan;
}

Plan ApproAlg(PlanningContext& ctx, const PlannerOptions& options,
              std::vector<RootTrace>* trace) {
  const auto start = std::chrono::steady_clock::now();
  const int m = ctx.graph().num_sites();
  if (m == 0) throw std::invalid_argument("scenario has no sites");
  std::vector<RootTrace> roots(m);
  ParallelFor(m, options.threads,
              [&](int j) { roots[j] = RunRoot(j, ctx, options.mode); });
  // Strictly better replaces, so equal values keep the lowest root.
  int best = 0;
  for (int j = 1; j < m; ++j) {
    if (roots[j].value > roots[best].value) best = j;
  }
  Plan plan = FinalizePlan(ctx, roots[best].s_prime, kAlgoAppro);
  plan.wall_time = Seconds(start);
  if (trace != nullptr) *trace = std::move(roots);
  return plan;
}

Plan BruteForceOpt(PlanningContext& ctx) {
  const auto start = std::chrono::steady_clock::now();
  const int m = ctx.graph().num_sites();
  const int k = ctx.k();
  if (m > 15 || k > 5) {
    throw SizeLimitError("brute force is limited to m <= 15 and K <= 5 (got m=" +
                         std::to_string(m) + ", K=" + std::to_string(k) + ")");
  }
  if (m == 0) throw std::invalid_argument("scenario has no sites");
  std::vector<int> best_set;
  double best_value = -1.0;
  std::vector<int> set;
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    if (std::popcount(mask) > k) continue;
    set.clear();
    for (int v = 0; v < m; ++v) {
      if (mask & (1u << v)) set.push_back(v);
    }
    if (!ctx.graph().IsConnected(set)) continue;
    const double value = ctx.F(set);
    if (value > best_value) {
      best_value = value;
      best_set = set;
    }
  }
  Plan plan = FinalizePlan(ctx, best_set, kAlgoBruteForce);
  plan.wall_time = Seconds(start);
  return plan;
}

std::vector<std::pair<int, int>> SpectrumColoring(std::span<const int> sites,
                                                  const Scenario& scenario) {
  std::vector<int> nodes(sites.begin(), sites.end());
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  const int n = static_cast<int>(nodes.size());
  const double limit = 2.0 * scenario.rf().r_user;
  std::vector<std::vector<int>> conflicts(n);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      const HoverSite& sa = scenario.sites()[nodes[a]];
      const HoverSite& sb = scenario.sites()[nodes[b]];
      if (std::hypot(sa.x - sb.x, sa.y - sb.y) <= limit) {
        conflicts[a].push_back(b);
        conflicts[b].push_back(a);
      }
    }
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return conflicts[a].size() > conflicts[b].size();
  });
  std::vector<int> color(n, -1);
  for (int a : order) {
    std::vector<char> used(n + 1, 0);
    for (int b : conflicts[a]) {
      if (color[b] >= 0) used[color[b]] = 1;
    }
    int c = 0;
    while (used[c]) ++c;
    color[a] = c;
  }
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < n; ++a) out.emplace_back(nodes[a], color[a]);
  return out;
}

}  // namespace uavnet

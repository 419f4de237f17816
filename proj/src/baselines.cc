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

#include "uavnet/baselines.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>

#include "uavnet/parallel.h"

namespace uavnet {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double Seconds(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

std::vector<int> Inserted(const std::vector<int>& set, int v) {
  std::vector<int> out = set;
  out.insert(std::lower_bound(out.begin(), out.end(), v), v);
  return out;
}

// Marginal-gain labels from one lazy greedy pass over every site. Sites
// never picked (zero gain) keep label 0.
std::vector<double> GreedyLabels(PlanningContext& ctx) {
  const int m = ctx.graph().num_sites();
  std::vector<double> label(m, 0.0);
  struct Entry {
    double bound;
    int id;
    int step;
  };
  auto before = [](const Entry& x, const Entry& y) {
    if (x.bound != y.bound) return x.bound < y.bound;
    return x.id > y.id;
  };
  std::priority_queue<Entry, std::vector<Entry>, decltype(before)> queue(
      before);
  for (int v = 0; v < m; ++v) queue.push(Entry{kInf, v, -1});
  std::vector<int> chosen;
  double value = 0.0;
  int step = 0;
  while (!queue.empty()) {
    Entry top = queue.top();
    queue.pop();
    if (top.step != step) {
      top.bound = ctx.F(Inserted(chosen, top.id)) - value;
      top.step = step;
      queue.push(top);
      continue;
    }
    if (top.bound <= 1e-12 * std::max(1.0, value)) break;
    label[top.id] = top.bound;
    chosen = Inserted(chosen, top.id);
    value = ctx.F(chosen);
    ++step;
  }
  return label;
}

struct Grown {
  std::vector<int> sites;
  double score = -kInf;
};

// Grows a connected set from `root` by best-labeled neighbor.
Grown GrowByLabel(int root, int k, const NetGraph& graph,
                  const std::vector<double>& label) {
  Grown g;
  std::vector<char> in(graph.num_sites(), 0);
  std::vector<char> frontier(graph.num_sites(), 0);
  g.sites.push_back(root);
  in[root] = 1;
  g.score = label[root];
  std::vector<int> candidates;
  auto extend = [&](int v) {
    for (int w : graph.Neighbors(v)) {
      if (!in[w] && !frontier[w]) {
        frontier[w] = 1;
        candidates.push_back(w);
      }
    }
  };
  extend(root);
  while (static_cast<int>(g.sites.size()) < k && !candidates.empty()) {
    size_t best = 0;
    for (size_t c = 1; c < candidates.size(); ++c) {
      const int a = candidates[c];
      const int b = candidates[best];
      if (label[a] > label[b] || (label[a] == label[b] && a < b)) best = c;
    }
    const int v = candidates[best];
    candidates.erase(candidates.begin() + best);
    in[v] = 1;
    g.sites.push_back(v);
    g.score += label[v];
    extend(v);
  }
  std::sort(g.sites.begin(), g.sites.end());
  return g;
}

struct Rooted {
  std::vector<int> sites;
  double value = 0.0;
};

Rooted McsRoot(int root, PlanningContext& ctx) {
  const int k = ctx.k();
  int s = static_cast<int>(std::sqrt(static_cast<double>(k)));
  while (s * s > k) --s;
  while ((s + 1) * (s + 1) <= k) ++s;
  const int radius = s - 1;
  const HopField& field = ctx.hops().Get(root);

  std::vector<int> picked = {root};
  double value = ctx.F(picked);
  while (static_cast<int>(picked.size()) < s) {
    int best = -1;
    double best_gain = 1e-12 * std::max(1.0, value);
    double best_value = value;
    for (int v = 0; v < ctx.graph().num_sites(); ++v) {
      if (field.dist[v] == kUnreachable || field.dist[v] > radius) continue;
      if (std::binary_search(picked.begin(), picked.end(), v)) continue;
      const double cand = ctx.F(Inserted(picked, v));
      if (cand - value > best_gain) {
        best_gain = cand - value;
        best = v;
        best_value = cand;
      }
    }
    if (best < 0) break;
    picked = Inserted(picked, best);
    value = best_value;
  }

  std::vector<int> joined;
  for (int v : picked) {
    const std::vector<int> path = ctx.hops().Path(root, v);
    joined.insert(joined.end(), path.begin(), path.end());
  }
  std::sort(joined.begin(), joined.end());
  joined.erase(std::unique(joined.begin(), joined.end()), joined.end());
  Rooted r;
  r.sites = GreedyAugment(joined, k, ctx.graph(), ctx.Oracle());
  r.value = ctx.F(r.sites);
  return r;
}

}  // namespace

Plan GreedyLabelBaseline(PlanningContext& ctx, const PlannerOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const int m = ctx.graph().num_sites();
  if (m == 0) throw std::invalid_argument("scenario has no sites");
  const std::vector<double> label = GreedyLabels(ctx);
  std::vector<Grown> grown(m);
  ParallelFor(m, options.threads, [&](int j) {
    grown[j] = GrowByLabel(j, ctx.k(), ctx.graph(), label);
  });
  int best = 0;
  for (int j = 1; j < m; ++j) {
    if (grown[j].score > grown[best].score) best = j;
  }
  Plan plan = FinalizePlan(ctx, grown[best].sites, kAlgoGreedyLabel);
  plan.wall_time = Seconds(start);
  return plan;
}

Plan McsBaseline(PlanningContext& ctx, const PlannerOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const int m = ctx.graph().num_sites();
  if (m == 0) throw std::invalid_argument("scenario has no sites");
  std::vector<Rooted> roots(m);
  ParallelFor(m, options.threads,
              [&](int j) { roots[j] = McsRoot(j, ctx); });
  int best = 0;
  for (int j = 1; j < m; ++j) {
    if (roots[j].value > roots[best].value) best = j;
  }
  Plan plan = FinalizePlan(ctx, roots[best].sites, kAlgoMcs);
  plan.wall_time = Seconds(start);
  return plan;
}

std::vector<std::string> AlgorithmNames() {
  return {kAlgoAppro, kAlgoGreedyLabel, kAlgoMcs, kAlgoBruteForce};
}

bool IsReconstruction(const std::string& algo) {
  return algo == kAlgoGreedyLabel || algo == kAlgoMcs;
}

Plan RunAlgorithm(const std::string& algo, PlanningContext& ctx,
                  const PlannerOptions& options) {
  if (algo == kAlgoAppro) return ApproAlg(ctx, options);
  if (algo == kAlgoGreedyLabel) return GreedyLabelBaseline(ctx, options);
  if (algo == kAlgoMcs) return McsBaseline(ctx, options);
  if (algo == kAlgoBruteForce) return BruteForceOpt(ctx);
  throw std::invalid_argument("unknown algorithm '" + algo +
                              "' (expected appro, greedy_label, mcs or "
                              "brute_force)");
}

}  // namespace uavnet

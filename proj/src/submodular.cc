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

#include "uavnet/submodular.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>

namespace uavnet {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Gains below this (relative to the current value) count as zero.
double GainFloor(double value) { return 1e-12 * std::max(1.0, std::abs(value)); }

struct Item {
  int id;
  int cost;
};

// Stale-bound priority entry for lazy greedy. Ordered by bound descending,
// then id ascending; `step` records when the bound was computed.
struct Bound {
  double bound;
  int id;
  int cost;
  int step;
};

struct BoundBefore {
  bool operator()(const Bound& x, const Bound& y) const {
    if (x.bound != y.bound) return x.bound < y.bound;
    return x.id > y.id;
  }
};

using BoundQueue = std::priority_queue<Bound, std::vector<Bound>, BoundBefore>;

std::vector<int> WithElement(const std::vector<int>& set, int v) {
  std::vector<int> out;
  out.reserve(set.size() + 1);
  auto it = std::lower_bound(set.begin(), set.end(), v);
  out.insert(out.end(), set.begin(), it);
  out.push_back(v);
  out.insert(out.end(), it, set.end());
  return out;
}

struct Candidate {
  std::vector<int> set;
  double value = -kInf;
};

enum class Rule { kCostBenefit, kUniformCost };

// Greedy from `seed`: repeatedly adds the element with the largest marginal
// gain per unit cost (or plain gain) among those that still fit. Lazy
// evaluation; picks the same element as the eager rule by submodularity.
Candidate GreedyExtend(std::vector<int> seed, double seed_value,
                       int remaining, std::span<const Item> items,
                       const SetFunction& f, Rule rule = Rule::kCostBenefit) {
  Candidate c{std::move(seed), seed_value};
  BoundQueue queue;
  for (const Item& it : items) {
    if (it.cost <= remaining &&
        !std::binary_search(c.set.begin(), c.set.end(), it.id)) {
      queue.push(Bound{kInf, it.id, it.cost, -1});
    }
  }
  int step = 0;
  while (!queue.empty()) {
    Bound top = queue.top();
    queue.pop();
    if (top.cost > remaining) continue;  // budget only shrinks
    if (top.step != step) {
      const double value = f(WithElement(c.set, top.id));
      top.bound = value - c.value;
      if (rule == Rule::kCostBenefit) top.bound /= top.cost;
      top.step = step;
      queue.push(top);
      continue;
    }
    const double gain =
        rule == Rule::kCostBenefit ? top.bound * top.cost : top.bound;
    if (gain <= GainFloor(c.value)) break;
    c.set = WithElement(c.set, top.id);
    c.value = f(c.set);
    remaining -= top.cost;
    ++step;
  }
  return c;
}

}  // namespace

std::vector<int> MaximizeUnderKnapsack(const KnapsackInstance& instance,
                                       KnapsackMode mode) {
  if (instance.ground.size() != instance.cost.size()) {
    throw std::invalid_argument("ground and cost sizes differ");
  }
  if (instance.budget < 0) throw std::invalid_argument("negative budget");
  std::vector<Item> items;
  for (size_t i = 0; i < instance.ground.size(); ++i) {
    if (instance.cost[i] < 1) {
      throw std::invalid_argument("element costs must be >= 1");
    }
    if (instance.cost[i] <= instance.budget) {
      items.push_back(Item{instance.ground[i], instance.cost[i]});
    }
  }
  std::sort(items.begin(), items.end(),
            [](const Item& a, const Item& b) { return a.id < b.id; });
  if (items.empty()) return {};

  const SetFunction& f = instance.oracle;
  const int budget = instance.budget;
  const double empty_value = f(std::vector<int>{});
  Candidate best{{}, empty_value};
  auto consider = [&best](Candidate c) {
    if (c.value > best.value) best = std::move(c);
  };

  Candidate best_single{{}, -kInf};
  for (const Item& a : items) {
    std::vector<int> s = {a.id};
    const double v = f(s);
    if (v > best_single.value) best_single = Candidate{std::move(s), v};
  }

  if (mode == KnapsackMode::kFastGreedy) {
    consider(GreedyExtend({}, empty_value, budget, items, f));
    consider(GreedyExtend({}, empty_value, budget, items, f,
                          Rule::kUniformCost));
    consider(std::move(best_single));
    return best.set;
  }

  consider(best_single);
  const size_t n = items.size();
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      if (items[i].cost + items[j].cost > budget) continue;
      std::vector<int> s = {items[i].id, items[j].id};
      const double v = f(s);
      consider(Candidate{std::move(s), v});
    }
  }
  consider(GreedyExtend({}, empty_value, budget, items, f));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      for (size_t k = j + 1; k < n; ++k) {
        const int cost = items[i].cost + items[j].cost + items[k].cost;
        if (cost > budget) continue;
        std::vector<int> seed = {items[i].id, items[j].id, items[k].id};
        const double v = f(seed);
        consider(GreedyExtend(std::move(seed), v, budget - cost, items, f));
      }
    }
  }
  return best.set;
}

std::vector<int> GreedyAugment(std::vector<int> start, int k,
                               const NetGraph& graph, const SetFunction& f) {
  std::sort(start.begin(), start.end());
  start.erase(std::unique(start.begin(), start.end()), start.end());
  if (static_cast<int>(start.size()) >= k || start.empty()) return start;

  std::vector<char> seen(graph.num_sites(), 0);
  for (int v : start) seen[v] = 1;
  BoundQueue queue;
  auto discover = [&](int v) {
    for (int w : graph.Neighbors(v)) {
      if (seen[w]) continue;
      seen[w] = 1;
      queue.push(Bound{kInf, w, 1, -1});
    }
  };
  for (int v : start) discover(v);

  std::vector<int> current = std::move(start);
  double value = f(current);
  int step = 0;
  while (static_cast<int>(current.size()) < k && !queue.empty()) {
    Bound top = queue.top();
    queue.pop();
    if (top.step != step) {
      top.bound = f(WithElement(current, top.id)) - value;
      top.step = step;
      queue.push(top);
      continue;
    }
    if (top.bound <= GainFloor(value)) break;
    current = WithElement(current, top.id);
    value = f(current);
    ++step;
    discover(top.id);
  }
  return current;
}

}  // namespace uavnet

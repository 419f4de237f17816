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

// Monotone submodular maximization under a knapsack budget, and the
// connectivity-preserving greedy augmentation used on top of it.

#ifndef UAVNET_SUBMODULAR_H_
#define UAVNET_SUBMODULAR_H_

#include <functional>
#include <span>
#include <vector>

#include "uavnet/netgraph.h"

namespace uavnet {

// Set-function oracle. Sets are passed sorted ascending without duplicates.
using SetFunction = std::function<double(std::span<const int>)>;

struct KnapsackInstance {
  std::vector<int> ground;  // element ids
  std::vector<int> cost;    // parallel to `ground`, each >= 1
  int budget = 0;
  SetFunction oracle;
};

enum class KnapsackMode {
  // Best set of size <= 2, plus greedy completion of every feasible
  // 3-element seed (and of the empty set). (1 - 1/e)-approximate.
  kPartialEnumeration,
  // Best of cost-benefit greedy, uniform-cost greedy and the best
  // singleton. (1 - 1/e) / 2-approximate; meant for large sweeps.
  kFastGreedy,
};

// Returns a sorted feasible set (total cost <= budget). Elements whose
// cost exceeds the budget are dropped up front. Marginal-gain ties go to
// the smallest element id.
std::vector<int> MaximizeUnderKnapsack(const KnapsackInstance& instance,
                                       KnapsackMode mode);

// Adds, one at a time, the site adjacent to the current set with the
// largest strictly positive marginal gain (ties: smallest id), until the
// set has k sites or no neighbor helps. Returns the sorted result.
std::vector<int> GreedyAugment(std::vector<int> start, int k,
                               const NetGraph& graph, const SetFunction& f);

}  // namespace uavnet

#endif  // UAVNET_SUBMODULAR_H_

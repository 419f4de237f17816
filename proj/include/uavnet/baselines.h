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

// Comparison baselines. Both are reconstructions from short published
// descriptions, not the original implementations; plans they emit carry
// that note in their metadata.

#ifndef UAVNET_BASELINES_H_
#define UAVNET_BASELINES_H_

#include <string>
#include <vector>

#include "uavnet/planner.h"

namespace uavnet {

// Labels every site with its marginal gain in an unconstrained greedy pass
// over all sites, then grows a connected K-site set from each root by
// repeatedly taking the best-labeled neighbor, keeping the largest label
// sum.
Plan GreedyLabelBaseline(PlanningContext& ctx,
                         const PlannerOptions& options = {});

// For each root, greedily picks floor(sqrt(K)) sites within
// floor(sqrt(K)) - 1 hops by marginal gain, joins them to the root along
// shortest paths and tops up to K greedily; keeps the best root.
Plan McsBaseline(PlanningContext& ctx, const PlannerOptions& options = {});

std::vector<std::string> AlgorithmNames();

// Dispatches on a label; throws std::invalid_argument for unknown ones.
Plan RunAlgorithm(const std::string& algo, PlanningContext& ctx,
                  const PlannerOptions& options = {});

// True for the reconstructed baselines.
bool IsReconstruction(const std::string& algo);

}  // namespace uavnet

#endif  // UAVNET_BASELINES_H_

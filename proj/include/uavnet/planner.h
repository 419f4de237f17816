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

// Connected placement of K UAVs. ApproAlg runs, for every root site, a
// hop-budgeted submodular subproblem, connects the result through a metric
// MST over hop distances and tops it up greedily; the best root wins. Its
// guarantee is (1 - 1/e) / floor(sqrt(K)) of the optimum.

#ifndef UAVNET_PLANNER_H_
#define UAVNET_PLANNER_H_

#include <span>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "uavnet/assignment.h"
#include "uavnet/channel.h"
#include "uavnet/netgraph.h"
#include "uavnet/scenario.h"
#include "uavnet/submodular.h"

namespace uavnet {

class SizeLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Algorithm labels, as written into plans and accepted by RunAlgorithm.
inline constexpr const char* kAlgoAppro = "appro";
inline constexpr const char* kAlgoGreedyLabel = "greedy_label";
inline constexpr const char* kAlgoMcs = "mcs";
inline constexpr const char* kAlgoBruteForce = "brute_force";

struct Plan {
  std::vector<int> sites;  // sorted site indices
  AssignmentResult assignment;
  double throughput = 0.0;
  std::vector<std::pair<int, int>> colors;  // (site, spectrum segment)
  std::string algo;
  double wall_time = 0.0;  // seconds
};

struct PlannerOptions {
  KnapsackMode mode = KnapsackMode::kPartialEnumeration;
  // 0 picks UAVNET_THREADS or the hardware concurrency.
  int threads = 1;
};

// Shared, read-mostly state for one planning run: the inputs, a BFS cache
// and a memo of f values. Safe to use from several threads.
class PlanningContext {
 public:
  PlanningContext(const Scenario& scenario, const RateTable& rates,
                  const NetGraph& graph);

  const Scenario& scenario() const { return scenario_; }
  const RateTable& rates() const { return rates_; }
  const NetGraph& graph() const { return graph_; }
  HopCache& hops() { return hops_; }
  OracleCache& cache() { return cache_; }
  int k() const { return scenario_.k_uavs(); }
  int capacity() const { return scenario_.capacity_c(); }

  double F(std::span<const int> sites) {
    return FValue(sites, rates_, scenario_.capacity_c(), &cache_);
  }
  SetFunction Oracle() {
    return [this](std::span<const int> s) { return F(s); };
  }

 private:
  const Scenario& scenario_;
  const RateTable& rates_;
  const NetGraph& graph_;
  HopCache hops_;
  OracleCache cache_;
};

struct MetricTree {
  std::vector<int> nodes;
  std::vector<std::tuple<int, int, int>> edges;  // (a, b, hops), a < b
  int total_weight = 0;
};

// Per-root record of one ApproAlg iteration.
struct RootTrace {
  int root = -1;
  std::vector<int> v_prime;  // knapsack result plus the root
  int knapsack_cost = 0;     // sum of hop distances to the root
  MetricTree tree;
  std::vector<int> s_j;      // node set of the union of tree paths
  std::vector<int> s_prime;  // after greedy augmentation
  double value = 0.0;
};

// max(2 floor(sqrt(K - 1)), largest odd <= floor(sqrt(4K - 3))). Only the
// ratio analysis uses it; no step of the planner depends on it.
int ComputeDBound(int k);

// Best set V_j (root excluded) with sum of hop distances to the root at
// most K - 1, maximizing f(V_j + root). Unreachable sites are dropped.
std::vector<int> ConstrainedMaxThroughput(int root, PlanningContext& ctx,
                                          KnapsackMode mode);

// Minimum spanning tree of the complete graph on `nodes` weighted by hop
// distance. Edge ties go to the lexicographically smallest endpoints.
// Throws NoPathError naming the first unreachable pair.
MetricTree MetricMst(std::span<const int> nodes, HopCache& hops);

// Union of the shortest paths behind the MST edges; sorted node set.
std::vector<int> ConnectViaMst(std::span<const int> v_prime, HopCache& hops,
                               MetricTree* tree = nullptr);

Plan ApproAlg(PlanningContext& ctx, const PlannerOptions& options = {},
              std::vector<RootTrace>* trace = nullptr);

// Exhaustive optimum over connected site sets of size <= K. Refuses
// instances with more than 15 sites or K > 5 (SizeLimitError).
Plan BruteForceOpt(PlanningContext& ctx);

// Computes the assignment, throughput and coloring for a chosen site set.
Plan FinalizePlan(PlanningContext& ctx, std::vector<int> sites,
                  std::string algo);

// Greedy largest-degree-first coloring of the conflict graph in which two
// sites conflict when within 2 R_user. Returns (site, color) by site.
std::vector<std::pair<int, int>> SpectrumColoring(std::span<const int> sites,
                                                  const Scenario& scenario);

struct Violation {
  std::string constraint;  // "(7)" ... "(13)", "objective" or "coloring"
  std::string entity;      // e.g. "site 4", "user 17"
  std::string message;
};

// Empty iff the plan is feasible: capacity (7), connectivity (8), fleet
// size (9), minimum rate (10), single association (11), user range (12),
// binary/index validity (13), the reported objective and the coloring.
std::vector<Violation> ValidatePlan(const Plan& plan, const Scenario& scenario,
                                    const RateTable& rates,
                                    const NetGraph& graph);

std::string FormatViolation(const Violation& v);

}  // namespace uavnet

#endif  // UAVNET_PLANNER_H_

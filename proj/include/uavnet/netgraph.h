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

// The UAV network graph. Sites are linked when within R_uav of each other;
// user-site links mirror the rate-table eligibility. Only sites relay, so
// all hop machinery runs on the site subgraph.

#ifndef UAVNET_NETGRAPH_H_
#define UAVNET_NETGRAPH_H_

#include <limits>
#include <memory>
#include <mutex>
#include <ostream>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "uavnet/channel.h"
#include "uavnet/scenario.h"

namespace uavnet {

inline constexpr int kUnreachable = std::numeric_limits<int>::max();

class NoPathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// BFS result from one root. parent[root] == -1, and parent[v] == -1 for
// unreachable v.
struct HopField {
  int root = -1;
  std::vector<int> dist;
  std::vector<int> parent;
};

class NetGraph {
 public:
  static NetGraph Build(const Scenario& scenario, const RateTable& rates);

  // Site-only graph from an explicit edge list; used for hand-made
  // topologies. Duplicate edges are merged; self-loops are rejected.
  static NetGraph FromSiteEdges(int num_sites,
                                std::span<const std::pair<int, int>> edges);

  int num_sites() const { return num_sites_; }
  int num_users() const { return num_users_; }

  // Sorted ascending.
  std::span<const int> Neighbors(int site) const { return adj_[site]; }
  bool Adjacent(int a, int b) const {
    return adj_bits_[static_cast<size_t>(a) * num_sites_ + b];
  }
  const std::vector<std::pair<int, int>>& user_edges() const {
    return user_edges_;
  }

  // Neighbors are expanded in ascending id, so parents are deterministic.
  HopField HopDistances(int root) const;

  // Throws NoPathError if `to` is unreachable from `from`.
  std::vector<int> ShortestPath(int from, int to) const;

  // True iff the subgraph induced by `sites` is connected (vacuously true
  // for zero or one site). Duplicates are ignored.
  bool IsConnected(std::span<const int> sites) const;

  void WriteDot(std::ostream& out) const;

 private:
  void AddSiteEdge(int a, int b);
  void Finish();

  int num_sites_ = 0;
  int num_users_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<bool> adj_bits_;
  std::vector<std::pair<int, int>> user_edges_;
};

// Lazily computed BFS fields, one per root, shared across callers.
// Get() is safe to call concurrently.
class HopCache {
 public:
  explicit HopCache(const NetGraph& graph);

  const NetGraph& graph() const { return graph_; }
  const HopField& Get(int root);
  int Distance(int from, int to) { return Get(from).dist[to]; }
  // Same path as NetGraph::ShortestPath(from, to).
  std::vector<int> Path(int from, int to);

 private:
  const NetGraph& graph_;
  std::vector<std::once_flag> once_;
  std::vector<std::unique_ptr<HopField>> fields_;
};

// Walks parent pointers from `to` back to the field's root; returns the
// path root -> ... -> to, or an empty vector if unreachable.
std::vector<int> ExtractPath(const HopField& field, int to);

}  // namespace uavnet

#endif  // UAVNET_NETGRAPH_H_

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

#include "uavnet/netgraph.h"

#include <algorithm>
#include <cmath>
#include <queue>
#include <string>

namespace uavnet {

NetGraph NetGraph::Build(const Scenario& scenario, const RateTable& rates) {
  NetGraph g;
  g.num_sites_ = scenario.num_sites();
  g.num_users_ = scenario.num_users();
  g.adj_.assign(g.num_sites_, {});
  g.adj_bits_.assign(static_cast<size_t>(g.num_sites_) * g.num_sites_, false);
  const auto& sites = scenario.sites();
  const double r_uav = scenario.rf().r_uav;
  // All sites share one altitude, so site-site distance is horizontal.
  for (int a = 0; a < g.num_sites_; ++a) {
    for (int b = a + 1; b < g.num_sites_; ++b) {
      const double d = std::hypot(sites[a].x - sites[b].x,
                                  sites[a].y - sites[b].y);
      if (d <= r_uav) g.AddSiteEdge(a, b);
    }
  }
  for (int i = 0; i < rates.num_users(); ++i) {
    for (const RateTable::Entry& e : rates.UserSites(i)) {
      g.user_edges_.emplace_back(i, e.index);
    }
  }
  g.Finish();
  return g;
}

NetGraph NetGraph::FromSiteEdges(int num_sites,
                                 std::span<const std::pair<int, int>> edges) {
  NetGraph g;
  g.num_sites_ = num_sites;
  g.adj_.assign(num_sites, {});
  g.adj_bits_.assign(static_cast<size_t>(num_sites) * num_sites, false);
  for (const auto& [a, b] : edges) {
    if (a < 0 || b < 0 || a >= num_sites || b >= num_sites) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (a == b) throw std::invalid_argument("self-loop on site " +
                                            std::to_string(a));
    if (!g.Adjacent(a, b)) g.AddSiteEdge(a, b);
  }
  g.Finish();
  return g;
}

void NetGraph::AddSiteEdge(int a, int b) {
  adj_[a].push_back(b);
  adj_[b].push_back(a);
  adj_bits_[static_cast<size_t>(a) * num_sites_ + b] = true;
  adj_bits_[static_cast<size_t>(b) * num_sites_ + a] = true;
}

void NetGraph::Finish() {
  for (auto& list : adj_) std::sort(list.begin(), list.end());
}

HopField NetGraph::HopDistances(int root) const {
  if (root < 0 || root >= num_sites_) {
    throw std::invalid_argument("root site out of range");
  }
  HopField f;
  f.root = root;
  f.dist.assign(num_sites_, kUnreachable);
  f.parent.assign(num_sites_, -1);
  std::vector<int> queue;
  queue.reserve(num_sites_);
  f.dist[root] = 0;
  queue.push_back(root);
  for (size_t head = 0; head < queue.size(); ++head) {
    const int v = queue[head];
    for (int w : adj_[v]) {
      if (f.dist[w] != kUnreachable) continue;
      f.dist[w] = f.dist[v] + 1;
      f.parent[w] = v;
      queue.push_back(w);
    }
  }
  return f;
}

std::vector<int> ExtractPath(const HopField& field, int to) {
  if (field.dist[to] == kUnreachable) return {};
  std::vector<int> path;
  for (int v = to; v != -1; v = field.parent[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<int> NetGraph::ShortestPath(int from, int to) const {
  std::vector<int> path = ExtractPath(HopDistances(from), to);
  if (path.empty()) {
    throw NoPathError("no path from site " + std::to_string(from) +
                      " to site " + std::to_string(to));
  }
  return path;
}

bool NetGraph::IsConnected(std::span<const int> sites) const {
  std::vector<int> nodes(sites.begin(), sites.end());
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  if (nodes.size() <= 1) return true;
  std::vector<char> seen(nodes.size(), 0);
  std::vector<size_t> stack = {0};
  seen[0] = 1;
  size_t reached = 1;
  while (!stack.empty()) {
    const size_t i = stack.back();
    stack.pop_back();
    for (size_t j = 0; j < nodes.size(); ++j) {
      if (!seen[j] && Adjacent(nodes[i], nodes[j])) {
        seen[j] = 1;
        ++reached;
        stack.push_back(j);
      }
    }
  }
  return reached == nodes.size();
}

void NetGraph::WriteDot(std::ostream& out) const {
  out << "graph sites {\n";
  for (int a = 0; a < num_sites_; ++a) {
    out << "  v" << a << ";\n";
  }
  for (int a = 0; a < num_sites_; ++a) {
    for (int b : adj_[a]) {
      if (a < b) out << "  v" << a << " -- v" << b << ";\n";
    }
  }
  out << "}\n";
}

HopCache::HopCache(const NetGraph& graph)
    : graph_(graph), once_(graph.num_sites()), fields_(graph.num_sites()) {}

const HopField& HopCache::Get(int root) {
  std::call_once(once_[root], [&] {
    fields_[root] = std::make_unique<HopField>(graph_.HopDistances(root));
  });
  return *fields_[root];
}

std::vector<int> HopCache::Path(int from, int to) {
  std::vector<int> path = ExtractPath(Get(from), to);
  if (path.empty()) {
    throw NoPathError("no path from site " + std::to_string(from) +
                      " to site " + std::to_string(to));
  }
  return path;
}

}  // namespace uavnet

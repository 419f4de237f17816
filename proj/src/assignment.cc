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

#include "uavnet/assignment.h"

#include <algorithm>
#include <limits>
#include <mutex>
#include <stdexcept>

namespace uavnet {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Incremental successive-shortest-path solver.
//
// Costs are negated rates; the extra node `dummy_` stands for "not served"
// with cost 0 and unbounded capacity. The current assignment is kept
// optimal for the users inserted so far, so the residual graph has no
// negative cycles and Bellman-Ford on the compressed site graph finds each
// augmenting path. Edge a -> b in that graph means "move the cheapest
// user from a to b" and costs min over users x at a of c(x,b) - c(x,a);
// per-(a,b) heaps with lazy deletion keep those minima.
class AssignmentSolver {
 public:
  AssignmentSolver(std::span<const int> sites, const RateTable& rates,
                   int capacity_c)
      : rates_(rates), capacity_(capacity_c) {
    if (capacity_c < 1) throw std::invalid_argument("capacity must be >= 1");
    sites_.assign(sites.begin(), sites.end());
    std::sort(sites_.begin(), sites_.end());
    sites_.erase(std::unique(sites_.begin(), sites_.end()), sites_.end());
    for (int j : sites_) {
      if (j < 0 || j >= rates.num_sites()) {
        throw std::invalid_argument("site index out of range");
      }
    }
    num_nodes_ = static_cast<int>(sites_.size()) + 1;
    dummy_ = num_nodes_ - 1;
    CollectUsers();
  }

  AssignmentResult Solve() {
    load_.assign(num_nodes_, 0);
    for (int u = 0; u < static_cast<int>(users_.size()); ++u) Insert(u);

    AssignmentResult result;
    for (int u = 0; u < static_cast<int>(users_.size()); ++u) {
      if (assign_[u] == dummy_) continue;
      result.pairs.emplace_back(users_[u], sites_[assign_[u]]);
    }
    for (const auto& [user, site] : result.pairs) {
      result.throughput += rates_.rate(user, site);
    }
    for (int a = 0; a < dummy_; ++a) {
      result.served_per_site.emplace_back(sites_[a], load_[a]);
    }
    return result;
  }

 private:
  struct Option {
    int node;
    double cost;
  };
  struct HeapEntry {
    double key;
    int user;
    int version;
  };
  struct HeapAfter {
    bool operator()(const HeapEntry& x, const HeapEntry& y) const {
      if (x.key != y.key) return x.key > y.key;
      return x.user > y.user;
    }
  };

  void CollectUsers() {
    // Counting sort by user; within a user, options stay ascending by node
    // because sites are visited in local order.
    const int n = rates_.num_users();
    std::vector<int> start(n + 1, 0);
    double max_rate = 0.0;
    for (int a = 0; a < dummy_; ++a) {
      for (const RateTable::Entry& e : rates_.SiteUsers(sites_[a])) {
        ++start[e.index + 1];
        max_rate = std::max(max_rate, e.rate);
      }
    }
    for (int i = 0; i < n; ++i) {
      if (start[i + 1] > 0) {
        users_.push_back(i);
        option_begin_.push_back(start[i]);
      }
      start[i + 1] += start[i];
    }
    option_begin_.push_back(start[n]);
    options_.resize(start[n]);
    for (int a = 0; a < dummy_; ++a) {
      for (const RateTable::Entry& e : rates_.SiteUsers(sites_[a])) {
        options_[start[e.index]++] = Option{a, -e.rate};
      }
    }
    assign_.assign(users_.size(), -1);
    version_.assign(users_.size(), 0);
    cur_cost_.assign(users_.size(), 0.0);
    eps_ = 1e-12 * std::max(1.0, max_rate);
  }

  std::span<const Option> OptionsOf(int u) const {
    return std::span<const Option>(options_).subspan(
        option_begin_[u], option_begin_[u + 1] - option_begin_[u]);
  }

  bool HasSpare(int node) const {
    return node == dummy_ || load_[node] < capacity_;
  }

  std::vector<HeapEntry>& Heap(int a, int b) {
    return heaps_[static_cast<size_t>(a) * num_nodes_ + b];
  }

  void PushEntries(int u) {
    const int a = assign_[u];
    if (a == dummy_) return;
    for (const Option& o : OptionsOf(u)) {
      if (o.node == a) continue;
      auto& h = Heap(a, o.node);
      h.push_back(HeapEntry{o.cost - cur_cost_[u], u, version_[u]});
      std::push_heap(h.begin(), h.end(), HeapAfter());
    }
    auto& h = Heap(a, dummy_);
    h.push_back(HeapEntry{-cur_cost_[u], u, version_[u]});
    std::push_heap(h.begin(), h.end(), HeapAfter());
  }

  void BuildHeaps() {
    heaps_.assign(static_cast<size_t>(num_nodes_) * num_nodes_, {});
    for (int u = 0; u < static_cast<int>(users_.size()); ++u) {
      if (assign_[u] >= 0) PushEntries(u);
    }
    heaps_built_ = true;
  }

  const HeapEntry* ValidTop(int a, int b) {
    auto& h = Heap(a, b);
    while (!h.empty()) {
      const HeapEntry& top = h.front();
      if (assign_[top.user] == a && version_[top.user] == top.version) {
        return &top;
      }
      std::pop_heap(h.begin(), h.end(), HeapAfter());
      h.pop_back();
    }
    return nullptr;
  }

  double CostAt(int u, int node) const {
    if (node == dummy_) return 0.0;
    for (const Option& o : OptionsOf(u)) {
      if (o.node == node) return o.cost;
    }
    throw std::logic_error("user moved to an ineligible site");
  }

  void Place(int u, int node) {
    const int from = assign_[u];
    if (from >= 0) --load_[from];
    ++version_[u];
    assign_[u] = node;
    ++load_[node];
    cur_cost_[u] = CostAt(u, node);
    if (heaps_built_) PushEntries(u);
  }

  void Insert(int u) {
    int best = dummy_;
    double best_cost = 0.0;
    for (const Option& o : OptionsOf(u)) {
      if (o.cost < best_cost) {
        best_cost = o.cost;
        best = o.node;
      }
    }
    // Every path leaving a nonempty site back to spare capacity closes a
    // residual cycle, hence has nonnegative cost: a spare favourite wins.
    if (HasSpare(best)) {
      Place(u, best);
      return;
    }
    if (!heaps_built_) BuildHeaps();

    std::vector<double> dist(num_nodes_, kInf);
    std::vector<int> parent(num_nodes_, -1);
    dist[dummy_] = 0.0;
    for (const Option& o : OptionsOf(u)) dist[o.node] = o.cost;
    for (int round = 0; round < num_nodes_; ++round) {
      bool changed = false;
      for (int a = 0; a < dummy_; ++a) {
        if (load_[a] == 0 || dist[a] == kInf) continue;
        for (int b = 0; b < num_nodes_; ++b) {
          if (b == a) continue;
          const HeapEntry* top = ValidTop(a, b);
          if (top == nullptr) continue;
          const double cand = dist[a] + top->key;
          if (cand < dist[b] - eps_) {
            dist[b] = cand;
            parent[b] = a;
            changed = true;
          }
        }
      }
      if (!changed) break;
    }

    int end = dummy_;
    for (int b = 0; b < dummy_; ++b) {
      if (HasSpare(b) && dist[b] < dist[end] - eps_) end = b;
    }

    // Collect the moves before applying any, since heap tops change.
    std::vector<std::pair<int, int>> moves;  // (user, destination)
    int node = end;
    int steps = 0;
    while (parent[node] != -1) {
      if (++steps > num_nodes_) {
        throw std::logic_error("cycle in augmenting path");
      }
      const int from = parent[node];
      moves.emplace_back(ValidTop(from, node)->user, node);
      node = from;
    }
    for (const auto& [x, to] : moves) Place(x, to);
    Place(u, node);
  }

  const RateTable& rates_;
  int capacity_;
  std::vector<int> sites_;
  int num_nodes_ = 0;
  int dummy_ = 0;
  double eps_ = 0.0;

  std::vector<int> users_;
  std::vector<int> option_begin_;
  std::vector<Option> options_;

  std::vector<int> assign_;
  std::vector<int> version_;
  std::vector<double> cur_cost_;
  std::vector<int> load_;

  bool heaps_built_ = false;
  std::vector<std::vector<HeapEntry>> heaps_;
};

}  // namespace

AssignmentResult MaxAssignment(std::span<const int> sites,
                               const RateTable& rates, int capacity_c) {
  return AssignmentSolver(sites, rates, capacity_c).Solve();
}

size_t OracleCache::KeyHash::operator()(const Key& k) const {
  std::uint64_t h = k.fingerprint ^ (0x9e3779b97f4a7c15ULL * (k.capacity + 1));
  for (int s : k.sites) {
    h ^= static_cast<std::uint64_t>(s) + 0x9e3779b97f4a7c15ULL + (h << 6) +
         (h >> 2);
  }
  return static_cast<size_t>(h);
}

double OracleCache::Value(std::span<const int> sites, const RateTable& rates,
                          int capacity_c) {
  Key key{rates.fingerprint(), capacity_c,
          std::vector<int>(sites.begin(), sites.end())};
  std::sort(key.sites.begin(), key.sites.end());
  key.sites.erase(std::unique(key.sites.begin(), key.sites.end()),
                  key.sites.end());
  {
    std::shared_lock lock(mu_);
    auto it = memo_.find(key);
    if (it != memo_.end()) {
      hits_.fetch_add(1, std::memory_order_relaxed);
      return it->second;
    }
  }
  misses_.fetch_add(1, std::memory_order_relaxed);
  const double value =
      key.sites.empty() ? 0.0
                        : MaxAssignment(key.sites, rates, capacity_c).throughput;
  std::unique_lock lock(mu_);
  memo_.emplace(std::move(key), value);
  return value;
}

size_t OracleCache::size() const {
  std::shared_lock lock(mu_);
  return memo_.size();
}

double FValue(std::span<const int> sites, const RateTable& rates,
              int capacity_c, OracleCache* cache) {
  if (cache != nullptr) return cache->Value(sites, rates, capacity_c);
  if (sites.empty()) return 0.0;
  return MaxAssignment(sites, rates, capacity_c).throughput;
}

}  // namespace uavnet

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

// Maximum assignment of users to deployed UAVs: every user is served at
// most once, each site serves at most C users, and only eligible pairs are
// used. The optimum value over a site set S is the set function f(S).

#ifndef UAVNET_ASSIGNMENT_H_
#define UAVNET_ASSIGNMENT_H_

#include <atomic>
#include <cstdint>
#include <shared_mutex>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "uavnet/channel.h"

namespace uavnet {

struct AssignmentResult {
  // (user index, site index), ascending by user.
  std::vector<std::pair<int, int>> pairs;
  // Sum of the pair rates, accumulated in pair order.
  double throughput = 0.0;
  // (site index, served users) for every site in the input set, ascending.
  std::vector<std::pair<int, int>> served_per_site;
};

// Exact optimum. Solved as a capacitated transportation problem: users are
// inserted in ascending index and each insertion follows a shortest
// augmenting path through the (|S| + 1)-node graph of sites plus an
// "unserved" sink. Duplicate site ids are ignored.
AssignmentResult MaxAssignment(std::span<const int> sites,
                               const RateTable& rates, int capacity_c);

// Memo of f values keyed by (table fingerprint, capacity, sorted site set).
// Lookups and inserts may come from several threads.
class OracleCache {
 public:
  double Value(std::span<const int> sites, const RateTable& rates,
               int capacity_c);

  std::uint64_t hits() const { return hits_.load(); }
  std::uint64_t misses() const { return misses_.load(); }
  size_t size() const;

 private:
  struct Key {
    std::uint64_t fingerprint;
    int capacity;
    std::vector<int> sites;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    size_t operator()(const Key& k) const;
  };

  mutable std::shared_mutex mu_;
  std::unordered_map<Key, double, KeyHash> memo_;
  std::atomic<std::uint64_t> hits_{0};
  std::atomic<std::uint64_t> misses_{0};
};

// f(S). f of the empty set is 0. `cache` may be null.
double FValue(std::span<const int> sites, const RateTable& rates,
              int capacity_c, OracleCache* cache = nullptr);

}  // namespace uavnet

#endif  // UAVNET_ASSIGNMENT_H_

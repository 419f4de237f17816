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

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <thread>

#include <gtest/gtest.h>

#include "support/oracles.h"
#include "uavnet/assignment.h"

namespace uavnet {
namespace {

RateTable Table(int n, int m, std::vector<double> rates,
                std::vector<std::uint8_t> eligible) {
  return RateTable::FromMatrix(n, m, std::move(rates), std::move(eligible));
}

std::vector<int> RandomSubset(std::mt19937_64& rng, int m, int max_size) {
  std::vector<int> all(m);
  std::iota(all.begin(), all.end(), 0);
  std::shuffle(all.begin(), all.end(), rng);
  const int k = std::uniform_int_distribution<int>(1, std::min(m, max_size))(
      rng);
  std::vector<int> s(all.begin(), all.begin() + k);
  std::sort(s.begin(), s.end());
  return s;
}

void ExpectFeasible(const AssignmentResult& r, std::span<const int> sites,
                    const RateTable& rates, int capacity) {
  std::set<int> users;
  std::map<int, int> load;
  double sum = 0.0;
  int prev = -1;
  for (const auto& [i, j] : r.pairs) {
    EXPECT_GT(i, prev);
    prev = i;
    EXPECT_TRUE(users.insert(i).second);
    EXPECT_TRUE(std::find(sites.begin(), sites.end(), j) != sites.end());
    EXPECT_TRUE(rates.eligible(i, j));
    ++load[j];
    sum += rates.rate(i, j);
  }
  for (const auto& [j, c] : load) EXPECT_LE(c, capacity);
  for (const auto& [j, c] : r.served_per_site) {
    EXPECT_EQ(c, load.count(j) ? load[j] : 0);
  }
  EXPECT_EQ(sum, r.throughput);
}

TEST(MaxAssignmentTest, SingleSiteTakesTopC) {
  const RateTable t = Table(3, 1, {5, 3, 2}, {1, 1, 1});
  const std::vector<int> s = {0};
  const AssignmentResult r = MaxAssignment(s, t, 2);
  EXPECT_EQ(r.throughput, 8);
  EXPECT_EQ(r.pairs, (std::vector<std::pair<int, int>>{{0, 0}, {1, 0}}));
  EXPECT_EQ(r.served_per_site, (std::vector<std::pair<int, int>>{{0, 2}}));
}

TEST(MaxAssignmentTest, IneligibleUserIsSkipped) {
  // b_min = 2 rules out the 1.5 link.
  const RateTable t = Table(2, 1, {5, 1.5}, {1, 0});
  const std::vector<int> s = {0};
  const AssignmentResult r = MaxAssignment(s, t, 5);
  EXPECT_EQ(r.throughput, 5);
  EXPECT_EQ(r.pairs, (std::vector<std::pair<int, int>>{{0, 0}}));
}

TEST(MaxAssignmentTest, TwoSitesUnitCapacity) {
  // A: site1 4, site2 3. B: site2 5 only.
  const RateTable t = Table(2, 2, {4, 3, 0, 5}, {1, 1, 0, 1});
  const std::vector<int> s = {0, 1};
  const AssignmentResult r = MaxAssignment(s, t, 1);
  EXPECT_EQ(r.throughput, 9);
  EXPECT_EQ(r.pairs, (std::vector<std::pair<int, int>>{{0, 0}, {1, 1}}));
}

TEST(MaxAssignmentTest, AugmentingChainDisplacesUsers) {
  // User 0 starts on site 0 and must move to site 1 when user 1 arrives.
  const RateTable t = Table(3, 2, {10, 9, 8, 1, 7, 0}, {1, 1, 1, 1, 1, 0});
  const std::vector<int> s = {0, 1};
  const AssignmentResult r = MaxAssignment(s, t, 1);
  EXPECT_EQ(r.throughput, 9 + 8);
  EXPECT_EQ(r.pairs, (std::vector<std::pair<int, int>>{{0, 1}, {1, 0}}));
  EXPECT_NEAR(r.throughput, testing::BruteForceAssignment(s, t, 1), 0);
}

TEST(MaxAssignmentTest, NoEligibleEdges) {
  const RateTable t = Table(2, 2, {1, 1, 1, 1}, {0, 0, 0, 0});
  const std::vector<int> s = {0, 1};
  const AssignmentResult r = MaxAssignment(s, t, 3);
  EXPECT_EQ(r.throughput, 0);
  EXPECT_TRUE(r.pairs.empty());
  EXPECT_EQ(r.served_per_site.size(), 2u);
}

TEST(MaxAssignmentTest, MatchesExhaustiveEnumeration) {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 8)(rng);
    const int m = std::uniform_int_distribution<int>(1, 5)(rng);
    const int c = std::uniform_int_distribution<int>(1, 3)(rng);
    const double p = std::uniform_real_distribution<double>(0.2, 1.0)(rng);
    const RateTable t = testing::RandomRateTable(rng, n, m, p);
    const std::vector<int> s = RandomSubset(rng, m, 3);
    const AssignmentResult r = MaxAssignment(s, t, c);
    ExpectFeasible(r, s, t, c);
    EXPECT_NEAR(r.throughput, testing::BruteForceAssignment(s, t, c), 1e-9);
  }
}

TEST(MaxAssignmentTest, AgreesWithVirtualNodeMatching) {
  std::mt19937_64 rng(103);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 30)(rng);
    const int m = std::uniform_int_distribution<int>(1, 8)(rng);
    const int c = std::uniform_int_distribution<int>(1, 5)(rng);
    const double p = std::uniform_real_distribution<double>(0.1, 0.9)(rng);
    const RateTable t = testing::RandomRateTable(rng, n, m, p, 1e4, 8e5);
    const std::vector<int> s = RandomSubset(rng, m, 6);
    const AssignmentResult r = MaxAssignment(s, t, c);
    ExpectFeasible(r, s, t, c);
    const double want = testing::VirtualNodeMatching(s, t, c);
    EXPECT_NEAR(r.throughput, want, 1e-9 * std::max(1.0, want));
  }
}

TEST(MaxAssignmentTest, GeneratedScenarioAgreesWithVirtualNodeMatching) {
  ScenarioTemplate tmpl;
  tmpl.users.n = 60;
  const Scenario sc = GenerateScenario(tmpl, 5);
  const RateTable t = BuildRateTable(sc);
  std::mt19937_64 rng(107);
  for (int trial = 0; trial < 20; ++trial) {
    const std::vector<int> s = RandomSubset(rng, t.num_sites(), 4);
    const int c = std::uniform_int_distribution<int>(1, 12)(rng);
    const double got = MaxAssignment(s, t, c).throughput;
    const double want = testing::VirtualNodeMatching(s, t, c);
    EXPECT_NEAR(got, want, 1e-9 * want);
  }
}

TEST(MaxAssignmentTest, InputOrderAndDuplicatesDoNotMatter) {
  std::mt19937_64 rng(109);
  const RateTable t = testing::RandomRateTable(rng, 20, 6, 0.6);
  const std::vector<int> a = {1, 3, 4};
  const std::vector<int> b = {4, 1, 3, 3, 1};
  const AssignmentResult ra = MaxAssignment(a, t, 2);
  const AssignmentResult rb = MaxAssignment(b, t, 2);
  EXPECT_EQ(ra.pairs, rb.pairs);
  EXPECT_EQ(ra.throughput, rb.throughput);
}

TEST(FValueTest, EmptySetIsZero) {
  std::mt19937_64 rng(113);
  const RateTable t = testing::RandomRateTable(rng, 5, 3, 1.0);
  EXPECT_EQ(FValue({}, t, 2), 0);
}

TEST(FValueTest, UselessSiteAddsNothing) {
  std::mt19937_64 rng(127);
  RateTable base = testing::RandomRateTable(rng, 8, 4, 0.7);
  std::vector<double> rates(32);
  std::vector<std::uint8_t> el(32);
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 4; ++j) {
      rates[i * 4 + j] = base.rate(i, j);
      el[i * 4 + j] = j == 3 ? 0 : base.eligible(i, j);
    }
  }
  const RateTable t = RateTable::FromMatrix(8, 4, rates, el);
  const std::vector<int> with = {0, 2, 3};
  const std::vector<int> without = {0, 2};
  EXPECT_EQ(FValue(with, t, 2), FValue(without, t, 2));
}

TEST(FValueTest, MonotoneAndSubmodular) {
  std::mt19937_64 rng(131);
  int checks = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int m = 7;
    const RateTable t = testing::RandomRateTable(
        rng, std::uniform_int_distribution<int>(3, 15)(rng), m, 0.5);
    const int c = std::uniform_int_distribution<int>(1, 3)(rng);
    std::vector<int> b, a;
    int v = -1;
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    v = perm[0];
    const int nb = std::uniform_int_distribution<int>(0, m - 1)(rng);
    b.assign(perm.begin() + 1, perm.begin() + 1 + nb);
    for (int x : b) {
      if (rng() % 2) a.push_back(x);
    }
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    auto plus = [v](std::vector<int> s) {
      s.insert(std::lower_bound(s.begin(), s.end(), v), v);
      return s;
    };
    const double fa = FValue(a, t, c), fb = FValue(b, t, c);
    EXPECT_LE(fa, fb + 1e-9);
    EXPECT_GE(FValue(plus(a), t, c) - fa, FValue(plus(b), t, c) - fb - 1e-9);
    ++checks;
  }
  EXPECT_EQ(checks, 200);
}

TEST(OracleCacheTest, CachedEqualsFresh) {
  std::mt19937_64 rng(137);
  const RateTable t = testing::RandomRateTable(rng, 25, 8, 0.5);
  OracleCache cache;
  for (int trial = 0; trial < 200; ++trial) {
    const std::vector<int> s = RandomSubset(rng, 8, 4);
    EXPECT_EQ(FValue(s, t, 2, &cache), MaxAssignment(s, t, 2).throughput);
  }
  EXPECT_EQ(cache.hits() + cache.misses(), 200u);
  EXPECT_EQ(cache.size(), cache.misses());
  EXPECT_GT(cache.hits(), 0u);
}

TEST(OracleCacheTest, KeyedOnTableAndCapacity) {
  std::mt19937_64 rng(139);
  const RateTable t1 = testing::RandomRateTable(rng, 10, 3, 1.0);
  const RateTable t2 = testing::RandomRateTable(rng, 10, 3, 1.0);
  OracleCache cache;
  const std::vector<int> s = {0, 2};
  EXPECT_EQ(FValue(s, t1, 1, &cache), MaxAssignment(s, t1, 1).throughput);
  EXPECT_EQ(FValue(s, t2, 1, &cache), MaxAssignment(s, t2, 1).throughput);
  EXPECT_EQ(FValue(s, t1, 3, &cache), MaxAssignment(s, t1, 3).throughput);
  EXPECT_EQ(cache.misses(), 3u);
}

TEST(OracleCacheTest, ConcurrentUse) {
  std::mt19937_64 rng(149);
  const RateTable t = testing::RandomRateTable(rng, 30, 10, 0.5);
  OracleCache cache;
  std::vector<std::vector<int>> sets;
  for (int i = 0; i < 300; ++i) sets.push_back(RandomSubset(rng, 10, 4));
  std::vector<std::jthread> pool;
  std::atomic<int> mismatches{0};
  for (int w = 0; w < 4; ++w) {
    pool.emplace_back([&] {
      for (const auto& s : sets) {
        if (FValue(s, t, 2, &cache) != MaxAssignment(s, t, 2).throughput) {
          ++mismatches;
        }
      }
    });
  }
  pool.clear();
  EXPECT_EQ(mismatches.load(), 0);
}

}  // namespace
}  // namespace uavnet

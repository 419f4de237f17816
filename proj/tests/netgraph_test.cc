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

#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "support/oracles.h"
#include "uavnet/netgraph.h"

namespace uavnet {
namespace {

NetGraph RandomGraph(std::mt19937_64& rng, int m, double p) {
  std::bernoulli_distribution e(p);
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      if (e(rng)) edges.emplace_back(a, b);
    }
  }
  return NetGraph::FromSiteEdges(m, edges);
}

Scenario TwoSites(double gap, double r_uav) {
  // Two 1 x 2 grid cells whose centers are `gap` apart.
  RfParams rf;
  rf.r_uav = r_uav;
  return Scenario(Area{2 * gap, gap, 500}, gap, 300, {}, rf, 2, 1);
}

TEST(BuildGraphTest, RangeBoundaryIsInclusive) {
  const Scenario at = TwoSites(600, 600);
  const NetGraph g = NetGraph::Build(at, BuildRateTable(at));
  EXPECT_TRUE(g.Adjacent(0, 1));
  EXPECT_TRUE(g.Adjacent(1, 0));

  const Scenario beyond = TwoSites(601, 600);
  const NetGraph h = NetGraph::Build(beyond, BuildRateTable(beyond));
  EXPECT_FALSE(h.Adjacent(0, 1));
}

TEST(BuildGraphTest, SmallDenseGridIsComplete) {
  const Scenario s(Area{150, 150, 500}, 50, 300, {}, RfParams{}, 1, 1);
  const NetGraph g = NetGraph::Build(s, BuildRateTable(s));
  ASSERT_EQ(g.num_sites(), 9);
  for (int a = 0; a < 9; ++a) {
    EXPECT_EQ(g.Neighbors(a).size(), 8u);
    EXPECT_FALSE(g.Adjacent(a, a));
  }
}

TEST(BuildGraphTest, UserEdgesMirrorEligibility) {
  ScenarioTemplate t;
  t.users.n = 40;
  const Scenario s = GenerateScenario(t, 9);
  const RateTable rates = BuildRateTable(s);
  const NetGraph g = NetGraph::Build(s, rates);
  size_t count = 0;
  for (int i = 0; i < rates.num_users(); ++i) {
    count += rates.UserSites(i).size();
  }
  EXPECT_EQ(g.user_edges().size(), count);
  for (const auto& [i, j] : g.user_edges()) EXPECT_TRUE(rates.eligible(i, j));
}

TEST(BuildGraphTest, SymmetricWithoutSelfLoops) {
  ScenarioTemplate t;
  t.rf.r_uav = 250;
  const Scenario s = GenerateScenario(t, 2);
  const NetGraph g = NetGraph::Build(s, BuildRateTable(s));
  for (int a = 0; a < g.num_sites(); ++a) {
    for (int b : g.Neighbors(a)) {
      EXPECT_NE(a, b);
      EXPECT_TRUE(g.Adjacent(b, a));
    }
  }
}

TEST(FromSiteEdgesTest, RejectsSelfLoop) {
  const std::vector<std::pair<int, int>> edges = {{1, 1}};
  EXPECT_THROW(NetGraph::FromSiteEdges(3, edges), std::invalid_argument);
}

TEST(HopDistancesTest, PathGraph) {
  const std::vector<std::pair<int, int>> edges = {{0, 1}, {1, 2}};
  const NetGraph g = NetGraph::FromSiteEdges(3, edges);
  const HopField f = g.HopDistances(0);
  EXPECT_EQ(f.dist, (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(f.parent, (std::vector<int>{-1, 0, 1}));
}

TEST(HopDistancesTest, DisconnectedSiteIsUnreachable) {
  const std::vector<std::pair<int, int>> edges = {{0, 1}};
  const NetGraph g = NetGraph::FromSiteEdges(3, edges);
  const HopField f = g.HopDistances(0);
  EXPECT_EQ(f.dist[2], kUnreachable);
  EXPECT_EQ(f.parent[2], -1);
  EXPECT_THROW(g.ShortestPath(0, 2), NoPathError);
  EXPECT_TRUE(ExtractPath(f, 2).empty());
}

TEST(HopDistancesTest, MatchesFloydWarshall) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const double p = std::uniform_real_distribution<double>(0.05, 0.4)(rng);
    const NetGraph g = RandomGraph(rng, 20, p);
    const auto fw = testing::FloydWarshallHops(g);
    for (int root = 0; root < 20; ++root) {
      const HopField f = g.HopDistances(root);
      EXPECT_EQ(f.dist, fw[root]);
      for (int v = 0; v < 20; ++v) {
        if (v == root || f.dist[v] == kUnreachable) continue;
        EXPECT_EQ(f.dist[v], f.dist[f.parent[v]] + 1);
      }
    }
  }
}

TEST(HopDistancesTest, TriangleInequality) {
  std::mt19937_64 rng(23);
  const NetGraph g = RandomGraph(rng, 30, 0.12);
  HopCache cache(g);
  std::uniform_int_distribution<int> pick(0, 29);
  for (int i = 0; i < 2000; ++i) {
    const int a = pick(rng), b = pick(rng), c = pick(rng);
    const long ab = cache.Distance(a, b), bc = cache.Distance(b, c);
    const long ac = cache.Distance(a, c);
    if (ab == kUnreachable || bc == kUnreachable) continue;
    EXPECT_LE(ac, ab + bc);
  }
}

// Seven sites: 0-3-1-2-6 plus the branch 0-4-5.
NetGraph SevenSites() {
  const std::vector<std::pair<int, int>> edges = {
      {0, 3}, {3, 1}, {1, 2}, {0, 4}, {4, 5}, {2, 6}};
  return NetGraph::FromSiteEdges(7, edges);
}

TEST(ShortestPathTest, SevenSitePath) {
  const NetGraph g = SevenSites();
  EXPECT_EQ(g.ShortestPath(1, 0), (std::vector<int>{1, 3, 0}));
  EXPECT_EQ(g.ShortestPath(0, 1), (std::vector<int>{0, 3, 1}));
}

TEST(ShortestPathTest, SingleNodePath) {
  const NetGraph g = SevenSites();
  EXPECT_EQ(g.ShortestPath(4, 4), (std::vector<int>{4}));
}

TEST(ShortestPathTest, LowestIdParentOnTies) {
  // 0 reaches 3 through either 1 or 2.
  const std::vector<std::pair<int, int>> edges = {{0, 2}, {0, 1}, {2, 3},
                                                  {1, 3}};
  const NetGraph g = NetGraph::FromSiteEdges(4, edges);
  EXPECT_EQ(g.ShortestPath(0, 3), (std::vector<int>{0, 1, 3}));
}

TEST(ShortestPathTest, RandomPathsAreShortestAndUseEdges) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 20; ++trial) {
    const NetGraph g = RandomGraph(rng, 25, 0.15);
    HopCache cache(g);
    for (int a = 0; a < 25; ++a) {
      const HopField& f = cache.Get(a);
      for (int b = 0; b < 25; ++b) {
        if (f.dist[b] == kUnreachable) continue;
        const std::vector<int> path = g.ShortestPath(a, b);
        ASSERT_EQ(static_cast<int>(path.size()), f.dist[b] + 1);
        EXPECT_EQ(path.front(), a);
        EXPECT_EQ(path.back(), b);
        for (size_t k = 1; k < path.size(); ++k) {
          EXPECT_TRUE(g.Adjacent(path[k - 1], path[k]));
        }
        EXPECT_EQ(cache.Path(a, b), path);
      }
    }
  }
}

TEST(IsConnectedTest, AgreesWithUnionFind) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    const NetGraph g = RandomGraph(rng, 12, 0.25);
    for (std::uint32_t mask = 0; mask < (1u << 12); mask += 7) {
      std::vector<int> nodes;
      for (int v = 0; v < 12; ++v) {
        if (mask & (1u << v)) nodes.push_back(v);
      }
      EXPECT_EQ(g.IsConnected(nodes), testing::RefConnected(nodes, g));
    }
  }
}

TEST(IsConnectedTest, EmptyAndSingletonAreConnected) {
  const NetGraph g = SevenSites();
  EXPECT_TRUE(g.IsConnected(std::vector<int>{}));
  EXPECT_TRUE(g.IsConnected(std::vector<int>{5}));
  EXPECT_FALSE(g.IsConnected(std::vector<int>{0, 1}));
  EXPECT_TRUE(g.IsConnected(std::vector<int>{0, 3, 1, 1}));
}

TEST(WriteDotTest, ListsEachEdgeOnce) {
  std::ostringstream out;
  SevenSites().WriteDot(out);
  const std::string dot = out.str();
  EXPECT_NE(dot.find("graph"), std::string::npos);
  size_t edges = 0;
  for (size_t pos = dot.find("--"); pos != std::string::npos;
       pos = dot.find("--", pos + 2)) {
    ++edges;
  }
  EXPECT_EQ(edges, 6u);
}

}  // namespace
}  // namespace uavnet

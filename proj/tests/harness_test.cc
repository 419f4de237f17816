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


#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "support/instance.h"
#include "uavnet/harness.h"
#include "uavnet/io.h"

namespace uavnet {
namespace {

ScenarioTemplate SmallTemplate() {
  ScenarioTemplate t;
  t.area.length = 400;
  t.area.width = 400;
  t.users.n = 40;
  t.k_uavs = 3;
  t.capacity_c = 10;
  t.rf.r_uav = 150;
  return t;
}

int Lines(const std::string& s) {
  return static_cast<int>(std::count(s.begin(), s.end(), '\n'));
}

TEST(EnergyTest, Examples) {
  const Scenario s = GenerateScenario(SmallTemplate(), 1);
  Plan empty;
  EXPECT_EQ(FlyEnergyPerUav(empty, s, DefaultLaunchPoint(s)), 0);
  Plan one;
  one.sites = {0};
  const HoverSite& site = s.sites()[0];
  const Point3 below{site.x, site.y, site.h - 1000};
  EXPECT_NEAR(FlyEnergyPerUav(one, s, below), 200e3, 1e-6);
  EXPECT_NEAR(FlyEnergyPerUav(one, s, below, 1.0), 1000, 1e-9);
  const Point3 launch = DefaultLaunchPoint(s);
  EXPECT_EQ(launch.x, 200);
  EXPECT_EQ(launch.y, 200);
  EXPECT_EQ(launch.z, 0);
}

TEST(AxisTest, NamesRoundTrip) {
  for (SweepAxis a : {SweepAxis::kNUsers, SweepAxis::kKUavs,
                      SweepAxis::kCapacityC, SweepAxis::kRUav}) {
    EXPECT_EQ(ParseAxis(AxisName(a)), a);
  }
  EXPECT_THROW(ParseAxis("altitude"), std::invalid_argument);
  EXPECT_EQ(ApplyAxis(ScenarioTemplate{}, SweepAxis::kKUavs, 7).k_uavs, 7);
  EXPECT_EQ(ApplyAxis(ScenarioTemplate{}, SweepAxis::kRUav, 250).rf.r_uav,
            250);
}

TEST(SweepConfigTest, RejectsBadConfig) {
  SweepConfig c;
  c.seeds = {1};
  EXPECT_THROW(c.Validate(), std::invalid_argument);
  c.values = {4, 2};
  EXPECT_THROW(c.Validate(), std::invalid_argument);
  c.values = {2.5};
  EXPECT_THROW(c.Validate(), std::invalid_argument);
  c.values = {2};
  c.algorithms = {"nope"};
  EXPECT_THROW(c.Validate(), std::invalid_argument);
  c.algorithms = {kAlgoAppro};
  EXPECT_NO_THROW(c.Validate());
}

SweepConfig SmallSweep() {
  SweepConfig c;
  c.tmpl = SmallTemplate();
  c.axis = SweepAxis::kKUavs;
  c.values = {1, 2, 3};
  c.seeds = {1, 2, 3, 4, 5};
  c.algorithms = {kAlgoAppro, kAlgoGreedyLabel};
  c.mode = KnapsackMode::kFastGreedy;
  return c;
}

TEST(SweepTest, RowsSummariesAndCsv) {
  const SweepResult r = RunSweep(SmallSweep());
  ASSERT_EQ(r.rows.size(), 30u);
  EXPECT_EQ(r.summary.size(), 12u);
  EXPECT_EQ(r.rows[0].value, 1);
  EXPECT_EQ(r.rows[0].seed, 1u);
  EXPECT_EQ(r.rows[0].algo, kAlgoAppro);
  EXPECT_EQ(r.rows[1].algo, kAlgoGreedyLabel);
  for (const SweepRow& row : r.rows) EXPECT_EQ(row.runtime_s, 0);
  const std::vector<double> mean = r.MeanThroughput(kAlgoAppro);
  ASSERT_EQ(mean.size(), 3u);
  double sum = 0;
  for (const SweepRow& row : r.rows) {
    if (row.value == 2 && row.algo == kAlgoAppro) sum += row.throughput;
  }
  EXPECT_NEAR(mean[1], sum / 5, 1e-9 * sum);

  std::ostringstream out;
  WriteSweepCsv(r, out);
  const std::string csv = out.str();
  EXPECT_EQ(csv.rfind("axis,value,seed,algo,throughput_bps,served,energy_j,"
                      "runtime_s\n",
                      0),
            0u);
  EXPECT_EQ(Lines(csv), 1 + 30 + 12);
  EXPECT_NE(csv.find("k_uavs,2,mean,appro,"), std::string::npos);
}

TEST(SweepTest, RerunsAreByteIdentical) {
  SweepConfig c = SmallSweep();
  std::ostringstream a, b;
  WriteSweepCsv(RunSweep(c), a);
  c.threads = 3;
  WriteSweepCsv(RunSweep(c), b);
  EXPECT_EQ(a.str(), b.str());
}

Scenario MobilityScenario() {
  ScenarioTemplate t = SmallTemplate();
  t.users.n = 30;
  return GenerateScenario(t, 5);
}

TEST(MobilityTest, StillUsersNeverTriggerRedeployment) {
  MobilityConfig c;
  c.slots = 5;
  c.speed_min = 0;
  c.speed_max = 0;
  const auto slots = SimulateMobility(MobilityScenario(), c, 1);
  ASSERT_EQ(slots.size(), 5u);
  for (const SlotMetrics& m : slots) {
    EXPECT_FALSE(m.redeployed);
    EXPECT_EQ(m.cumulative_redeployments, 0);
    EXPECT_DOUBLE_EQ(m.throughput, slots[0].throughput);
  }
}

TEST(MobilityTest, InvariantsAndThresholdNearOne) {
  MobilityConfig c;
  c.slots = 8;
  c.speed_min = 5;
  c.speed_max = 15;
  const auto slots = SimulateMobility(MobilityScenario(), c, 2);
  int count = 0;
  for (const SlotMetrics& m : slots) {
    EXPECT_LE(m.throughput, m.upper_bound + 1e-6);
    EXPECT_LE(m.candidate, m.upper_bound + 1e-6);
    EXPECT_LE(m.baseline, m.upper_bound + 1e-6);
    if (m.slot > 1 && m.redeployed) ++count;
    EXPECT_EQ(m.cumulative_redeployments, count);
    if (!m.redeployed && m.slot > 1) {
      EXPECT_GE(m.throughput, (1 - c.redeploy_threshold) * m.candidate - 1e-6);
    }
  }
  c.redeploy_threshold = 0.999;
  for (const SlotMetrics& m : SimulateMobility(MobilityScenario(), c, 2)) {
    if (m.slot > 1) EXPECT_FALSE(m.redeployed);
  }
}

TEST(MobilityTest, CsvIsDeterministic) {
  MobilityConfig c;
  c.slots = 4;
  std::ostringstream a, b;
  WriteMobilityCsv(SimulateMobility(MobilityScenario(), c, 9), a);
  WriteMobilityCsv(SimulateMobility(MobilityScenario(), c, 9), b);
  EXPECT_EQ(a.str(), b.str());
  EXPECT_EQ(a.str().rfind("slot,throughput_bps,candidate_bps,baseline_bps,"
                          "upper_bound_bps,redeployed,"
                          "cumulative_redeployments\n",
                          0),
            0u);
  EXPECT_EQ(Lines(a.str()), 5);
}

TEST(FormatNumberTest, Shortest) {
  EXPECT_EQ(FormatNumber(0), "0");
  EXPECT_EQ(FormatNumber(2.5), "2.5");
  EXPECT_EQ(FormatNumber(100), "100");
}

TEST(PlanJsonTest, RoundTrip) {
  testing::Instance inst(MobilityScenario());
  Plan p = ApproAlg(inst.ctx, {KnapsackMode::kFastGreedy, 1});
  const Plan q = PlanFromJson(PlanToJson(p));
  EXPECT_EQ(q.sites, p.sites);
  EXPECT_EQ(q.assignment.pairs, p.assignment.pairs);
  EXPECT_EQ(q.throughput, p.throughput);
  EXPECT_EQ(q.colors, p.colors);
  EXPECT_EQ(q.algo, p.algo);
  EXPECT_TRUE(inst.Validate(q).empty());
  EXPECT_THROW(PlanFromJson("{\"sites\": 3}"), ParseError);
}

}  // namespace
}  // namespace uavnet

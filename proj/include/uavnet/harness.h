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

// Experiment harness: parameter sweeps, flight-energy accounting and the
// slotted mobility / redeployment simulation.

#ifndef UAVNET_HARNESS_H_
#define UAVNET_HARNESS_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "uavnet/planner.h"
#include "uavnet/scenario.h"

namespace uavnet {

inline constexpr double kDefaultJoulesPerMeter = 200.0;

struct Point3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

// Mean over deployed UAVs of the flight distance from `launch` to the
// site, times `joules_per_meter`. Zero for an empty plan.
double FlyEnergyPerUav(const Plan& plan, const Scenario& scenario,
                       const Point3& launch,
                       double joules_per_meter = kDefaultJoulesPerMeter);
// Launch point at the area center on the ground.
Point3 DefaultLaunchPoint(const Scenario& scenario);

enum class SweepAxis { kNUsers, kKUavs, kCapacityC, kRUav };

std::string AxisName(SweepAxis axis);
// Accepts n_users, k_uavs, capacity_c, r_uav.
SweepAxis ParseAxis(const std::string& name);
// Copy of `tmpl` with the swept parameter set to `value`.
ScenarioTemplate ApplyAxis(ScenarioTemplate tmpl, SweepAxis axis,
                           double value);

struct SweepConfig {
  ScenarioTemplate tmpl;
  SweepAxis axis = SweepAxis::kKUavs;
  std::vector<double> values;  // ascending
  std::vector<std::uint64_t> seeds;
  std::vector<std::string> algorithms = {kAlgoAppro};
  KnapsackMode mode = KnapsackMode::kPartialEnumeration;
  // Workers over (value, seed) cells. 0 picks UAVNET_THREADS or all cores.
  int threads = 1;
  // Off: runtime columns are written as 0 so reruns are byte-identical.
  bool record_timing = false;
  std::optional<Point3> launch;  // default: DefaultLaunchPoint
  double joules_per_meter = kDefaultJoulesPerMeter;

  void Validate() const;
};

struct SweepRow {
  double value = 0.0;
  std::uint64_t seed = 0;
  std::string algo;
  double throughput = 0.0;
  int served = 0;
  double energy_j = 0.0;
  double runtime_s = 0.0;
};

struct SweepSummary {
  double value = 0.0;
  std::string algo;
  std::string stat;  // "mean" or "stddev" (sample)
  double throughput = 0.0;
  double served = 0.0;
  double energy_j = 0.0;
  double runtime_s = 0.0;
};

struct SweepResult {
  SweepAxis axis = SweepAxis::kKUavs;
  // Ordered by value, then seed, then algorithm as configured.
  std::vector<SweepRow> rows;
  // Ordered by value, then algorithm; mean before stddev.
  std::vector<SweepSummary> summary;

  // Mean throughput of `algo` at every value, in value order.
  std::vector<double> MeanThroughput(const std::string& algo) const;
};

// Throws std::runtime_error carrying the violation report if any plan
// fails validation.
SweepResult RunSweep(const SweepConfig& config);

// Header: axis,value,seed,algo,throughput_bps,served,energy_j,runtime_s.
// Summary rows follow the per-seed rows with "mean"/"stddev" in the seed
// column.
void WriteSweepCsv(const SweepResult& result, std::ostream& out);

struct MobilityConfig {
  double slot_seconds = 120.0;
  int slots = 20;
  double speed_min = 0.5;  // m/s
  double speed_max = 1.5;
  double redeploy_threshold = 0.05;
  std::string algo = kAlgoAppro;
  KnapsackMode mode = KnapsackMode::kFastGreedy;

  void Validate() const;
};

struct SlotMetrics {
  int slot = 0;  // 1-based
  double throughput = 0.0;   // served by the fleet kept for this slot
  double candidate = 0.0;    // fresh plan for this slot's positions
  double baseline = 0.0;     // slot-1 sites, never moved
  double upper_bound = 0.0;  // f(all sites)
  bool redeployed = false;
  int cumulative_redeployments = 0;
};

// Random-waypoint users. Slot 1 is the initial deployment; afterwards the
// fleet moves iff the reassigned throughput of the current sites falls
// below (1 - threshold) times the fresh plan's.
std::vector<SlotMetrics> SimulateMobility(const Scenario& scenario,
                                          const MobilityConfig& config,
                                          std::uint64_t seed);

// Columns: slot,throughput_bps,candidate_bps,baseline_bps,upper_bound_bps,
// redeployed,cumulative_redeployments.
void WriteMobilityCsv(const std::vector<SlotMetrics>& slots,
                      std::ostream& out);

// Shortest round-trip decimal form, locale independent.
std::string FormatNumber(double v);

}  // namespace uavnet

#endif  // UAVNET_HARNESS_H_

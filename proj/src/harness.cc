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

#include "uavnet/harness.h"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "uavnet/baselines.h"
#include "uavnet/parallel.h"

namespace uavnet {
namespace {

bool IsIntegerAxis(SweepAxis axis) { return axis != SweepAxis::kRUav; }

void CheckPlan(const Plan& plan, const Scenario& scenario,
               const RateTable& rates, const NetGraph& graph,
               const std::string& where) {
  const std::vector<Violation> violations =
      ValidatePlan(plan, scenario, rates, graph);
  if (violations.empty()) return;
  std::string report = where + ": plan from '" + plan.algo +
                       "' failed validation";
  for (const Violation& v : violations) report += "\n  " + FormatViolation(v);
  throw std::runtime_error(report);
}

struct Stats {
  double mean = 0.0;
  double stddev = 0.0;
};

Stats Summarize(const std::vector<double>& xs) {
  Stats s;
  if (xs.empty()) return s;
  for (double x : xs) s.mean += x;
  s.mean /= static_cast<double>(xs.size());
  if (xs.size() > 1) {
    double ss = 0.0;
    for (double x : xs) ss += (x - s.mean) * (x - s.mean);
    s.stddev = std::sqrt(ss / static_cast<double>(xs.size() - 1));
  }
  return s;
}

}  // namespace

std::string FormatNumber(double v) {
  if (v == 0.0) return "0";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc()) throw std::runtime_error("number formatting failed");
  return std::string(buf, end);
}

Point3 DefaultLaunchPoint(const Scenario& scenario) {
  return Point3{scenario.area().length / 2.0, scenario.area().width / 2.0,
                0.0};
}

double FlyEnergyPerUav(const Plan& plan, const Scenario& scenario,
                       const Point3& launch, double joules_per_meter) {
  if (plan.sites.empty()) return 0.0;
  double total = 0.0;
  for (int j : plan.sites) {
    const HoverSite& s = scenario.sites().at(j);
    const double dx = s.x - launch.x;
    const double dy = s.y - launch.y;
    const double dz = s.h - launch.z;
    total += std::sqrt(dx * dx + dy * dy + dz * dz);
  }
  return total / static_cast<double>(plan.sites.size()) * joules_per_meter;
}

std::string AxisName(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::kNUsers:
      return "n_users";
    case SweepAxis::kKUavs:
      return "k_uavs";
    case SweepAxis::kCapacityC:
      return "capacity_c";
    case SweepAxis::kRUav:
      return "r_uav";
  }
  return "?";
}

SweepAxis ParseAxis(const std::string& name) {
  if (name == "n_users") return SweepAxis::kNUsers;
  if (name == "k_uavs") return SweepAxis::kKUavs;
  if (name == "capacity_c") return SweepAxis::kCapacityC;
  if (name == "r_uav") return SweepAxis::kRUav;
  throw std::invalid_argument("unknown sweep axis '" + name +
                              "' (expected n_users, k_uavs, capacity_c or "
                              "r_uav)");
}

ScenarioTemplate ApplyAxis(ScenarioTemplate tmpl, SweepAxis axis,
                           double value) {
  switch (axis) {
    case SweepAxis::kNUsers:
      tmpl.users.n = static_cast<int>(std::llround(value));
      break;
    case SweepAxis::kKUavs:
      tmpl.k_uavs = static_cast<int>(std::llround(value));
      break;
    case SweepAxis::kCapacityC:
      tmpl.capacity_c = static_cast<int>(std::llround(value));
      break;
    case SweepAxis::kRUav:
      tmpl.rf.r_uav = value;
      break;
  }
  return tmpl;
}

void SweepConfig::Validate() const {
  if (values.empty()) throw std::invalid_argument("sweep needs axis values");
  if (seeds.empty()) throw std::invalid_argument("sweep needs seeds");
  if (algorithms.empty()) {
    throw std::invalid_argument("sweep needs at least one algorithm");
  }
  if (!std::is_sorted(values.begin(), values.end())) {
    throw std::invalid_argument("sweep values must be ascending");
  }
  const std::vector<std::string> known = AlgorithmNames();
  for (const std::string& a : algorithms) {
    if (std::find(known.begin(), known.end(), a) == known.end()) {
      throw std::invalid_argument("unknown algorithm '" + a + "'");
    }
  }
  for (double v : values) {
    if (!std::isfinite(v) || v <= 0.0) {
      throw std::invalid_argument("sweep values must be positive");
    }
    if (IsIntegerAxis(axis) && v != std::floor(v)) {
      throw std::invalid_argument("axis " + AxisName(axis) +
                                  " takes integer values, got " +
                                  FormatNumber(v));
    }
  }
  if (joules_per_meter < 0.0) {
    throw std::invalid_argument("joules_per_meter must be >= 0");
  }
}

std::vector<double> SweepResult::MeanThroughput(const std::string& algo) const {
  std::vector<double> out;
  for (const SweepSummary& s : summary) {
    if (s.algo == algo && s.stat == "mean") out.push_back(s.throughput);
  }
  return out;
}

SweepResult RunSweep(const SweepConfig& config) {
  config.Validate();
  const size_t nv = config.values.size();
  const size_t ns = config.seeds.size();
  const size_t na = config.algorithms.size();
  std::vector<SweepRow> rows(nv * ns * na);

  ParallelFor(static_cast<int>(nv * ns), config.threads, [&](int cell) {
    const size_t vi = static_cast<size_t>(cell) / ns;
    const size_t si = static_cast<size_t>(cell) % ns;
    const double value = config.values[vi];
    const std::uint64_t seed = config.seeds[si];
    const Scenario scenario = GenerateScenario(
        ApplyAxis(config.tmpl, config.axis, value), seed);
    const RateTable rates = BuildRateTable(scenario);
    const NetGraph graph = NetGraph::Build(scenario, rates);
    PlanningContext ctx(scenario, rates, graph);
    const Point3 launch = config.launch.value_or(DefaultLaunchPoint(scenario));
    PlannerOptions options;
    options.mode = config.mode;
    options.threads = 1;
    for (size_t ai = 0; ai < na; ++ai) {
      const std::string& algo = config.algorithms[ai];
      const Plan plan = RunAlgorithm(algo, ctx, options);
      CheckPlan(plan, scenario, rates, graph,
                AxisName(config.axis) + "=" + FormatNumber(value) +
                    " seed=" + std::to_string(seed));
      SweepRow& row = rows[(vi * ns + si) * na + ai];
      row.value = value;
      row.seed = seed;
      row.algo = algo;
      row.throughput = plan.throughput;
      row.served = static_cast<int>(plan.assignment.pairs.size());
      row.energy_j =
          FlyEnergyPerUav(plan, scenario, launch, config.joules_per_meter);
      row.runtime_s = config.record_timing ? plan.wall_time : 0.0;
    }
  });

  SweepResult result;
  result.axis = config.axis;
  result.rows = std::move(rows);
  for (size_t vi = 0; vi < nv; ++vi) {
    for (size_t ai = 0; ai < na; ++ai) {
      std::vector<double> tp, served, energy, runtime;
      for (size_t si = 0; si < ns; ++si) {
        const SweepRow& r = result.rows[(vi * ns + si) * na + ai];
        tp.push_back(r.throughput);
        served.push_back(r.served);
        energy.push_back(r.energy_j);
        runtime.push_back(r.runtime_s);
      }
      const Stats t = Summarize(tp), s = Summarize(served),
                  e = Summarize(energy), w = Summarize(runtime);
      const std::string& algo = config.algorithms[ai];
      const double value = config.values[vi];
      result.summary.push_back(
          {value, algo, "mean", t.mean, s.mean, e.mean, w.mean});
      result.summary.push_back(
          {value, algo, "stddev", t.stddev, s.stddev, e.stddev, w.stddev});
    }
  }
  return result;
}

void WriteSweepCsv(const SweepResult& result, std::ostream& out) {
  const std::string axis = AxisName(result.axis);
  out << "axis,value,seed,algo,throughput_bps,served,energy_j,runtime_s\n";
  for (const SweepRow& r : result.rows) {
    out << axis << ',' << FormatNumber(r.value) << ',' << r.seed << ','
        << r.algo << ',' << FormatNumber(r.throughput) << ',' << r.served
        << ',' << FormatNumber(r.energy_j) << ',' << FormatNumber(r.runtime_s)
        << '\n';
  }
  for (const SweepSummary& s : result.summary) {
    out << axis << ',' << FormatNumber(s.value) << ',' << s.stat << ','
        << s.algo << ',' << FormatNumber(s.throughput) << ','
        << FormatNumber(s.served) << ',' << FormatNumber(s.energy_j) << ','
        << FormatNumber(s.runtime_s) << '\n';
  }
}

void MobilityConfig::Validate() const {
  if (!(slot_seconds > 0.0)) {
    throw std::invalid_argument("slot_seconds must be > 0");
  }
  if (slots < 1) throw std::invalid_argument("slots must be >= 1");
  if (speed_min < 0.0 || speed_max < speed_min) {
    throw std::invalid_argument("speed range must satisfy 0 <= min <= max");
  }
  if (!(redeploy_threshold > 0.0 && redeploy_threshold < 1.0)) {
    throw std::invalid_argument("redeploy_threshold must lie in (0, 1)");
  }
  const std::vector<std::string> known = AlgorithmNames();
  if (std::find(known.begin(), known.end(), algo) == known.end()) {
    throw std::invalid_argument("unknown algorithm '" + algo + "'");
  }
}

std::vector<SlotMetrics> SimulateMobility(const Scenario& scenario,
                                          const MobilityConfig& config,
                                          std::uint64_t seed) {
  config.Validate();
  const double length = scenario.area().length;
  const double width = scenario.area().width;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ux(0.0, length);
  std::uniform_real_distribution<double> uy(0.0, width);
  std::uniform_real_distribution<double> speed_dist(config.speed_min,
                                                    config.speed_max);

  struct Walker {
    double wx, wy, speed;
  };
  std::vector<UserNode> users = scenario.users();
  std::vector<Walker> walkers;
  walkers.reserve(users.size());
  for (size_t i = 0; i < users.size(); ++i) {
    const double wx = ux(rng);
    const double wy = uy(rng);
    walkers.push_back({wx, wy, speed_dist(rng)});
  }

  auto step = [&] {
    for (size_t i = 0; i < users.size(); ++i) {
      Walker& w = walkers[i];
      UserNode& u = users[i];
      double budget = w.speed * config.slot_seconds;
      while (budget > 0.0) {
        const double dx = w.wx - u.x;
        const double dy = w.wy - u.y;
        const double d = std::hypot(dx, dy);
        if (d > budget) {
          u.x += dx / d * budget;
          u.y += dy / d * budget;
          break;
        }
        u.x = w.wx;
        u.y = w.wy;
        budget -= d;
        w.wx = ux(rng);
        w.wy = uy(rng);
        w.speed = speed_dist(rng);
        if (w.speed <= 0.0) break;
      }
      u.x = std::clamp(u.x, 0.0, length);
      u.y = std::clamp(u.y, 0.0, width);
    }
  };

  std::vector<int> all_sites(scenario.num_sites());
  std::iota(all_sites.begin(), all_sites.end(), 0);
  PlannerOptions options;
  options.mode = config.mode;

  std::vector<SlotMetrics> out;
  std::vector<int> current;
  std::vector<int> initial;
  int redeployments = 0;
  for (int slot = 1; slot <= config.slots; ++slot) {
    if (slot > 1) step();
    const Scenario now = scenario.WithUsers(users);
    const RateTable rates = BuildRateTable(now);
    const NetGraph graph = NetGraph::Build(now, rates);
    PlanningContext ctx(now, rates, graph);
    const Plan candidate = RunAlgorithm(config.algo, ctx, options);
    CheckPlan(candidate, now, rates, graph,
              "mobility slot " + std::to_string(slot));

    SlotMetrics m;
    m.slot = slot;
    m.candidate = candidate.throughput;
    m.upper_bound = ctx.F(all_sites);
    if (slot == 1) {
      current = candidate.sites;
      initial = candidate.sites;
      m.throughput = candidate.throughput;
    } else {
      const double kept = ctx.F(current);
      if (kept < (1.0 - config.redeploy_threshold) * candidate.throughput) {
        current = candidate.sites;
        m.redeployed = true;
        ++redeployments;
        m.throughput = candidate.throughput;
      } else {
        m.throughput = kept;
      }
    }
    m.baseline = ctx.F(initial);
    m.cumulative_redeployments = redeployments;
    out.push_back(m);
  }
  return out;
}

void WriteMobilityCsv(const std::vector<SlotMetrics>& slots,
                      std::ostream& out) {
  out << "slot,throughput_bps,candidate_bps,baseline_bps,upper_bound_bps,"
         "redeployed,cumulative_redeployments\n";
  for (const SlotMetrics& m : slots) {
    out << m.slot << ',' << FormatNumber(m.throughput) << ','
        << FormatNumber(m.candidate) << ',' << FormatNumber(m.baseline) << ','
        << FormatNumber(m.upper_bound) << ',' << (m.redeployed ? 1 : 0) << ','
        << m.cumulative_redeployments << '\n';
  }
}

}  // namespace uavnet

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

// uavnet: generate scenarios, plan UAV placements, run sweeps and the
// mobility simulation, validate plans.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "uavnet/baselines.h"
#include "uavnet/harness.h"
#include "uavnet/io.h"
#include "uavnet/planner.h"

namespace {

using namespace uavnet;

constexpr int kExitFailure = 1;
constexpr int kExitInvalidPlan = 3;

struct TemplateFlags {
  ScenarioTemplate tmpl;

  void Register(CLI::App* app) {
    app->add_option("--length", tmpl.area.length, "Area length (m)")
        ->capture_default_str();
    app->add_option("--width", tmpl.area.width, "Area width (m)")
        ->capture_default_str();
    app->add_option("--delta", tmpl.delta, "Grid cell side (m)")
        ->capture_default_str();
    app->add_option("--altitude", tmpl.altitude, "Hover altitude (m)")
        ->capture_default_str();
    app->add_option("--n-users", tmpl.users.n, "Number of users")
        ->capture_default_str();
    app->add_option("--hotspots", tmpl.users.hotspots, "User hotspots")
        ->capture_default_str();
    app->add_option("--pareto-alpha", tmpl.users.pareto_alpha,
                    "Hotspot size shape")
        ->capture_default_str();
    app->add_option("--spread", tmpl.users.spread_sigma,
                    "Hotspot standard deviation (m)")
        ->capture_default_str();
    app->add_option("--background", tmpl.users.background_frac,
                    "Fraction of uniformly placed users")
        ->capture_default_str();
    app->add_option("--b-min", tmpl.users.b_min, "Minimum rate (bit/s)")
        ->capture_default_str();
    app->add_option("-k,--k-uavs", tmpl.k_uavs, "Fleet size K")
        ->capture_default_str();
    app->add_option("-c,--capacity", tmpl.capacity_c,
                    "Users per UAV (capacity C)")
        ->capture_default_str();
    app->add_option("--r-uav", tmpl.rf.r_uav, "UAV-UAV range (m)")
        ->capture_default_str();
    app->add_option("--r-user", tmpl.rf.r_user, "UAV-user range (m)")
        ->capture_default_str();
  }
};

struct PlanFlags {
  bool fast_greedy = false;
  int threads = 1;
  bool timing = false;

  void Register(CLI::App* app) {
    app->add_flag("--fast-greedy", fast_greedy,
                  "Cost-benefit greedy instead of partial enumeration "
                  "(faster, weaker guarantee)");
    app->add_option("--threads", threads,
                    "Worker threads; 0 uses UAVNET_THREADS or all cores")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);
    app->add_flag("--timing", timing,
                  "Record wall-clock times (outputs are then not "
                  "reproducible byte for byte)");
  }
  PlannerOptions Options() const {
    PlannerOptions o;
    o.mode = fast_greedy ? KnapsackMode::kFastGreedy
                         : KnapsackMode::kPartialEnumeration;
    o.threads = threads;
    return o;
  }
};

std::ofstream OpenOut(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  return out;
}

int ReportViolations(const std::vector<Violation>& violations) {
  for (const Violation& v : violations) {
    std::cerr << FormatViolation(v) << "\n";
  }
  std::cerr << violations.size() << " violation(s)\n";
  return kExitInvalidPlan;
}

std::string JoinSites(const std::vector<int>& sites) {
  std::string s;
  for (size_t i = 0; i < sites.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(sites[i]);
  }
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Connected UAV base-station placement"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "uavnet 0.1.0");

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a synthetic scenario");
  TemplateFlags gen_tmpl;
  gen_tmpl.Register(gen);
  std::uint64_t gen_seed = 1;
  std::string gen_out;
  gen->add_option("--seed", gen_seed, "RNG seed")->capture_default_str();
  gen->add_option("-o,--out", gen_out, "Scenario file to write")->required();

  // plan
  const std::vector<std::string> algos = AlgorithmNames();
  auto* plan_cmd = app.add_subcommand("plan", "Plan a UAV deployment");
  std::string plan_scenario, plan_out, plan_algo = kAlgoAppro;
  PlanFlags plan_flags;
  plan_cmd->add_option("-s,--scenario", plan_scenario, "Scenario file")
      ->required()
      ->check(CLI::ExistingFile);
  plan_cmd->add_option("-a,--algo", plan_algo, "Algorithm")
      ->capture_default_str()
      ->check(CLI::IsMember(algos));
  plan_cmd->add_option("-o,--out", plan_out, "Plan file to write")
      ->required();
  plan_flags.Register(plan_cmd);

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Run a parameter sweep");
  TemplateFlags sweep_tmpl;
  sweep_tmpl.Register(sweep);
  PlanFlags sweep_flags;
  sweep_flags.Register(sweep);
  std::string sweep_axis = "k_uavs", sweep_out;
  std::vector<double> sweep_values;
  std::vector<std::uint64_t> sweep_seeds;
  std::vector<std::string> sweep_algos = {kAlgoAppro};
  int seed_count = 0;
  std::uint64_t seed_base = 1;
  sweep->add_option("--axis", sweep_axis, "Swept parameter")
      ->capture_default_str()
      ->check(CLI::IsMember({"n_users", "k_uavs", "capacity_c", "r_uav"}));
  sweep->add_option("--values", sweep_values, "Axis values (ascending)")
      ->required()
      ->delimiter(',');
  auto* seeds_opt =
      sweep->add_option("--seeds", sweep_seeds, "Explicit seed list")
          ->delimiter(',');
  sweep->add_option("--seed-count", seed_count,
                    "Use seeds seed, seed+1, ... instead of --seeds")
      ->excludes(seeds_opt)
      ->check(CLI::PositiveNumber);
  sweep->add_option("--seed", seed_base, "First seed for --seed-count")
      ->capture_default_str();
  sweep->add_option("--algos", sweep_algos, "Algorithms to compare")
      ->delimiter(',')
      ->check(CLI::IsMember(algos));
  sweep->add_option("-o,--out", sweep_out, "CSV file (default: stdout)");

  // mobility
  auto* mob = app.add_subcommand("mobility",
                                 "Simulate user mobility and redeployment");
  std::string mob_scenario, mob_out;
  std::uint64_t mob_seed = 1;
  MobilityConfig mob_cfg;
  bool mob_full = false;
  mob->add_option("-s,--scenario", mob_scenario, "Scenario file")
      ->required()
      ->check(CLI::ExistingFile);
  mob->add_option("--seed", mob_seed, "Mobility RNG seed")
      ->capture_default_str();
  mob->add_option("--slots", mob_cfg.slots, "Number of slots")
      ->capture_default_str();
  mob->add_option("--slot-seconds", mob_cfg.slot_seconds, "Slot length (s)")
      ->capture_default_str();
  mob->add_option("--speed-min", mob_cfg.speed_min, "Minimum speed (m/s)")
      ->capture_default_str();
  mob->add_option("--speed-max", mob_cfg.speed_max, "Maximum speed (m/s)")
      ->capture_default_str();
  mob->add_option("--threshold", mob_cfg.redeploy_threshold,
                  "Redeploy when the kept fleet falls this far behind")
      ->capture_default_str();
  mob->add_option("-a,--algo", mob_cfg.algo, "Planner")
      ->capture_default_str()
      ->check(CLI::IsMember(algos));
  mob->add_flag("--partial-enumeration", mob_full,
                "Use partial enumeration instead of fast greedy");
  mob->add_option("-o,--out", mob_out, "CSV file (default: stdout)");

  // validate
  auto* val = app.add_subcommand("validate", "Check a plan against a scenario");
  std::string val_scenario, val_plan;
  val->add_option("-s,--scenario", val_scenario, "Scenario file")
      ->required()
      ->check(CLI::ExistingFile);
  val->add_option("-p,--plan", val_plan, "Plan file")
      ->required()
      ->check(CLI::ExistingFile);

  // inspect
  auto* inspect = app.add_subcommand("inspect",
                                     "Export the rate table or site graph");
  std::string ins_scenario, ins_rates, ins_dot;
  inspect->add_option("-s,--scenario", ins_scenario, "Scenario file")
      ->required()
      ->check(CLI::ExistingFile);
  inspect->add_option("--rates-csv", ins_rates, "Write the rate table");
  inspect->add_option("--dot", ins_dot, "Write the site graph as DOT");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      const Scenario s = GenerateScenario(gen_tmpl.tmpl, gen_seed);
      SaveScenario(s, gen_out);
      std::cout << "wrote " << gen_out << ": " << s.num_users() << " users, "
                << s.num_sites() << " sites\n";
      return 0;
    }

    if (plan_cmd->parsed()) {
      const Scenario s = LoadScenario(plan_scenario);
      const RateTable rates = BuildRateTable(s);
      const NetGraph graph = NetGraph::Build(s, rates);
      PlanningContext ctx(s, rates, graph);
      Plan plan = RunAlgorithm(plan_algo, ctx, plan_flags.Options());
      if (!plan_flags.timing) plan.wall_time = 0.0;
      const std::vector<Violation> v = ValidatePlan(plan, s, rates, graph);
      if (!v.empty()) {
        std::cerr << "refusing to write an infeasible plan\n";
        return ReportViolations(v);
      }
      SavePlan(plan, plan_out);
      std::cout << "algo=" << plan.algo
                << " throughput_bps=" << FormatNumber(plan.throughput)
                << " served=" << plan.assignment.pairs.size()
                << " sites=" << JoinSites(plan.sites) << "\n";
      if (plan_flags.timing) {
        std::cout << "wall_time_s=" << plan.wall_time << "\n";
      }
      return 0;
    }

    if (sweep->parsed()) {
      SweepConfig cfg;
      cfg.tmpl = sweep_tmpl.tmpl;
      cfg.axis = ParseAxis(sweep_axis);
      cfg.values = sweep_values;
      if (seed_count > 0) {
        for (int i = 0; i < seed_count; ++i) cfg.seeds.push_back(seed_base + i);
      } else if (!sweep_seeds.empty()) {
        cfg.seeds = sweep_seeds;
      } else {
        cfg.seeds = {seed_base};
      }
      cfg.algorithms = sweep_algos;
      cfg.mode = sweep_flags.Options().mode;
      cfg.threads = sweep_flags.threads;
      cfg.record_timing = sweep_flags.timing;
      const SweepResult result = RunSweep(cfg);
      if (sweep_out.empty()) {
        WriteSweepCsv(result, std::cout);
      } else {
        std::ofstream out = OpenOut(sweep_out);
        WriteSweepCsv(result, out);
        std::cout << "wrote " << sweep_out << ": " << result.rows.size()
                  << " rows\n";
      }
      return 0;
    }

    if (mob->parsed()) {
      const Scenario s = LoadScenario(mob_scenario);
      mob_cfg.mode = mob_full ? KnapsackMode::kPartialEnumeration
                              : KnapsackMode::kFastGreedy;
      const std::vector<SlotMetrics> slots =
          SimulateMobility(s, mob_cfg, mob_seed);
      if (mob_out.empty()) {
        WriteMobilityCsv(slots, std::cout);
      } else {
        std::ofstream out = OpenOut(mob_out);
        WriteMobilityCsv(slots, out);
        std::cout << "wrote " << mob_out << ": " << slots.size()
                  << " slots, " << slots.back().cumulative_redeployments
                  << " redeployments\n";
      }
      return 0;
    }

    if (val->parsed()) {
      const Scenario s = LoadScenario(val_scenario);
      const Plan plan = LoadPlan(val_plan);
      const RateTable rates = BuildRateTable(s);
      const NetGraph graph = NetGraph::Build(s, rates);
      const std::vector<Violation> v = ValidatePlan(plan, s, rates, graph);
      if (!v.empty()) return ReportViolations(v);
      std::cout << "plan is feasible: " << plan.sites.size() << " sites, "
                << plan.assignment.pairs.size() << " users served, "
                << FormatNumber(plan.throughput) << " bit/s\n";
      return 0;
    }

    if (inspect->parsed()) {
      const Scenario s = LoadScenario(ins_scenario);
      const RateTable rates = BuildRateTable(s);
      if (ins_rates.empty() && ins_dot.empty()) {
        std::cerr << "inspect: give --rates-csv and/or --dot\n";
        return kExitFailure;
      }
      if (!ins_rates.empty()) {
        std::ofstream out = OpenOut(ins_rates);
        rates.WriteCsv(out);
      }
      if (!ins_dot.empty()) {
        std::ofstream out = OpenOut(ins_dot);
        NetGraph::Build(s, rates).WriteDot(out);
      }
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitFailure;
}

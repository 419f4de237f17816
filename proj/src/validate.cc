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
#include <cmath>
#include <map>
#include <set>
#include <string>

#include "uavnet/planner.h"

namespace uavnet {
namespace {

std::string Site(int j) { return "site " + std::to_string(j); }
std::string User(int i) { return "user " + std::to_string(i); }

}  // namespace

std::string FormatViolation(const Violation& v) {
  return "constraint " + v.constraint + " [" + v.entity + "]: " + v.message;
}

std::vector<Violation> ValidatePlan(const Plan& plan, const Scenario& scenario,
                                    const RateTable& rates,
                                    const NetGraph& graph) {
  std::vector<Violation> out;
  const int m = scenario.num_sites();
  const int n = scenario.num_users();
  const int cap = scenario.capacity_c();

  std::set<int> deployed;
  for (int j : plan.sites) {
    if (j < 0 || j >= m) {
      out.push_back({"(13)", Site(j), "not a hovering site of this scenario"});
      continue;
    }
    if (!deployed.insert(j).second) {
      out.push_back({"(13)", Site(j), "deployed more than once"});
    }
  }
  if (static_cast<int>(deployed.size()) > scenario.k_uavs()) {
    out.push_back({"(9)", "plan",
                   std::to_string(deployed.size()) + " UAVs deployed, K=" +
                       std::to_string(scenario.k_uavs())});
  }
  const std::vector<int> valid_sites(deployed.begin(), deployed.end());
  if (!graph.IsConnected(valid_sites)) {
    out.push_back({"(8)", "plan",
                   "UAV network induced by the deployed sites is disconnected"});
  }

  std::map<int, int> load;
  std::set<int> seen_users;
  double sum = 0.0;
  for (const auto& [i, j] : plan.assignment.pairs) {
    if (i < 0 || i >= n) {
      out.push_back({"(13)", User(i), "not a user of this scenario"});
      continue;
    }
    if (!seen_users.insert(i).second) {
      out.push_back({"(11)", User(i), "served by more than one UAV"});
    }
    if (j < 0 || j >= m) {
      out.push_back({"(13)", Site(j), "assignment names an unknown site"});
      continue;
    }
    if (!deployed.count(j)) {
      out.push_back({"(7)", Site(j),
                     User(i) + " assigned to a site without a UAV"});
    }
    ++load[j];
    const UserNode& u = scenario.users()[i];
    const double d = Distance3d(u, scenario.sites()[j]);
    if (d > scenario.rf().r_user) {
      out.push_back({"(12)", User(i),
                     "distance " + std::to_string(d) + " m to " + Site(j) +
                         " exceeds R_user"});
    }
    const double r = rates.rate(i, j);
    if (r + kRateTolerance < u.b_min) {
      out.push_back({"(10)", User(i),
                     "rate " + std::to_string(r) + " bit/s below b_min " +
                         std::to_string(u.b_min)});
    }
    sum += r;
  }
  for (const auto& [j, count] : load) {
    if (count > cap) {
      out.push_back({"(7)", Site(j),
                     "serves " + std::to_string(count) + " users, capacity " +
                         std::to_string(cap)});
    }
  }
  if (std::abs(sum - plan.throughput) > 1e-6 * std::max(1.0, std::abs(sum))) {
    out.push_back({"objective", "plan",
                   "reported throughput " + std::to_string(plan.throughput) +
                       " differs from the assignment total " +
                       std::to_string(sum)});
  }

  std::map<int, int> color;
  for (const auto& [j, c] : plan.colors) color[j] = c;
  for (int j : valid_sites) {
    if (!color.count(j)) {
      out.push_back({"coloring", Site(j), "no spectrum segment assigned"});
    }
  }
  const double limit = 2.0 * scenario.rf().r_user;
  for (size_t a = 0; a < valid_sites.size(); ++a) {
    for (size_t b = a + 1; b < valid_sites.size(); ++b) {
      const int ja = valid_sites[a];
      const int jb = valid_sites[b];
      if (!color.count(ja) || !color.count(jb)) continue;
      const HoverSite& sa = scenario.sites()[ja];
      const HoverSite& sb = scenario.sites()[jb];
      if (std::hypot(sa.x - sb.x, sa.y - sb.y) <= limit &&
          color[ja] == color[jb]) {
        out.push_back({"coloring", Site(ja),
                       "shares a spectrum segment with conflicting " +
                           Site(jb)});
      }
    }
  }
  return out;
}

}  // namespace uavnet

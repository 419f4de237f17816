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

// World model: disaster area, hovering grid, ground users and radio
// parameters. A Scenario is validated on construction and never mutated;
// the With*() helpers return modified copies.

#ifndef UAVNET_SCENARIO_H_
#define UAVNET_SCENARIO_H_

#include <cstdint>
#include <vector>

namespace uavnet {

// Radio parameters. Powers and fadings are in dB, distances in meters.
// The LoS-probability constants are fitted against the elevation angle in
// degrees, so every angle in this library is in degrees.
struct RfParams {
  double p_t_db = -6.0;
  double g_t_db = 5.0;
  double p_n_db = -105.0;
  double bandwidth_hz = 180e3;
  double carrier_hz = 2.5e9;
  double light_speed = 3e8;
  double eta_los_db = 1.0;
  double eta_nlos_db = 20.0;
  double los_a = 9.611725;
  double los_b = 0.158062;
  double r_uav = 600.0;
  double r_user = 500.0;

  // Throws std::invalid_argument naming the first broken invariant.
  void Validate() const;

  bool operator==(const RfParams&) const = default;
};

struct UserNode {
  int id = 0;
  double x = 0.0;
  double y = 0.0;
  double b_min = 2000.0;  // bit/s

  bool operator==(const UserNode&) const = default;
};

struct HoverSite {
  int id = 0;
  int gx = 0;
  int gy = 0;
  double x = 0.0;
  double y = 0.0;
  double h = 0.0;

  bool operator==(const HoverSite&) const = default;
};

struct Area {
  double length = 1000.0;
  double width = 1000.0;
  double height = 500.0;  // kept for completeness, unused by the models

  bool operator==(const Area&) const = default;
};

// Grid cell centers at ((gx + 0.5) * delta, (gy + 0.5) * delta, altitude),
// ids row-major (gx fastest). Throws std::invalid_argument if the length or
// width is not a multiple of delta.
std::vector<HoverSite> BuildGrid(double length, double width, double delta,
                                 double altitude);

struct UserGenParams {
  int n = 300;
  int hotspots = 5;
  double pareto_alpha = 1.5;
  double spread_sigma = 150.0;
  double background_frac = 0.1;
  double b_min = 2000.0;

  bool operator==(const UserGenParams&) const = default;
};

// Fat-tailed placement: Pareto-weighted Gaussian hotspots plus a uniform
// background, clamped into [0, length] x [0, width]. Pure in its arguments.
std::vector<UserNode> GenerateUsers(double length, double width,
                                    const UserGenParams& params,
                                    std::uint64_t seed);

// Hotspot centers drawn by GenerateUsers for the same arguments. Exposed so
// callers (and tests) can reason about cluster membership.
std::vector<std::pair<double, double>> HotspotCenters(
    double length, double width, const UserGenParams& params,
    std::uint64_t seed);

class Scenario {
 public:
  Scenario(Area area, double delta, double altitude,
           std::vector<UserNode> users, RfParams rf, int k_uavs,
           int capacity_c, std::uint64_t seed = 0);

  const Area& area() const { return area_; }
  double delta() const { return delta_; }
  double altitude() const { return altitude_; }
  const std::vector<UserNode>& users() const { return users_; }
  const std::vector<HoverSite>& sites() const { return sites_; }
  const RfParams& rf() const { return rf_; }
  int k_uavs() const { return k_uavs_; }
  int capacity_c() const { return capacity_c_; }
  std::uint64_t seed() const { return seed_; }
  int num_users() const { return static_cast<int>(users_.size()); }
  int num_sites() const { return static_cast<int>(sites_.size()); }

  Scenario WithUsers(std::vector<UserNode> users) const;
  Scenario WithFleet(int k_uavs, int capacity_c) const;
  Scenario WithRf(const RfParams& rf) const;

  bool operator==(const Scenario&) const = default;

 private:
  Area area_;
  double delta_;
  double altitude_;
  std::vector<UserNode> users_;
  std::vector<HoverSite> sites_;
  RfParams rf_;
  int k_uavs_;
  int capacity_c_;
  std::uint64_t seed_;
};

// Everything needed to regenerate a synthetic scenario from a seed. The
// defaults are the desk-scale setup: 1 x 1 km, 100 m cells, 300 users,
// K = 10, C = 100.
struct ScenarioTemplate {
  Area area;
  double delta = 100.0;
  double altitude = 300.0;
  RfParams rf;
  int k_uavs = 10;
  int capacity_c = 100;
  UserGenParams users;
};

Scenario GenerateScenario(const ScenarioTemplate& tmpl, std::uint64_t seed);

}  // namespace uavnet

#endif  // UAVNET_SCENARIO_H_

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

#include "uavnet/scenario.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>

namespace uavnet {
namespace {

// Number of grid cells along a dimension, or throws if `extent` is not a
// whole multiple of `delta`.
int CellsAlong(double extent, double delta, const char* name) {
  if (!(extent > 0.0)) {
    throw std::invalid_argument(std::string(name) + " must be positive");
  }
  const double cells = extent / delta;
  const double rounded = std::round(cells);
  if (rounded < 1.0 || std::abs(cells - rounded) > 1e-9 * std::max(1.0, cells)) {
    throw std::invalid_argument(std::string(name) + " (" +
                                std::to_string(extent) +
                                ") is not divisible by delta (" +
                                std::to_string(delta) + ")");
  }
  return static_cast<int>(rounded);
}

struct Hotspots {
  std::vector<std::pair<double, double>> centers;
  std::vector<double> weights;
};

Hotspots DrawHotspots(double length, double width, const UserGenParams& p,
                      std::mt19937_64& rng) {
  Hotspots hs;
  std::uniform_real_distribution<double> ux(0.0, length);
  std::uniform_real_distribution<double> uy(0.0, width);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int h = 0; h < p.hotspots; ++h) {
    const double x = ux(rng);
    const double y = uy(rng);
    hs.centers.emplace_back(x, y);
  }
  // Pareto(alpha) with unit scale, by inverting the CDF.
  for (int h = 0; h < p.hotspots; ++h) {
    hs.weights.push_back(std::pow(1.0 - unit(rng), -1.0 / p.pareto_alpha));
  }
  return hs;
}

void CheckUserGenParams(const UserGenParams& p) {
  if (p.n < 1) throw std::invalid_argument("n must be at least 1");
  if (p.hotspots < 1) {
    throw std::invalid_argument("hotspots must be at least 1");
  }
  if (!(p.background_frac >= 0.0 && p.background_frac <= 1.0)) {
    throw std::invalid_argument("background_frac must lie in [0, 1]");
  }
  if (!(p.pareto_alpha > 0.0)) {
    throw std::invalid_argument("pareto_alpha must be positive");
  }
  if (!(p.spread_sigma >= 0.0)) {
    throw std::invalid_argument("spread_sigma must be nonnegative");
  }
  if (!(p.b_min >= 0.0)) throw std::invalid_argument("b_min must be >= 0");
}

}  // namespace

void RfParams::Validate() const {
  if (!(r_uav > 0.0)) throw std::invalid_argument("rf.r_uav must be > 0");
  if (!(r_user > 0.0)) throw std::invalid_argument("rf.r_user must be > 0");
  if (!(bandwidth_hz > 0.0)) {
    throw std::invalid_argument("rf.bandwidth_hz must be > 0");
  }
  if (!(carrier_hz > 0.0)) {
    throw std::invalid_argument("rf.carrier_hz must be > 0");
  }
  if (!(light_speed > 0.0)) {
    throw std::invalid_argument("rf.light_speed must be > 0");
  }
  if (!(eta_nlos_db >= eta_los_db)) {
    throw std::invalid_argument("rf.eta_nlos_db must be >= rf.eta_los_db");
  }
  if (!(los_b > 0.0)) throw std::invalid_argument("rf.los_b must be > 0");
}

std::vector<HoverSite> BuildGrid(double length, double width, double delta,
                                 double altitude) {
  if (!(delta > 0.0)) throw std::invalid_argument("delta must be positive");
  if (!(altitude > 0.0)) {
    throw std::invalid_argument("altitude must be positive");
  }
  const int nx = CellsAlong(length, delta, "length");
  const int ny = CellsAlong(width, delta, "width");
  std::vector<HoverSite> sites;
  sites.reserve(static_cast<size_t>(nx) * ny);
  for (int gy = 0; gy < ny; ++gy) {
    for (int gx = 0; gx < nx; ++gx) {
      sites.push_back(HoverSite{static_cast<int>(sites.size()), gx, gy,
                                (gx + 0.5) * delta, (gy + 0.5) * delta,
                                altitude});
    }
  }
  return sites;
}

std::vector<std::pair<double, double>> HotspotCenters(
    double length, double width, const UserGenParams& params,
    std::uint64_t seed) {
  CheckUserGenParams(params);
  std::mt19937_64 rng(seed);
  return DrawHotspots(length, width, params, rng).centers;
}

std::vector<UserNode> GenerateUsers(double length, double width,
                                    const UserGenParams& params,
                                    std::uint64_t seed) {
  CheckUserGenParams(params);
  if (!(length > 0.0) || !(width > 0.0)) {
    throw std::invalid_argument("area dimensions must be positive");
  }
  std::mt19937_64 rng(seed);
  const Hotspots hs = DrawHotspots(length, width, params, rng);

  const int background =
      static_cast<int>(std::llround(params.background_frac * params.n));
  const int clustered = params.n - background;

  // Largest-remainder apportionment of the clustered users.
  const double total_w =
      std::accumulate(hs.weights.begin(), hs.weights.end(), 0.0);
  std::vector<int> counts(params.hotspots, 0);
  std::vector<std::pair<double, int>> remainders;
  int assigned = 0;
  for (int h = 0; h < params.hotspots; ++h) {
    const double share = clustered * hs.weights[h] / total_w;
    counts[h] = static_cast<int>(std::floor(share));
    assigned += counts[h];
    remainders.emplace_back(share - counts[h], h);
  }
  std::stable_sort(remainders.begin(), remainders.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  for (int i = 0; assigned < clustered; ++i, ++assigned) {
    ++counts[remainders[i % params.hotspots].second];
  }

  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> ux(0.0, length);
  std::uniform_real_distribution<double> uy(0.0, width);
  std::vector<UserNode> users;
  users.reserve(params.n);
  auto push = [&](double x, double y) {
    users.push_back(UserNode{static_cast<int>(users.size()),
                             std::clamp(x, 0.0, length),
                             std::clamp(y, 0.0, width), params.b_min});
  };
  for (int h = 0; h < params.hotspots; ++h) {
    for (int i = 0; i < counts[h]; ++i) {
      const double dx = gauss(rng) * params.spread_sigma;
      const double dy = gauss(rng) * params.spread_sigma;
      push(hs.centers[h].first + dx, hs.centers[h].second + dy);
    }
  }
  for (int i = 0; i < background; ++i) {
    const double x = ux(rng);
    const double y = uy(rng);
    push(x, y);
  }
  return users;
}

Scenario::Scenario(Area area, double delta, double altitude,
                   std::vector<UserNode> users, RfParams rf, int k_uavs,
                   int capacity_c, std::uint64_t seed)
    : area_(area),
      delta_(delta),
      altitude_(altitude),
      users_(std::move(users)),
      rf_(rf),
      k_uavs_(k_uavs),
      capacity_c_(capacity_c),
      seed_(seed) {
  if (k_uavs_ < 1) throw std::invalid_argument("k_uavs must be at least 1");
  if (capacity_c_ < 1) {
    throw std::invalid_argument("capacity_c must be at least 1");
  }
  rf_.Validate();
  sites_ = BuildGrid(area_.length, area_.width, delta_, altitude_);
  std::unordered_set<int> ids;
  for (const UserNode& u : users_) {
    if (!ids.insert(u.id).second) {
      throw std::invalid_argument("duplicate user id " + std::to_string(u.id));
    }
    if (!(u.x >= 0.0 && u.x <= area_.length && u.y >= 0.0 &&
          u.y <= area_.width)) {
      throw std::invalid_argument("user " + std::to_string(u.id) +
                                  " lies outside the area");
    }
    if (!(u.b_min >= 0.0)) {
      throw std::invalid_argument("user " + std::to_string(u.id) +
                                  " has negative b_min");
    }
  }
}

Scenario Scenario::WithUsers(std::vector<UserNode> users) const {
  return Scenario(area_, delta_, altitude_, std::move(users), rf_, k_uavs_,
                  capacity_c_, seed_);
}

Scenario Scenario::WithFleet(int k_uavs, int capacity_c) const {
  return Scenario(area_, delta_, altitude_, users_, rf_, k_uavs, capacity_c,
                  seed_);
}

Scenario Scenario::WithRf(const RfParams& rf) const {
  return Scenario(area_, delta_, altitude_, users_, rf, k_uavs_, capacity_c_,
                  seed_);
}

Scenario GenerateScenario(const ScenarioTemplate& tmpl, std::uint64_t seed) {
  return Scenario(tmpl.area, tmpl.delta, tmpl.altitude,
                  GenerateUsers(tmpl.area.length, tmpl.area.width, tmpl.users,
                                seed),
                  tmpl.rf, tmpl.k_uavs, tmpl.capacity_c, seed);
}

}  // namespace uavnet

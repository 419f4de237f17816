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

#include "uavnet/channel.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstring>
#include <numbers>
#include <stdexcept>
#include <string>

namespace uavnet {
namespace {

constexpr double kRadToDeg = 180.0 / std::numbers::pi;

double SnrLinear(double pathloss_db, const RfParams& rf) {
  return std::pow(10.0, (rf.p_t_db + rf.g_t_db - pathloss_db - rf.p_n_db) /
                            10.0);
}

std::uint64_t Fnv1a(std::uint64_t h, const void* data, size_t len) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace

double PathlossDb(double d_3d, bool los, const RfParams& rf) {
  if (!(d_3d > 0.0)) {
    throw std::invalid_argument("pathloss distance must be positive");
  }
  const double fspl =
      20.0 * std::log10(4.0 * std::numbers::pi * rf.carrier_hz * d_3d /
                        rf.light_speed);
  return fspl + (los ? rf.eta_los_db : rf.eta_nlos_db);
}

double LosProbability(double theta_deg, const RfParams& rf) {
  if (!(theta_deg > 0.0 && theta_deg <= 90.0)) {
    throw std::invalid_argument("elevation angle must lie in (0, 90] degrees");
  }
  return 1.0 /
         (1.0 + rf.los_a * std::exp(-rf.los_b * (theta_deg - rf.los_a)));
}

double Distance3d(const UserNode& user, const HoverSite& site) {
  return std::hypot(user.x - site.x, user.y - site.y, site.h);
}

LinkBudget EvaluateLink(const UserNode& user, const HoverSite& site,
                        const RfParams& rf) {
  LinkBudget lb;
  const double horizontal = std::hypot(user.x - site.x, user.y - site.y);
  lb.d_3d = std::hypot(horizontal, site.h);
  lb.theta_deg = std::min(90.0, std::atan2(site.h, horizontal) * kRadToDeg);
  lb.pl_los = PathlossDb(lb.d_3d, true, rf);
  lb.pl_nlos = PathlossDb(lb.d_3d, false, rf);
  lb.p_los = LosProbability(lb.theta_deg, rf);
  lb.snr_los = SnrLinear(lb.pl_los, rf);
  lb.snr_nlos = SnrLinear(lb.pl_nlos, rf);
  lb.rate = lb.p_los * rf.bandwidth_hz * std::log2(1.0 + lb.snr_los) +
            (1.0 - lb.p_los) * rf.bandwidth_hz * std::log2(1.0 + lb.snr_nlos);
  return lb;
}

RateTable RateTable::FromMatrix(int num_users, int num_sites,
                                std::vector<double> rates,
                                std::vector<std::uint8_t> eligible) {
  const size_t cells = static_cast<size_t>(num_users) * num_sites;
  if (num_users < 0 || num_sites < 0 || rates.size() != cells ||
      eligible.size() != cells) {
    throw std::invalid_argument("rate table dimensions do not match");
  }
  RateTable t;
  t.num_users_ = num_users;
  t.num_sites_ = num_sites;
  t.rates_ = std::move(rates);
  t.eligible_ = std::move(eligible);
  t.Index();
  return t;
}

void RateTable::Index() {
  by_site_.assign(num_sites_, {});
  by_user_.assign(num_users_, {});
  for (int i = 0; i < num_users_; ++i) {
    for (int j = 0; j < num_sites_; ++j) {
      if (!eligible(i, j)) continue;
      by_site_[j].push_back(Entry{i, rate(i, j)});
      by_user_[i].push_back(Entry{j, rate(i, j)});
    }
  }
  std::uint64_t h = 14695981039346656037ULL;
  h = Fnv1a(h, &num_users_, sizeof(num_users_));
  h = Fnv1a(h, &num_sites_, sizeof(num_sites_));
  h = Fnv1a(h, rates_.data(), rates_.size() * sizeof(double));
  h = Fnv1a(h, eligible_.data(), eligible_.size());
  fingerprint_ = h;
}

void RateTable::WriteCsv(std::ostream& out) const {
  out << "user_id,site_id,rate_bps,eligible\n";
  char buf[64];
  for (int i = 0; i < num_users_; ++i) {
    for (int j = 0; j < num_sites_; ++j) {
      auto res = std::to_chars(buf, buf + sizeof(buf), rate(i, j));
      out << i << ',' << j << ',' << std::string_view(buf, res.ptr - buf)
          << ',' << (eligible(i, j) ? 1 : 0) << '\n';
    }
  }
}

RateTable BuildRateTable(const Scenario& scenario) {
  const int n = scenario.num_users();
  const int m = scenario.num_sites();
  const RfParams& rf = scenario.rf();
  std::vector<double> rates(static_cast<size_t>(n) * m);
  std::vector<std::uint8_t> eligible(rates.size());
  for (int i = 0; i < n; ++i) {
    const UserNode& u = scenario.users()[i];
    for (int j = 0; j < m; ++j) {
      const HoverSite& v = scenario.sites()[j];
      const LinkBudget lb = EvaluateLink(u, v, rf);
      const size_t cell = static_cast<size_t>(i) * m + j;
      rates[cell] = lb.rate;
      eligible[cell] =
          (lb.d_3d <= rf.r_user && lb.rate + kRateTolerance >= u.b_min) ? 1
                                                                         : 0;
    }
  }
  return RateTable::FromMatrix(n, m, std::move(rates), std::move(eligible));
}

}  // namespace uavnet

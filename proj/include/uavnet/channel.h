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

// Air-to-ground channel: free-space pathloss plus LoS/NLoS shadowing,
// mixed by an elevation-dependent LoS probability into an expected rate.

#ifndef UAVNET_CHANNEL_H_
#define UAVNET_CHANNEL_H_

#include <cstdint>
#include <ostream>
#include <span>
#include <vector>

#include "uavnet/scenario.h"

namespace uavnet {

// Absolute tolerance used for every rate-vs-minimum comparison (bit/s).
inline constexpr double kRateTolerance = 1e-9;

struct LinkBudget {
  double d_3d = 0.0;
  double theta_deg = 0.0;
  double pl_los = 0.0;
  double pl_nlos = 0.0;
  double p_los = 0.0;
  double snr_los = 0.0;
  double snr_nlos = 0.0;
  double rate = 0.0;
};

// 20 log10(4 pi f_c d / c) + eta, in dB. Throws for d_3d <= 0.
double PathlossDb(double d_3d, bool los, const RfParams& rf);

// 1 / (1 + a exp(-b (theta - a))), theta in degrees within (0, 90].
double LosProbability(double theta_deg, const RfParams& rf);

LinkBudget EvaluateLink(const UserNode& user, const HoverSite& site,
                        const RfParams& rf);

inline double ExpectedRate(const UserNode& user, const HoverSite& site,
                           const RfParams& rf) {
  return EvaluateLink(user, site, rf).rate;
}

// 3-D user-to-site distance (the user is on the ground).
double Distance3d(const UserNode& user, const HoverSite& site);

// Dense n x m table of expected rates with eligibility flags:
// eligible(i, j) iff d_ij <= R_user and r_ij >= b_min(i).
class RateTable {
 public:
  struct Entry {
    int index;  // user index for site lists, site index for user lists
    double rate;
  };

  RateTable() = default;

  // Builds a table from raw row-major matrices (n rows of m columns).
  static RateTable FromMatrix(int num_users, int num_sites,
                              std::vector<double> rates,
                              std::vector<std::uint8_t> eligible);

  int num_users() const { return num_users_; }
  int num_sites() const { return num_sites_; }
  double rate(int user, int site) const {
    return rates_[static_cast<size_t>(user) * num_sites_ + site];
  }
  bool eligible(int user, int site) const {
    return eligible_[static_cast<size_t>(user) * num_sites_ + site] != 0;
  }

  // Eligible users of a site (ascending user index) and eligible sites of a
  // user (ascending site index).
  std::span<const Entry> SiteUsers(int site) const { return by_site_[site]; }
  std::span<const Entry> UserSites(int user) const { return by_user_[user]; }

  // Hash of the dimensions, rates and flags. Equal tables share it.
  std::uint64_t fingerprint() const { return fingerprint_; }

  // CSV with header user_id,site_id,rate_bps,eligible. Ids are table
  // indices, which coincide with scenario ids for generated scenarios.
  void WriteCsv(std::ostream& out) const;

 private:
  void Index();

  int num_users_ = 0;
  int num_sites_ = 0;
  std::vector<double> rates_;
  std::vector<std::uint8_t> eligible_;
  std::vector<std::vector<Entry>> by_site_;
  std::vector<std::vector<Entry>> by_user_;
  std::uint64_t fingerprint_ = 0;
};

// Users and sites are addressed by their position in the scenario vectors.
RateTable BuildRateTable(const Scenario& scenario);

}  // namespace uavnet

#endif  // UAVNET_CHANNEL_H_

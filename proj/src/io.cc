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

#include "uavnet/io.h"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "uavnet/baselines.h"

namespace uavnet {
namespace {

using json = nlohmann::ordered_json;

const json& Field(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) {
    throw ParseError("'" + path + "' must be an object");
  }
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw ParseError("missing field '" +
                     (path.empty() ? std::string(key) : path + "." + key) +
                     "'");
  }
  return *it;
}

std::string Join(const std::string& path, const char* key) {
  return path.empty() ? std::string(key) : path + "." + key;
}

double Number(const json& obj, const char* key, const std::string& path) {
  const json& v = Field(obj, key, path);
  if (!v.is_number()) {
    throw ParseError("field '" + Join(path, key) + "' must be a number");
  }
  return v.get<double>();
}

double NumberOr(const json& obj, const char* key, const std::string& path,
                double fallback) {
  if (!obj.contains(key)) return fallback;
  return Number(obj, key, path);
}

long long Integer(const json& obj, const char* key, const std::string& path) {
  const json& v = Field(obj, key, path);
  if (!v.is_number_integer()) {
    throw ParseError("field '" + Join(path, key) + "' must be an integer");
  }
  return v.get<long long>();
}

const json& Array(const json& obj, const char* key, const std::string& path) {
  const json& v = Field(obj, key, path);
  if (!v.is_array()) {
    throw ParseError("field '" + Join(path, key) + "' must be an array");
  }
  return v;
}

json Parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteFile(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace

std::string ScenarioToJson(const Scenario& s) {
  json doc;
  doc["area"] = {{"length", s.area().length},
                 {"width", s.area().width},
                 {"height", s.area().height}};
  doc["grid"] = {{"delta", s.delta()}, {"altitude", s.altitude()}};
  const RfParams& rf = s.rf();
  doc["rf"] = {{"p_t_db", rf.p_t_db},
               {"g_t_db", rf.g_t_db},
               {"p_n_db", rf.p_n_db},
               {"bandwidth_hz", rf.bandwidth_hz},
               {"carrier_hz", rf.carrier_hz},
               {"light_speed", rf.light_speed},
               {"eta_los_db", rf.eta_los_db},
               {"eta_nlos_db", rf.eta_nlos_db},
               {"los_a", rf.los_a},
               {"los_b", rf.los_b},
               {"r_uav", rf.r_uav},
               {"r_user", rf.r_user}};
  doc["fleet"] = {{"k", s.k_uavs()}, {"capacity", s.capacity_c()}};
  json users = json::array();
  for (const UserNode& u : s.users()) {
    users.push_back({{"id", u.id}, {"x", u.x}, {"y", u.y}, {"b_min", u.b_min}});
  }
  doc["users"] = std::move(users);
  doc["seed"] = s.seed();
  return doc.dump(2) + "\n";
}

Scenario ScenarioFromJson(const std::string& text) {
  const json doc = Parse(text);
  if (!doc.is_object()) throw ParseError("scenario must be a JSON object");

  const json& area_j = Field(doc, "area", "");
  Area area{Number(area_j, "length", "area"), Number(area_j, "width", "area"),
            NumberOr(area_j, "height", "area", 500.0)};
  const json& grid_j = Field(doc, "grid", "");
  const double delta = Number(grid_j, "delta", "grid");
  const double altitude = Number(grid_j, "altitude", "grid");

  const json& rf_j = Field(doc, "rf", "");
  if (!rf_j.is_object()) throw ParseError("field 'rf' must be an object");
  RfParams rf;
  rf.p_t_db = NumberOr(rf_j, "p_t_db", "rf", rf.p_t_db);
  rf.g_t_db = NumberOr(rf_j, "g_t_db", "rf", rf.g_t_db);
  rf.p_n_db = NumberOr(rf_j, "p_n_db", "rf", rf.p_n_db);
  rf.bandwidth_hz = NumberOr(rf_j, "bandwidth_hz", "rf", rf.bandwidth_hz);
  rf.carrier_hz = NumberOr(rf_j, "carrier_hz", "rf", rf.carrier_hz);
  rf.light_speed = NumberOr(rf_j, "light_speed", "rf", rf.light_speed);
  rf.eta_los_db = NumberOr(rf_j, "eta_los_db", "rf", rf.eta_los_db);
  rf.eta_nlos_db = NumberOr(rf_j, "eta_nlos_db", "rf", rf.eta_nlos_db);
  rf.los_a = NumberOr(rf_j, "los_a", "rf", rf.los_a);
  rf.los_b = NumberOr(rf_j, "los_b", "rf", rf.los_b);
  rf.r_uav = Number(rf_j, "r_uav", "rf");
  rf.r_user = Number(rf_j, "r_user", "rf");

  const json& fleet_j = Field(doc, "fleet", "");
  const long long k = Integer(fleet_j, "k", "fleet");
  const long long c = Integer(fleet_j, "capacity", "fleet");

  const json& users_j = Array(doc, "users", "");
  std::vector<UserNode> users;
  users.reserve(users_j.size());
  for (size_t i = 0; i < users_j.size(); ++i) {
    const std::string path = "users[" + std::to_string(i) + "]";
    const json& u = users_j[i];
    if (!u.is_object()) throw ParseError("'" + path + "' must be an object");
    users.push_back(UserNode{static_cast<int>(Integer(u, "id", path)),
                             Number(u, "x", path), Number(u, "y", path),
                             NumberOr(u, "b_min", path, 2000.0)});
  }
  std::uint64_t seed = 0;
  if (doc.contains("seed")) {
    if (!doc["seed"].is_number_unsigned() && !doc["seed"].is_number_integer()) {
      throw ParseError("field 'seed' must be an integer");
    }
    seed = doc["seed"].get<std::uint64_t>();
  }
  return Scenario(area, delta, altitude, std::move(users), rf,
                  static_cast<int>(k), static_cast<int>(c), seed);
}

void SaveScenario(const Scenario& scenario, const std::filesystem::path& path) {
  WriteFile(path, ScenarioToJson(scenario));
}

Scenario LoadScenario(const std::filesystem::path& path) {
  return ScenarioFromJson(ReadFile(path));
}

std::string PlanToJson(const Plan& plan) {
  json doc;
  doc["algo"] = plan.algo;
  doc["reconstructed_baseline"] = IsReconstruction(plan.algo);
  doc["sites"] = plan.sites;
  doc["throughput_bps"] = plan.throughput;
  json pairs = json::array();
  for (const auto& [i, j] : plan.assignment.pairs) {
    pairs.push_back({{"user", i}, {"site", j}});
  }
  doc["assignment"] = std::move(pairs);
  json served = json::array();
  for (const auto& [j, count] : plan.assignment.served_per_site) {
    served.push_back({{"site", j}, {"count", count}});
  }
  doc["served_per_site"] = std::move(served);
  json colors = json::array();
  for (const auto& [j, c] : plan.colors) {
    colors.push_back({{"site", j}, {"color", c}});
  }
  doc["colors"] = std::move(colors);
  doc["wall_time_s"] = plan.wall_time;
  return doc.dump(2) + "\n";
}

Plan PlanFromJson(const std::string& text) {
  const json doc = Parse(text);
  if (!doc.is_object()) throw ParseError("plan must be a JSON object");
  Plan plan;
  const json& algo = Field(doc, "algo", "");
  if (!algo.is_string()) throw ParseError("field 'algo' must be a string");
  plan.algo = algo.get<std::string>();
  const json& sites = Array(doc, "sites", "");
  for (size_t i = 0; i < sites.size(); ++i) {
    if (!sites[i].is_number_integer()) {
      throw ParseError("'sites[" + std::to_string(i) + "]' must be an integer");
    }
    plan.sites.push_back(sites[i].get<int>());
  }
  plan.throughput = Number(doc, "throughput_bps", "");
  plan.assignment.throughput = plan.throughput;
  const json& pairs = Array(doc, "assignment", "");
  for (size_t i = 0; i < pairs.size(); ++i) {
    const std::string path = "assignment[" + std::to_string(i) + "]";
    plan.assignment.pairs.emplace_back(
        static_cast<int>(Integer(pairs[i], "user", path)),
        static_cast<int>(Integer(pairs[i], "site", path)));
  }
  if (doc.contains("served_per_site")) {
    const json& served = Array(doc, "served_per_site", "");
    for (size_t i = 0; i < served.size(); ++i) {
      const std::string path = "served_per_site[" + std::to_string(i) + "]";
      plan.assignment.served_per_site.emplace_back(
          static_cast<int>(Integer(served[i], "site", path)),
          static_cast<int>(Integer(served[i], "count", path)));
    }
  }
  if (doc.contains("colors")) {
    const json& colors = Array(doc, "colors", "");
    for (size_t i = 0; i < colors.size(); ++i) {
      const std::string path = "colors[" + std::to_string(i) + "]";
      plan.colors.emplace_back(
          static_cast<int>(Integer(colors[i], "site", path)),
          static_cast<int>(Integer(colors[i], "color", path)));
    }
  }
  plan.wall_time = NumberOr(doc, "wall_time_s", "", 0.0);
  return plan;
}

void SavePlan(const Plan& plan, const std::filesystem::path& path) {
  WriteFile(path, PlanToJson(plan));
}

Plan LoadPlan(const std::filesystem::path& path) {
  return PlanFromJson(ReadFile(path));
}

}  // namespace uavnet

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

// JSON documents for scenarios and plans. See docs/file-formats.md.

#ifndef UAVNET_IO_H_
#define UAVNET_IO_H_

#include <filesystem>
#include <stdexcept>
#include <string>

#include "uavnet/planner.h"
#include "uavnet/scenario.h"

namespace uavnet {

// Malformed or incomplete document. The message names the field path
// (e.g. "rf.r_uav") or the line/column of a syntax error.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string ScenarioToJson(const Scenario& scenario);
// Throws ParseError for schema problems and std::invalid_argument when
// the values break a scenario invariant.
Scenario ScenarioFromJson(const std::string& text);

void SaveScenario(const Scenario& scenario, const std::filesystem::path& path);
Scenario LoadScenario(const std::filesystem::path& path);

std::string PlanToJson(const Plan& plan);
Plan PlanFromJson(const std::string& text);

void SavePlan(const Plan& plan, const std::filesystem::path& path);
Plan LoadPlan(const std::filesystem::path& path);

}  // namespace uavnet

#endif  // UAVNET_IO_H_

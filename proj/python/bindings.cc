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


#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "uavnet/baselines.h"
#include "uavnet/channel.h"
#include "uavnet/io.h"
#include "uavnet/netgraph.h"
#include "uavnet/planner.h"
#include "uavnet/scenario.h"

namespace py = pybind11;

namespace uavnet {
namespace {

struct Derived {
  explicit Derived(const Scenario& s)
      : rates(BuildRateTable(s)), graph(NetGraph::Build(s, rates)) {}
  RateTable rates;
  NetGraph graph;
};

Scenario Generate(std::uint64_t seed, double length, double width,
                  double delta, double altitude, int n_users, int k_uavs,
                  int capacity, double r_uav, double r_user, double b_min) {
  ScenarioTemplate t;
  t.area.length = length;
  t.area.width = width;
  t.delta = delta;
  t.altitude = altitude;
  t.users.n = n_users;
  t.users.b_min = b_min;
  t.k_uavs = k_uavs;
  t.capacity_c = capacity;
  t.rf.r_uav = r_uav;
  t.rf.r_user = r_user;
  return GenerateScenario(t, seed);
}

Plan RunPlan(const Scenario& s, const std::string& algo, bool fast_greedy,
             int threads) {
  py::gil_scoped_release release;
  const Derived d(s);
  PlanningContext ctx(s, d.rates, d.graph);
  PlannerOptions options;
  options.mode = fast_greedy ? KnapsackMode::kFastGreedy
                             : KnapsackMode::kPartialEnumeration;
  options.threads = threads;
  return RunAlgorithm(algo, ctx, options);
}

double Throughput(const Scenario& s, const std::vector<int>& sites) {
  const RateTable rates = BuildRateTable(s);
  return FValue(sites, rates, s.capacity_c());
}

std::vector<std::string> Validate(const Scenario& s, const Plan& plan) {
  const Derived d(s);
  std::vector<std::string> out;
  for (const Violation& v : ValidatePlan(plan, s, d.rates, d.graph)) {
    out.push_back(FormatViolation(v));
  }
  return out;
}

}  // namespace
}  // namespace uavnet

PYBIND11_MODULE(_core, m) {
  using namespace uavnet;
  m.doc() = "Connected UAV base-station placement planner.";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<SizeLimitError>(m, "SizeLimitError",
                                         PyExc_ValueError);

  py::class_<Scenario>(m, "Scenario")
      .def_property_readonly("num_sites", &Scenario::num_sites)
      .def_property_readonly("num_users", &Scenario::num_users)
      .def_property_readonly("k_uavs", &Scenario::k_uavs)
      .def_property_readonly("capacity_c", &Scenario::capacity_c)
      .def_property_readonly("seed", &Scenario::seed)
      .def("to_json", [](const Scenario& s) { return ScenarioToJson(s); })
      .def_static("from_json",
                  [](const std::string& text) { return ScenarioFromJson(text); })
      .def("save", [](const Scenario& s, const std::string& path) {
        SaveScenario(s, path);
      })
      .def_static("load",
                  [](const std::string& path) { return LoadScenario(path); })
      .def("__eq__", [](const Scenario& a, const Scenario& b) { return a == b; })
      .def("__repr__", [](const Scenario& s) {
        return "<Scenario sites=" + std::to_string(s.num_sites()) +
               " users=" + std::to_string(s.num_users()) +
               " K=" + std::to_string(s.k_uavs()) +
               " C=" + std::to_string(s.capacity_c()) + ">";
      });

  py::class_<Plan>(m, "Plan")
      .def_readonly("sites", &Plan::sites)
      .def_readonly("throughput", &Plan::throughput)
      .def_readonly("algo", &Plan::algo)
      .def_readonly("colors", &Plan::colors)
      .def_property_readonly(
          "assignment", [](const Plan& p) { return p.assignment.pairs; })
      .def("to_json", [](const Plan& p) { return PlanToJson(p); })
      .def_static("from_json",
                  [](const std::string& text) { return PlanFromJson(text); });

  m.def("generate_scenario", &Generate, py::arg("seed") = 1,
        py::arg("length") = 1000.0, py::arg("width") = 1000.0,
        py::arg("delta") = 100.0, py::arg("altitude") = 300.0,
        py::arg("n_users") = 300, py::arg("k_uavs") = 10,
        py::arg("capacity") = 100, py::arg("r_uav") = 600.0,
        py::arg("r_user") = 500.0, py::arg("b_min") = 2000.0);
  m.def("plan", &RunPlan, py::arg("scenario"), py::arg("algo") = "appro",
        py::arg("fast_greedy") = false, py::arg("threads") = 1);
  m.def("throughput", &Throughput, py::arg("scenario"), py::arg("sites"),
        "Maximum assignable throughput f(S) of a site set.");
  m.def("validate", &Validate, py::arg("scenario"), py::arg("plan"),
        "Constraint violations of a plan; empty when feasible.");
  m.def("algorithms", &AlgorithmNames);
}

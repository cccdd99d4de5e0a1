// Copyright 2026 The statorsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "statorsim/serialize.hpp"

#include <cstdio>
#include <string>

#include <json.hpp>

namespace statorsim {

namespace {

// %.6f through snprintf keeps the output locale-independent.
std::string fixed6(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", value);
  return buf;
}

nlohmann::ordered_json operator_to_json(const Operator& op) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (std::size_t r = 0; r < op.dim; ++r) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (std::size_t c = 0; c < op.dim; ++c) {
      const cplx v = op(r, c);
      row.push_back(nlohmann::ordered_json::array({v.real(), v.imag()}));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::ordered_json branch_to_json(const BranchRecord& branch) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json path = nlohmann::ordered_json::array();
  for (const PathStep& step : branch.path) {
    path.push_back(nlohmann::ordered_json::array({step.first, step.second}));
  }
  j["path"] = std::move(path);
  j["probability"] = branch.probability;
  j["operator"] = operator_to_json(branch.conditional_operator);
  j["success"] = branch.success;
  j["distance"] = branch.distance;
  return j;
}

}  // namespace

std::string curve_to_csv(const Curve& curve) {
  std::string out = "n,xi,E0,E0_exact,EFPT,F\n";
  for (const CurvePoint& point : curve.points) {
    out += fixed6(point.n);
    out += ',';
    out += fixed6(point.xi_opt);
    out += ',';
    out += fixed6(point.e0);
    out += ',';
    out += fixed6(point.e0_exact);
    out += ',';
    out += fixed6(point.e_fpt);
    out += ',';
    out += fixed6(point.f);
    out += '\n';
  }
  return out;
}

std::string report_to_json(const std::string& command,
                           const std::map<std::string, double>& params,
                           const ProtocolReport& report) {
  nlohmann::ordered_json j;
  j["command"] = command;
  nlohmann::ordered_json p;
  for (const auto& [key, value] : params) p[key] = value;
  j["params"] = std::move(p);
  nlohmann::ordered_json branches = nlohmann::ordered_json::array();
  for (const BranchRecord& branch : report.branches) {
    branches.push_back(branch_to_json(branch));
  }
  j["branches"] = std::move(branches);
  j["F"] = report.fidelity;
  j["E"] = report.entanglement;
  j["classical_bits"] = report.classical_bits;
  j["sigma_x_convention"] = report.sigma_x_convention;
  return j.dump(2) + "\n";
}

std::string plan_to_json(double xi, double b, const GatePlan& plan) {
  nlohmann::ordered_json j;
  j["command"] = "plan";
  nlohmann::ordered_json p;
  p["xi"] = xi;
  p["b"] = b;
  j["params"] = std::move(p);
  j["use_improved"] = plan.use_improved;
  j["n"] = plan.n;
  j["E0"] = plan.entanglement;
  j["F"] = plan.fidelity;
  return j.dump(2) + "\n";
}

}  // namespace statorsim

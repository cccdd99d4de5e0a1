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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstddef>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "statorsim/analysis.hpp"
#include "statorsim/protocol.hpp"
#include "statorsim/rng.hpp"
#include "statorsim/serialize.hpp"
#include "statorsim/state_vector.hpp"
#include "statorsim/tolerances.hpp"

using namespace statorsim;

namespace {

ProtocolReport sample_report() {
  const GateSpec g{0.3, make_axis(0.0, 0.0, 1.0), make_axis(1.0, 0.0, 0.0)};
  const auto [spec, angles] = fpt_config(g, 0.8);
  SplitMix64 rng(211);
  const StateVector target({"A", "B"}, random_state(rng, 2));
  return run_general_protocol(spec, angles, g, target);
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string line;
  std::istringstream in(text);
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

}  // namespace

TEST_CASE("curve_to_csv header, formatting, and line endings") {
  const Curve curve = generate_curve(1.001, {1.3, 1.521, 2.0, 5.0, 17.5});
  const std::string csv = curve_to_csv(curve);

  CHECK(csv.find("n,xi,E0,E0_exact,EFPT,F\n") == 0);
  CHECK(csv.find('\r') == std::string::npos);
  CHECK(csv.back() == '\n');

  const std::vector<std::string> lines = split_lines(csv);
  REQUIRE(lines.size() == curve.points.size() + 1);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::size_t commas = 0;
    for (char c : lines[i]) {
      if (c == ',') ++commas;
    }
    CHECK(commas == 5);
    // Fixed 6-decimal notation: every field has exactly one dot followed by
    // six digits, no exponents.
    std::istringstream fields(lines[i]);
    std::string field;
    while (std::getline(fields, field, ',')) {
      const std::size_t dot = field.find('.');
      REQUIRE(dot != std::string::npos);
      CHECK(field.size() - dot - 1 == 6);
      CHECK(field.find('e') == std::string::npos);
      CHECK(field.find('E') == std::string::npos);
    }
  }
}

TEST_CASE("curve_to_csv round-trips to printed precision") {
  const Curve curve = generate_curve(1.001, default_curve_grid(1.001, 50, 20.0));
  const std::vector<std::string> lines = split_lines(curve_to_csv(curve));
  REQUIRE(lines.size() == curve.points.size() + 1);
  for (std::size_t i = 0; i < curve.points.size(); ++i) {
    std::istringstream fields(lines[i + 1]);
    std::string field;
    std::vector<double> parsed;
    while (std::getline(fields, field, ',')) parsed.push_back(std::stod(field));
    REQUIRE(parsed.size() == 6);
    const CurvePoint& p = curve.points[i];
    const double expect[6] = {p.n, p.xi_opt, p.e0, p.e0_exact, p.e_fpt, p.f};
    for (int k = 0; k < 6; ++k) {
      CHECK(std::abs(parsed[k] - expect[k]) <= 5.0000001e-7);
    }
  }
}

TEST_CASE("curve_to_csv is byte-stable") {
  const std::vector<double> grid = default_curve_grid(1.001, 100, 20.0);
  CHECK(curve_to_csv(generate_curve(1.001, grid)) ==
        curve_to_csv(generate_curve(1.001, grid)));
}

TEST_CASE("report_to_json structure and key order") {
  const ProtocolReport report = sample_report();
  const std::map<std::string, double> params{{"xi", 0.3}, {"seed", 42.0}};
  const std::string text = report_to_json("fpt", params, report);
  CHECK(text.back() == '\n');

  const nlohmann::json j = nlohmann::json::parse(text);
  CHECK(j.at("command") == "fpt");
  CHECK(j.at("params").at("xi") == 0.3);
  CHECK(j.at("params").at("seed") == 42.0);
  CHECK(j.at("F").get<double>() == report.fidelity);
  CHECK(j.at("E").get<double>() == report.entanglement);
  CHECK(j.at("classical_bits").get<int>() == report.classical_bits);
  CHECK(j.at("sigma_x_convention") == report.sigma_x_convention);

  REQUIRE(j.at("branches").size() == report.branches.size());
  for (std::size_t i = 0; i < report.branches.size(); ++i) {
    const auto& jb = j.at("branches")[i];
    const BranchRecord& b = report.branches[i];
    CHECK(jb.at("probability").get<double>() == b.probability);
    CHECK(jb.at("success").get<bool>() == b.success);
    CHECK(jb.at("distance").get<double>() == b.distance);
    REQUIRE(jb.at("path").size() == b.path.size());
    for (std::size_t s = 0; s < b.path.size(); ++s) {
      CHECK(jb.at("path")[s][0] == b.path[s].first);
      CHECK(jb.at("path")[s][1] == b.path[s].second);
    }
    // Row-major operator entries as [re, im] pairs.
    const auto& op = jb.at("operator");
    REQUIRE(op.size() == 4);
    for (std::size_t r = 0; r < 4; ++r) {
      REQUIRE(op[r].size() == 4);
      for (std::size_t c = 0; c < 4; ++c) {
        const cplx v = b.conditional_operator(r, c);
        CHECK(op[r][c][0].get<double>() == v.real());
        CHECK(op[r][c][1].get<double>() == v.imag());
      }
    }
  }

  // Fixed top-level key order.
  const std::size_t p_command = text.find("\"command\"");
  const std::size_t p_params = text.find("\"params\"");
  const std::size_t p_branches = text.find("\"branches\"");
  const std::size_t p_f = text.find("\"F\"");
  const std::size_t p_e = text.find("\"E\"");
  const std::size_t p_bits = text.find("\"classical_bits\"");
  const std::size_t p_conv = text.find("\"sigma_x_convention\"");
  CHECK(p_command < p_params);
  CHECK(p_params < p_branches);
  CHECK(p_branches < p_f);
  CHECK(p_f < p_e);
  CHECK(p_e < p_bits);
  CHECK(p_bits < p_conv);
}

TEST_CASE("report_to_json is byte-stable") {
  const ProtocolReport report = sample_report();
  const std::map<std::string, double> params{{"xi", 0.3}};
  CHECK(report_to_json("fpt", params, report) == report_to_json("fpt", params, report));
}

TEST_CASE("plan_to_json carries the plan fields") {
  const GatePlan plan = plan_for_xi(0.17, 1.001);
  const std::string text = plan_to_json(0.17, 1.001, plan);
  CHECK(text.back() == '\n');
  const nlohmann::json j = nlohmann::json::parse(text);
  CHECK(j.at("command") == "plan");
  CHECK(j.at("params").at("xi") == 0.17);
  CHECK(j.at("params").at("b") == 1.001);
  CHECK(j.at("use_improved").get<bool>() == plan.use_improved);
  CHECK(j.at("n").get<double>() == plan.n);
  CHECK(j.at("E0").get<double>() == plan.entanglement);
  CHECK(j.at("F").get<double>() == plan.fidelity);
  CHECK(j.at("E0").get<double>() == doctest::Approx(0.897).epsilon(1e-3));
  CHECK(j.at("F").get<double>() == doctest::Approx(0.856).epsilon(1e-3));

  CHECK(plan_to_json(0.17, 1.001, plan) == text);

  // The one-shot fallback serializes through the same schema.
  const GatePlan fallback = plan_for_xi(0.4, 1.001);
  const nlohmann::json jf = nlohmann::json::parse(plan_to_json(0.4, 1.001, fallback));
  CHECK_FALSE(jf.at("use_improved").get<bool>());
  CHECK(jf.at("F").get<double>() == doctest::Approx(0.793).epsilon(1e-3));
}

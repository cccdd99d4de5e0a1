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

#include "statorsim/improved.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "branch_internal.hpp"
#include "statorsim/tolerances.hpp"

namespace statorsim {

namespace {

constexpr double kPi = std::numbers::pi;

void require_open_quadrant(double theta, const char* name) {
  if (!(theta > 0.0 && theta < kPi / 2.0)) {
    throw std::invalid_argument(std::string(name) + " must lie in (0, pi/2)");
  }
}

}  // namespace

void ImprovedParams::validate() const {
  if (!(n > 0.0)) throw std::invalid_argument("ImprovedParams: n must be positive");
  if (!(b > 1.0)) throw std::invalid_argument("ImprovedParams: b must exceed 1");
  if (!(xi > 0.0 && xi <= kPi / 4.0 + EPS_ALG)) {
    throw std::invalid_argument("ImprovedParams: xi must lie in (0, pi/4]");
  }
  require_open_quadrant(theta0, "ImprovedParams: theta0");
  require_open_quadrant(theta1, "ImprovedParams: theta1");
  if (!(delta1 > 0.0 && delta1 < kPi / 2.0)) {
    throw std::invalid_argument("ImprovedParams: delta1 must lie in (0, pi/2)");
  }
  const double cot0 = 1.0 / std::tan(theta0);
  if (std::abs(cot0 * cot0 - (b - 1.0) / 2.0) > EPS_ALG) {
    throw std::invalid_argument("ImprovedParams: cot^2(theta0) != (b-1)/2");
  }
  const double t0 = std::tan(theta0);
  const double t1 = std::tan(theta1);
  if (std::abs(t1 * t1 - t0 * t0 / n) > EPS_ALG * std::max(1.0, t0 * t0)) {
    throw std::invalid_argument("ImprovedParams: tan^2(theta1) != tan^2(theta0)/n");
  }
  if (std::abs(std::tan(delta1) - n * std::tan(xi)) > EPS_ALG * std::max(1.0, n)) {
    throw std::invalid_argument("ImprovedParams: tan(delta1) != n tan(xi)");
  }
}

ImprovedParams params_from_nb(double n, double b, double xi) {
  if (!(n > 0.0)) throw std::invalid_argument("params_from_nb: n must be positive");
  if (!(b > 1.0)) throw std::invalid_argument("params_from_nb: b must exceed 1");
  if (!(xi > 0.0 && xi <= kPi / 4.0 + EPS_ALG)) {
    throw std::invalid_argument("params_from_nb: xi must lie in (0, pi/4]");
  }
  ImprovedParams p;
  p.n = n;
  p.b = b;
  p.xi = xi;
  p.theta0 = std::atan(std::sqrt(2.0 / (b - 1.0)));
  p.theta1 = std::atan(std::tan(p.theta0) / std::sqrt(n));
  p.delta1 = std::atan(n * std::tan(xi));
  return p;
}

ResourceSpec coefficients_from_angles(double theta0, double theta1) {
  require_open_quadrant(theta0, "coefficients_from_angles: theta0");
  require_open_quadrant(theta1, "coefficients_from_angles: theta1");
  const double t0 = std::tan(theta0);
  const double t1 = std::tan(theta1);
  const double c0 = std::cos(theta0);
  const double c1 = std::cos(theta1);
  const double d = std::sqrt((t0 * t0 + t1 * t1) * (c0 * c0 + c1 * c1));
  ResourceSpec spec;
  spec.lambda = {t1 * c1 / d, t0 * c1 / d, t0 * c0 / d, t1 * c0 / d};
  spec.validate();
  return spec;
}

std::pair<Operator, Operator> povm_elements(double theta0, double theta1) {
  if (!(theta0 >= 0.0 && theta0 <= kPi / 2.0) || !(theta1 >= 0.0 && theta1 <= kPi / 2.0)) {
    throw std::invalid_argument("povm_elements: angles must lie in [0, pi/2]");
  }
  Operator m0(2);
  m0(0, 0) = std::cos(theta0);
  m0(1, 1) = std::cos(theta1);
  Operator m1(2);
  m1(0, 0) = std::sin(theta0);
  m1(1, 1) = std::sin(theta1);
  return {m0, m1};
}

double failure_probability_closed(double n, double b, double xi) {
  if (!(n > 0.0)) throw std::invalid_argument("failure_probability_closed: n must be positive");
  if (!(b >= 1.0)) throw std::invalid_argument("failure_probability_closed: b must be >= 1");
  if (!(xi > 0.0 && xi <= kPi / 4.0 + EPS_ALG)) {
    throw std::invalid_argument("failure_probability_closed: xi must lie in (0, pi/4]");
  }
  const double t2 = std::tan(xi) * std::tan(xi);
  const double n2 = n * n;
  return (1.0 + n2 * n2 * t2) / ((1.0 + n2 * t2) * (1.0 + n) * (1.0 + n * b));
}

ProtocolReport run_improved_protocol(const ImprovedParams& p, const GateSpec& g,
                                     const StateVector& target) {
  p.validate();
  g.validate();
  if (std::abs(p.xi - g.xi) > EPS_ALG) {
    throw std::invalid_argument("run_improved_protocol: params and gate disagree on xi");
  }

  const ResourceSpec spec = coefficients_from_angles(p.theta0, p.theta1);
  const StateVector resource = build_resource_state(spec);
  const auto [m0, m1] = povm_elements(p.theta0, p.theta1);
  const Operator cnot =
      Operator::from_rows({{1.0, 0.0, 0.0, 0.0},
                           {0.0, 1.0, 0.0, 0.0},
                           {0.0, 0.0, 0.0, 1.0},
                           {0.0, 0.0, 1.0, 0.0}});

  ProtocolReport report;
  report.entanglement = resource_entanglement(spec);
  report.classical_bits = 2;
  std::string convention;

  for (int m = 0; m < 2; ++m) {
    // "Restart from state M_m |psi>": the transformed state keeps the
    // resource shape, so the general technique reruns on its renormalized
    // coefficients with the POVM branch probability as a scale.
    StateVector post = resource;
    apply_operator(post, m == 0 ? m0 : m1, {"b0"});
    if (m == 1) apply_gate(post, cnot, {"b0", "b1"});

    std::array<double, 4> sub{};
    double weight = 0.0;
    for (std::size_t idx = 0; idx < post.amplitudes.size(); ++idx) {
      const cplx amp = post.amplitudes[idx];
      const bool resource_slot = idx == 0b000 || idx == 0b001 || idx == 0b110 || idx == 0b111;
      if (!resource_slot) {
        if (std::abs(amp) > EPS_ALG) {
          throw std::logic_error("run_improved_protocol: POVM broke the resource shape");
        }
        continue;
      }
      if (std::abs(amp.imag()) > EPS_ALG || amp.real() < -EPS_ALG) {
        throw std::logic_error("run_improved_protocol: non-real resource coefficient");
      }
      weight += std::norm(amp);
    }
    sub = {post.amplitudes[0b000].real(), post.amplitudes[0b001].real(),
           post.amplitudes[0b110].real(), post.amplitudes[0b111].real()};
    if (weight < PROB_FLOOR) continue;
    const double inv = 1.0 / std::sqrt(weight);
    for (double& l : sub) l = std::max(0.0, l * inv);

    internal::GeneralRunOptions opt;
    opt.lambda = sub;
    opt.angles = m == 0 ? MeasurementAngles{p.xi, p.xi} : MeasurementAngles{p.xi, p.delta1};
    opt.gate = g;
    opt.path_prefix = {{"b0.povm", m == 0 ? "M0" : "M1"}};
    opt.probability_scale = weight;
    internal::GeneralRunOutput run = internal::enumerate_general_branches(opt, target);

    if (convention.empty()) {
      convention = run.sigma_x_convention;
    } else if (convention != run.sigma_x_convention) {
      convention = "mixed";
    }
    for (BranchRecord& branch : run.branches) {
      report.branches.push_back(std::move(branch));
    }
  }

  report.sigma_x_convention = convention.empty() ? "-1" : convention;
  for (const BranchRecord& branch : report.branches) {
    if (branch.success) report.fidelity += branch.probability;
  }
  return report;
}

}  // namespace statorsim

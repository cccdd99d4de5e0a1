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

#include "statorsim/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "branch_internal.hpp"
#include "statorsim/tolerances.hpp"

namespace statorsim {

namespace {

constexpr double kPi = std::numbers::pi;
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

// |0><0| (x) I + phase |1><1| (x) op, on (control, target) with the control
// as the most significant bit.
Operator controlled_on_one(const Operator& op, cplx phase) {
  Operator u(4);
  u(0, 0) = 1.0;
  u(1, 1) = 1.0;
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t c = 0; c < 2; ++c) {
      u(2 + r, 2 + c) = phase * op(r, c);
    }
  }
  return u;
}

}  // namespace

void ResourceSpec::validate() const {
  double sum = 0.0;
  for (double l : lambda) {
    if (l < 0.0 || !std::isfinite(l)) {
      throw std::invalid_argument("ResourceSpec: coefficients must be non-negative");
    }
    sum += l * l;
  }
  if (std::abs(sum - 1.0) > EPS_ALG) {
    throw std::invalid_argument("ResourceSpec: squared coefficients must sum to 1, got " +
                                std::to_string(sum));
  }
}

double ResourceSpec::entanglement_parameter() const {
  return lambda[0] * lambda[0] + lambda[1] * lambda[1];
}

void GateSpec::validate() const {
  if (!(xi >= 0.0 && xi <= kPi / 4.0 + EPS_ALG)) {
    throw std::invalid_argument("GateSpec: xi must lie in [0, pi/4]");
  }
  pauli_axis_matrix(axis_a);
  pauli_axis_matrix(axis_b);
}

void MeasurementAngles::validate() const {
  if (!(delta0 >= 0.0 && delta0 <= kPi / 2.0 + EPS_ALG) ||
      !(delta1 >= 0.0 && delta1 <= kPi / 2.0 + EPS_ALG)) {
    throw std::invalid_argument("MeasurementAngles: angles must lie in [0, pi/2]");
  }
}

const char* basis_label(BasisOutcome which) {
  switch (which) {
    case BasisOutcome::B00: return "B00";
    case BasisOutcome::B01: return "B01";
    case BasisOutcome::B10: return "B10";
    case BasisOutcome::B11: return "B11";
  }
  throw std::invalid_argument("basis_label: bad outcome");
}

double ProtocolReport::path_probability(const std::vector<PathStep>& steps) const {
  double total = 0.0;
  for (const BranchRecord& branch : branches) {
    bool all = true;
    for (const PathStep& step : steps) {
      if (std::find(branch.path.begin(), branch.path.end(), step) == branch.path.end()) {
        all = false;
        break;
      }
    }
    if (all) total += branch.probability;
  }
  return total;
}

double ProtocolReport::basis_probability(const std::string& outcome) const {
  double total = 0.0;
  for (const BranchRecord& branch : branches) {
    for (const PathStep& step : branch.path) {
      if ((step.first == "b0b1" || step.first == "c0c1") && step.second == outcome) {
        total += branch.probability;
        break;
      }
    }
  }
  return total;
}

std::vector<cplx> collective_basis_state(const MeasurementAngles& angles, BasisOutcome which) {
  angles.validate();
  const double c0 = std::cos(angles.delta0);
  const double s0 = std::sin(angles.delta0);
  const double c1 = std::cos(angles.delta1);
  const double s1 = std::sin(angles.delta1);
  switch (which) {
    // Index order |b0 b1>: 00, 01, 10, 11.
    case BasisOutcome::B00: return {c0, 0.0, 0.0, s0};
    case BasisOutcome::B01: return {-s0, 0.0, 0.0, c0};
    case BasisOutcome::B10: return {0.0, c1, s1, 0.0};
    case BasisOutcome::B11: return {0.0, -s1, c1, 0.0};
  }
  throw std::invalid_argument("collective_basis_state: bad outcome");
}

StateVector build_resource_state(const ResourceSpec& spec) {
  spec.validate();
  std::vector<cplx> amps(8, cplx{0.0, 0.0});
  amps[0b000] = spec.lambda[0];
  amps[0b001] = spec.lambda[1];
  amps[0b110] = spec.lambda[2];
  amps[0b111] = spec.lambda[3];
  return StateVector({"a", "b0", "b1"}, std::move(amps));
}

Operator target_gate(const GateSpec& g) {
  g.validate();
  const Operator sigma_ab = kron(pauli_axis_matrix(g.axis_a), pauli_axis_matrix(g.axis_b));
  return cplx{std::cos(g.xi), 0.0} * Operator::identity(4) +
         cplx{0.0, std::sin(g.xi)} * sigma_ab;
}

std::array<double, 4> branch_probabilities(const ResourceSpec& spec,
                                           const MeasurementAngles& angles) {
  spec.validate();
  angles.validate();
  const double c0 = std::cos(angles.delta0), s0 = std::sin(angles.delta0);
  const double c1 = std::cos(angles.delta1), s1 = std::sin(angles.delta1);
  const auto& l = spec.lambda;
  return {
      l[0] * l[0] * c0 * c0 + l[3] * l[3] * s0 * s0,
      l[0] * l[0] * s0 * s0 + l[3] * l[3] * c0 * c0,
      l[1] * l[1] * c1 * c1 + l[2] * l[2] * s1 * s1,
      l[1] * l[1] * s1 * s1 + l[2] * l[2] * c1 * c1,
  };
}

Operator branch_operator_closed_form(const ResourceSpec& spec, const MeasurementAngles& angles,
                                     const GateSpec& g, BasisOutcome which) {
  spec.validate();
  angles.validate();
  g.validate();
  const Operator sigma_ab = kron(pauli_axis_matrix(g.axis_a), pauli_axis_matrix(g.axis_b));
  return internal::stator_branch_closed_form(spec.lambda, angles, sigma_ab, which);
}

namespace internal {

GeneralRunOutput enumerate_general_branches(const GeneralRunOptions& opt,
                                            const StateVector& target) {
  if (target.labels != std::vector<std::string>{"A", "B"}) {
    throw std::invalid_argument("enumerate_general_branches: target labels must be {A, B}");
  }
  if (std::abs(target.norm() - 1.0) > EPS_SIM) {
    throw std::invalid_argument("enumerate_general_branches: target is not normalized");
  }

  const Operator sigma_a = pauli_axis_matrix(opt.gate.axis_a);
  const Operator sigma_b = pauli_axis_matrix(opt.gate.axis_b);
  const Operator sigma_ab = kron(sigma_a, sigma_b);
  const Operator gate_op = target_gate(opt.gate);
  const Operator id2 = Operator::identity(2);
  const Operator u_alice = controlled_on_one(sigma_a, cplx{0.0, 1.0});
  const Operator u_bob = controlled_on_one(sigma_b, cplx{1.0, 0.0});
  const Operator sigma_z = Operator::from_rows({{1.0, 0.0}, {0.0, -1.0}});

  std::vector<cplx> resource_amps(8, cplx{0.0, 0.0});
  resource_amps[0b000] = opt.lambda[0];
  resource_amps[0b001] = opt.lambda[1];
  resource_amps[0b110] = opt.lambda[2];
  resource_amps[0b111] = opt.lambda[3];
  const StateVector resource({"a", "b0", "b1"}, std::move(resource_amps));

  const std::vector<cplx> sx_plus{kInvSqrt2, kInvSqrt2};
  const std::vector<cplx> sx_minus{kInvSqrt2, -kInvSqrt2};

  auto pipeline = [&](const StateVector& tgt, bool alice_minus, bool apply_z,
                      BasisOutcome which) {
    StateVector psi = tensor(resource, tgt);
    apply_gate(psi, u_alice, {"a", "A"});
    apply_gate(psi, u_bob, {"b1", "B"});
    StateVector after_a = project_unnormalized(psi, alice_minus ? sx_minus : sx_plus, {"a"});
    if (apply_z) apply_gate(after_a, sigma_z, {"b0"});
    return project_unnormalized(after_a, collective_basis_state(opt.angles, which),
                                {"b0", "b1"})
        .amplitudes;
  };

  auto build_leaves = [&](bool minus_gets_z) {
    std::vector<RawLeaf> leaves;
    for (int s = 0; s < 2; ++s) {
      const bool minus = (s == 1);
      const bool apply_z = (minus == minus_gets_z);
      for (int w = 0; w < 4; ++w) {
        const auto which = static_cast<BasisOutcome>(w);
        RawLeaf leaf;
        leaf.path = opt.path_prefix;
        leaf.path.emplace_back("a.sx", minus ? "-1" : "+1");
        leaf.path.emplace_back("b0b1", basis_label(which));
        leaf.which = which;
        leaf.effective_lambda = opt.lambda;
        leaf.effective_angles = opt.angles;
        leaf.t_raw = Operator(4);
        for (int col = 0; col < 4; ++col) {
          const StateVector e = basis_state({"A", "B"}, {col >> 1, col & 1});
          const auto amps = pipeline(e, minus, apply_z, which);
          for (int row = 0; row < 4; ++row) leaf.t_raw(row, col) = amps[row];
        }
        leaves.push_back(std::move(leaf));
      }
    }
    return leaves;
  };

  const std::vector<std::pair<std::string, Operator>> corrections = {
      {"IxI", Operator::identity(4)},
      {"IxS", kron(id2, sigma_b)},
      {"SxI", kron(sigma_a, id2)},
      {"SxS", sigma_ab},
  };

  // Derived convention first: the "-1" outcome triggers sigma_z on b0.
  LeafResolution minus_z = resolve_leaves(build_leaves(true), target.amplitudes, corrections,
                                          sigma_ab, gate_op, opt.probability_scale);
  GeneralRunOutput out;
  if (minus_z.max_closed_form_distance <= EPS_SIM) {
    out.branches = std::move(minus_z.branches);
    out.sigma_x_convention = "-1";
    return out;
  }
  LeafResolution plus_z = resolve_leaves(build_leaves(false), target.amplitudes, corrections,
                                         sigma_ab, gate_op, opt.probability_scale);
  if (plus_z.max_closed_form_distance < minus_z.max_closed_form_distance) {
    out.branches = std::move(plus_z.branches);
    out.sigma_x_convention = "+1";
  } else {
    out.branches = std::move(minus_z.branches);
    out.sigma_x_convention = "-1";
  }
  return out;
}

}  // namespace internal

ProtocolReport run_general_protocol(const ResourceSpec& spec, const MeasurementAngles& angles,
                                    const GateSpec& g, const StateVector& target) {
  spec.validate();
  angles.validate();
  g.validate();

  internal::GeneralRunOptions opt;
  opt.lambda = spec.lambda;
  opt.angles = angles;
  opt.gate = g;
  internal::GeneralRunOutput run = internal::enumerate_general_branches(opt, target);

  ProtocolReport report;
  report.branches = std::move(run.branches);
  report.sigma_x_convention = run.sigma_x_convention;
  for (const BranchRecord& branch : report.branches) {
    if (branch.success) report.fidelity += branch.probability;
  }
  report.entanglement = resource_entanglement(spec);
  report.classical_bits = 2;
  return report;
}

std::pair<ResourceSpec, MeasurementAngles> deterministic_config(const GateSpec& g) {
  g.validate();
  ResourceSpec spec;
  spec.lambda = {0.5, 0.5, 0.5, 0.5};
  return {spec, MeasurementAngles{g.xi, g.xi}};
}

std::pair<ResourceSpec, MeasurementAngles> fpt_config(const GateSpec& g, double f_target) {
  g.validate();
  if (!(f_target > 0.0 && f_target <= 1.0)) {
    throw std::invalid_argument("fpt_config: F_target must lie in (0, 1]");
  }
  ResourceSpec spec;
  const double l0 = std::sqrt(f_target / 2.0);
  spec.lambda = {l0, 0.0, std::sqrt(1.0 - f_target), l0};
  // delta1 = 0 parks the entire failure mass on B11, so B00/B01 are exactly
  // the success branches.
  return {spec, MeasurementAngles{g.xi, 0.0}};
}

std::pair<ResourceSpec, MeasurementAngles> smallxi_config(const GateSpec& g, double alpha) {
  g.validate();
  if (!(g.xi > 0.0)) {
    throw std::domain_error("smallxi_config: xi = 0 is degenerate (delta1 forced to 0)");
  }
  if (!(alpha > 0.0 && alpha < kPi / 2.0)) {
    throw std::invalid_argument("smallxi_config: alpha must lie in (0, pi/2)");
  }
  ResourceSpec spec;
  spec.lambda = {0.0, std::cos(alpha), std::sin(alpha), 0.0};
  // tan(alpha) tan(delta1) = tan(xi); delta0 is irrelevant because B00 and
  // B01 carry zero probability, and is pinned to 0 for determinism.
  const double delta1 = std::atan(std::tan(g.xi) / std::tan(alpha));
  return {spec, MeasurementAngles{0.0, delta1}};
}

double optimal_alpha(const GateSpec& g) {
  g.validate();
  if (!(g.xi > 0.0)) {
    throw std::domain_error("optimal_alpha: xi must be positive");
  }
  return std::atan(std::sqrt(std::tan(g.xi)));
}

double resource_entanglement(const ResourceSpec& spec) {
  spec.validate();
  return binary_entropy(spec.entanglement_parameter());
}

}  // namespace statorsim

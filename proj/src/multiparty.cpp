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

#include "statorsim/multiparty.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "branch_internal.hpp"
#include "statorsim/tolerances.hpp"

namespace statorsim {

namespace {

constexpr double kPi = std::numbers::pi;
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

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

StateVector quasi_ghz_from_lambda(std::size_t num_partners,
                                  const std::array<double, 4>& lambda) {
  std::vector<std::string> labels;
  for (std::size_t k = 1; k <= num_partners; ++k) labels.push_back("a" + std::to_string(k));
  labels.emplace_back("c0");
  labels.emplace_back("c1");
  const std::size_t dim = std::size_t{1} << labels.size();
  std::vector<cplx> amps(dim, cplx{0.0, 0.0});
  amps[0] = lambda[0];          // |0..0 0 0>
  amps[1] = lambda[1];          // |0..0 0 1>
  amps[dim - 2] = lambda[2];    // |1..1 1 0>
  amps[dim - 1] = lambda[3];    // |1..1 1 1>
  return StateVector(std::move(labels), std::move(amps));
}

// The Pauli tensor realized on the success branches.
Operator multiparty_sigma_tensor(const MultipartySpec& spec) {
  Operator sigma = pauli_axis_matrix(spec.partner_axes.front());
  for (std::size_t k = 1; k < spec.num_partners; ++k) {
    sigma = kron(sigma, pauli_axis_matrix(spec.partner_axes[k]));
  }
  if (spec.include_charlie_target()) {
    sigma = kron(sigma, pauli_axis_matrix(*spec.charlie_axis));
  }
  return sigma;
}

struct MultipartyRunOutput {
  std::vector<BranchRecord> branches;
  std::string sigma_x_convention;
};

// One POVM-resolved pass of the multiparty protocol: partners' controlled
// gates and sigma_x measurements, parity-reduced sigma_z on c0, Charlie's
// optional controlled gate, collective (c0, c1) measurement, correction
// search over {I, S}.
MultipartyRunOutput enumerate_multiparty_branches(
    const MultipartySpec& spec, const std::array<double, 4>& lambda,
    const MeasurementAngles& angles, double xi, const std::vector<PathStep>& path_prefix,
    double probability_scale, const StateVector& target) {
  const std::size_t n = spec.num_partners;
  const Operator sigma_tensor = multiparty_sigma_tensor(spec);
  const Operator gate_op = multiparty_target_gate(spec, xi);
  const Operator sigma_z = Operator::from_rows({{1.0, 0.0}, {0.0, -1.0}});
  const StateVector resource = quasi_ghz_from_lambda(n, lambda);
  const std::vector<std::string> target_labels = multiparty_target_labels(spec);
  const std::size_t target_dim = std::size_t{1} << target_labels.size();

  const std::vector<cplx> sx_plus{kInvSqrt2, kInvSqrt2};
  const std::vector<cplx> sx_minus{kInvSqrt2, -kInvSqrt2};

  std::vector<Operator> partner_gates;
  for (std::size_t k = 0; k < n; ++k) {
    // The i phase of the controlled gate sits on partner A1 alone.
    partner_gates.push_back(controlled_on_one(pauli_axis_matrix(spec.partner_axes[k]),
                                              k == 0 ? cplx{0.0, 1.0} : cplx{1.0, 0.0}));
  }

  auto pipeline = [&](const StateVector& tgt, std::size_t sign_bits, bool minus_gets_z,
                      BasisOutcome which) {
    StateVector psi = tensor(resource, tgt);
    for (std::size_t k = 0; k < n; ++k) {
      const std::string ancilla = "a" + std::to_string(k + 1);
      const std::string partner_target = "A" + std::to_string(k + 1);
      apply_gate(psi, partner_gates[k], {ancilla, partner_target});
    }
    std::size_t z_count = 0;
    for (std::size_t k = 0; k < n; ++k) {
      const bool minus = ((sign_bits >> k) & 1u) != 0;
      if (minus == minus_gets_z) ++z_count;
      psi = project_unnormalized(psi, minus ? sx_minus : sx_plus,
                                 {"a" + std::to_string(k + 1)});
    }
    if (z_count % 2 == 1) apply_gate(psi, sigma_z, {"c0"});
    if (spec.include_charlie_target()) {
      apply_gate(psi, controlled_on_one(pauli_axis_matrix(*spec.charlie_axis), cplx{1.0, 0.0}),
                 {"c0", "C"});
    }
    return project_unnormalized(psi, collective_basis_state(angles, which), {"c0", "c1"})
        .amplitudes;
  };

  auto build_leaves = [&](bool minus_gets_z) {
    std::vector<internal::RawLeaf> leaves;
    for (std::size_t sign_bits = 0; sign_bits < (std::size_t{1} << n); ++sign_bits) {
      for (int w = 0; w < 4; ++w) {
        const auto which = static_cast<BasisOutcome>(w);
        internal::RawLeaf leaf;
        leaf.path = path_prefix;
        for (std::size_t k = 0; k < n; ++k) {
          leaf.path.emplace_back("a" + std::to_string(k + 1) + ".sx",
                                 ((sign_bits >> k) & 1u) ? "-1" : "+1");
        }
        leaf.path.emplace_back("c0c1", basis_label(which));
        leaf.which = which;
        leaf.effective_lambda = lambda;
        leaf.effective_angles = angles;
        leaf.t_raw = Operator(target_dim);
        for (std::size_t col = 0; col < target_dim; ++col) {
          std::vector<int> bits(target_labels.size());
          for (std::size_t q = 0; q < target_labels.size(); ++q) {
            bits[q] = static_cast<int>((col >> (target_labels.size() - 1 - q)) & 1u);
          }
          const auto amps = pipeline(basis_state(target_labels, bits), sign_bits,
                                     minus_gets_z, which);
          for (std::size_t row = 0; row < target_dim; ++row) leaf.t_raw(row, col) = amps[row];
        }
        leaves.push_back(std::move(leaf));
      }
    }
    return leaves;
  };

  const std::vector<std::pair<std::string, Operator>> corrections = {
      {"I", Operator::identity(target_dim)},
      {"S", sigma_tensor},
  };

  internal::LeafResolution minus_z =
      internal::resolve_leaves(build_leaves(true), target.amplitudes, corrections,
                               sigma_tensor, gate_op, probability_scale);
  MultipartyRunOutput out;
  if (minus_z.max_closed_form_distance <= EPS_SIM) {
    out.branches = std::move(minus_z.branches);
    out.sigma_x_convention = "-1";
    return out;
  }
  internal::LeafResolution plus_z =
      internal::resolve_leaves(build_leaves(false), target.amplitudes, corrections,
                               sigma_tensor, gate_op, probability_scale);
  if (plus_z.max_closed_form_distance < minus_z.max_closed_form_distance) {
    out.branches = std::move(plus_z.branches);
    out.sigma_x_convention = "+1";
  } else {
    out.branches = std::move(minus_z.branches);
    out.sigma_x_convention = "-1";
  }
  return out;
}

}  // namespace

void MultipartySpec::validate() const {
  if (num_partners < 2) {
    throw std::invalid_argument("MultipartySpec: need at least 2 partners");
  }
  if (num_partners > partner_cap) {
    throw std::invalid_argument("MultipartySpec: partner count exceeds the cap of " +
                                std::to_string(partner_cap));
  }
  lambda.validate();
  if (partner_axes.size() != num_partners) {
    throw std::invalid_argument("MultipartySpec: need one axis per partner");
  }
  for (const PauliAxis& axis : partner_axes) pauli_axis_matrix(axis);
  if (charlie_axis) pauli_axis_matrix(*charlie_axis);
  if (mode == MultipartyMode::General) {
    angles.validate();
  } else {
    if (!(improved_n > 0.0)) throw std::invalid_argument("MultipartySpec: improved_n <= 0");
    if (!(improved_b > 1.0)) throw std::invalid_argument("MultipartySpec: improved_b <= 1");
  }
}

std::vector<std::string> quasi_ghz_labels(const MultipartySpec& spec) {
  std::vector<std::string> labels;
  for (std::size_t k = 1; k <= spec.num_partners; ++k) {
    labels.push_back("a" + std::to_string(k));
  }
  labels.emplace_back("c0");
  labels.emplace_back("c1");
  return labels;
}

std::vector<std::string> multiparty_target_labels(const MultipartySpec& spec) {
  std::vector<std::string> labels;
  for (std::size_t k = 1; k <= spec.num_partners; ++k) {
    labels.push_back("A" + std::to_string(k));
  }
  if (spec.include_charlie_target()) labels.emplace_back("C");
  return labels;
}

StateVector build_quasi_ghz(const MultipartySpec& spec) {
  spec.validate();
  return quasi_ghz_from_lambda(spec.num_partners, spec.lambda.lambda);
}

Operator multiparty_target_gate(const MultipartySpec& spec, double xi) {
  if (!(xi >= 0.0 && xi <= kPi / 4.0 + EPS_ALG)) {
    throw std::invalid_argument("multiparty_target_gate: xi must lie in [0, pi/4]");
  }
  const Operator sigma = multiparty_sigma_tensor(spec);
  return cplx{std::cos(xi), 0.0} * Operator::identity(sigma.dim) +
         cplx{0.0, std::sin(xi)} * sigma;
}

ProtocolReport run_multiparty_protocol(const MultipartySpec& spec, double xi,
                                       const StateVector& target) {
  spec.validate();
  if (!(xi > 0.0 && xi <= kPi / 4.0 + EPS_ALG)) {
    throw std::invalid_argument("run_multiparty_protocol: xi must lie in (0, pi/4]");
  }
  if (target.labels != multiparty_target_labels(spec)) {
    throw std::invalid_argument("run_multiparty_protocol: unexpected target labels");
  }
  if (std::abs(target.norm() - 1.0) > EPS_SIM) {
    throw std::invalid_argument("run_multiparty_protocol: target is not normalized");
  }

  ProtocolReport report;
  report.entanglement = resource_entanglement(spec.lambda);
  report.classical_bits = 2 * static_cast<int>(spec.num_partners);

  if (spec.mode == MultipartyMode::General) {
    MultipartyRunOutput run = enumerate_multiparty_branches(
        spec, spec.lambda.lambda, spec.angles, xi, {}, 1.0, target);
    report.branches = std::move(run.branches);
    report.sigma_x_convention = run.sigma_x_convention;
  } else {
    const ImprovedParams p = params_from_nb(spec.improved_n, spec.improved_b, xi);
    const ResourceSpec derived = coefficients_from_angles(p.theta0, p.theta1);
    for (std::size_t i = 0; i < 4; ++i) {
      if (std::abs(derived.lambda[i] - spec.lambda.lambda[i]) > EPS_ALG) {
        throw std::invalid_argument(
            "run_multiparty_protocol: improved-mode lambda must come from "
            "coefficients_from_angles(n, b)");
      }
    }
    const auto [m0, m1] = povm_elements(p.theta0, p.theta1);
    const Operator cnot =
        Operator::from_rows({{1.0, 0.0, 0.0, 0.0},
                             {0.0, 1.0, 0.0, 0.0},
                             {0.0, 0.0, 0.0, 1.0},
                             {0.0, 0.0, 1.0, 0.0}});
    std::string convention;
    for (int m = 0; m < 2; ++m) {
      StateVector post = build_quasi_ghz(spec);
      apply_operator(post, m == 0 ? m0 : m1, {"c0"});
      if (m == 1) apply_gate(post, cnot, {"c0", "c1"});

      const std::size_t dim = post.amplitudes.size();
      std::array<double, 4> sub = {post.amplitudes[0].real(), post.amplitudes[1].real(),
                                   post.amplitudes[dim - 2].real(),
                                   post.amplitudes[dim - 1].real()};
      double weight = 0.0;
      for (double l : sub) weight += l * l;
      if (weight < PROB_FLOOR) continue;
      const double inv = 1.0 / std::sqrt(weight);
      for (double& l : sub) l = std::max(0.0, l * inv);

      const MeasurementAngles branch_angles =
          m == 0 ? MeasurementAngles{xi, xi} : MeasurementAngles{xi, p.delta1};
      MultipartyRunOutput run = enumerate_multiparty_branches(
          spec, sub, branch_angles, xi, {{"c0.povm", m == 0 ? "M0" : "M1"}}, weight, target);
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
  }

  for (const BranchRecord& branch : report.branches) {
    if (branch.success) report.fidelity += branch.probability;
  }
  return report;
}

SeparabilityResult pairwise_separability(const StateVector& state,
                                         const std::vector<std::string>& pair) {
  if (pair.size() != 2) {
    throw std::invalid_argument("pairwise_separability: need exactly two labels");
  }
  const DensityMatrix rho = reduced_density_matrix(state, pair);
  SeparabilityResult result;
  result.min_pt_eigenvalue = ppt_min_eigenvalue(rho);
  result.separable = result.min_pt_eigenvalue >= -1e-10;
  return result;
}

double bipartition_entropy(const StateVector& state, const std::vector<std::string>& part) {
  if (part.empty() || part.size() >= state.num_qubits()) {
    throw std::invalid_argument("bipartition_entropy: part must be a nonempty strict subset");
  }
  std::unordered_set<std::string> chosen(part.begin(), part.end());
  if (chosen.size() != part.size()) {
    throw std::invalid_argument("bipartition_entropy: duplicate labels");
  }
  for (const std::string& label : part) {
    if (!state.has_qubit(label)) {
      throw std::invalid_argument("bipartition_entropy: unknown label " + label);
    }
  }
  // For a pure state both sides of the cut have the same entropy; reduce
  // the smaller one.
  std::vector<std::string> side = part;
  if (part.size() > state.num_qubits() / 2) {
    side.clear();
    for (const std::string& label : state.labels) {
      if (chosen.find(label) == chosen.end()) side.push_back(label);
    }
  }
  return von_neumann_entropy(reduced_density_matrix(state, side));
}

}  // namespace statorsim

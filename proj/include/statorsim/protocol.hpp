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

#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "statorsim/linalg.hpp"
#include "statorsim/state_vector.hpp"

namespace statorsim {

// Resource-state coefficients: lambda0|000> + lambda1|001> + lambda2|110> +
// lambda3|111> over qubits (a, b0, b1). The single entanglement parameter is
// H = lambda0^2 + lambda1^2.
struct ResourceSpec {
  std::array<double, 4> lambda{};

  void validate() const;  // throws on negative entries or sum of squares != 1
  double entanglement_parameter() const;
};

// Nonlocal target gate cos(xi) I + i sin(xi) sigma_nA (x) sigma_nB.
struct GateSpec {
  double xi = 0.0;
  PauliAxis axis_a{0.0, 0.0, 1.0};
  PauliAxis axis_b{0.0, 0.0, 1.0};

  void validate() const;  // xi in [0, pi/4], unit axes
};

// Angles of the collective two-qubit measurement basis on (b0, b1).
struct MeasurementAngles {
  double delta0 = 0.0;
  double delta1 = 0.0;

  void validate() const;  // both in [0, pi/2]
};

enum class BasisOutcome { B00 = 0, B01 = 1, B10 = 2, B11 = 3 };

const char* basis_label(BasisOutcome which);

using PathStep = std::pair<std::string, std::string>;

// One exhaustively enumerated measurement branch. conditional_operator is the
// reconstructed post-correction operator on the targets, scaled to Frobenius
// norm sqrt(dim); distance is measured against the target gate up to a global
// phase, and success <=> distance <= EPS_SIM.
struct BranchRecord {
  std::vector<PathStep> path;
  double probability = 0.0;
  Operator conditional_operator{4};
  bool success = false;
  double distance = 0.0;
};

struct ProtocolReport {
  std::vector<BranchRecord> branches;
  double fidelity = 0.0;       // total probability of success branches
  double entanglement = 0.0;   // ebits consumed by the resource state
  int classical_bits = 0;
  // Which sigma_x outcome triggered the sigma_z correction; "-1" is the
  // derived convention, recorded here in case a configuration forces a swap.
  std::string sigma_x_convention = "-1";

  // Total probability of branches whose path contains every listed step.
  double path_probability(const std::vector<PathStep>& steps) const;
  double basis_probability(const std::string& outcome) const;
};

// The four collective basis vectors over (b0, b1), indexed |b0 b1>:
//   B00 = cos(d0)|00> + sin(d0)|11>     B01 = cos(d0)|11> - sin(d0)|00>
//   B10 = cos(d1)|01> + sin(d1)|10>     B11 = cos(d1)|10> - sin(d1)|01>
std::vector<cplx> collective_basis_state(const MeasurementAngles& angles, BasisOutcome which);

StateVector build_resource_state(const ResourceSpec& spec);

Operator target_gate(const GateSpec& g);

// Closed-form probabilities P(B00..B11); sums to 1 for a valid spec.
std::array<double, 4> branch_probabilities(const ResourceSpec& spec,
                                           const MeasurementAngles& angles);

// Closed-form unnormalized branch operator, e.g. for B00:
//   lambda0 cos(d0) I(x)I + i lambda3 sin(d0) sigma_nA(x)sigma_nB.
Operator branch_operator_closed_form(const ResourceSpec& spec, const MeasurementAngles& angles,
                                     const GateSpec& g, BasisOutcome which);

// Full run of the general technique on a normalized 2-qubit target with
// labels {A, B}: controlled gates, sigma_x measurement on a (both outcomes
// kept), sigma_z correction on b0, collective measurement on (b0, b1), and a
// per-branch correction Pauli chosen by form fit. Branches with probability
// below PROB_FLOOR are omitted.
ProtocolReport run_general_protocol(const ResourceSpec& spec, const MeasurementAngles& angles,
                                    const GateSpec& g, const StateVector& target);

// Deterministic regime: lambda = (1/2,1/2,1/2,1/2), delta0 = delta1 = xi;
// F = 1 at entanglement 1.
std::pair<ResourceSpec, MeasurementAngles> deterministic_config(const GateSpec& g);

// One-shot regime trading fidelity for entanglement: lambda0 = lambda3 =
// sqrt(F/2), lambda2 = sqrt(1-F), delta0 = xi; success exactly on B00, B01
// with total probability F.
std::pair<ResourceSpec, MeasurementAngles> fpt_config(const GateSpec& g, double f_target);

// Small-angle regime: lambda = (0, cos a, sin a, 0) with
// tan(a) tan(delta1) = tan(xi); the single success branch is B10.
std::pair<ResourceSpec, MeasurementAngles> smallxi_config(const GateSpec& g, double alpha);

// Maximizer of the B10 probability: alpha = arctan(sqrt(tan xi)), where the
// success probability is 1/(1 + sin 2xi).
double optimal_alpha(const GateSpec& g);

// h(lambda0^2 + lambda1^2), the ebit cost of the resource state.
double resource_entanglement(const ResourceSpec& spec);

}  // namespace statorsim

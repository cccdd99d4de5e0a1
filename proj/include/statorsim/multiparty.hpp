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

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "statorsim/improved.hpp"
#include "statorsim/protocol.hpp"

namespace statorsim {

enum class MultipartyMode { General, Improved };

// Quasi-GHZ generalization: N distributed partners A1..AN each hold one
// ancilla a1..aN; Charlie holds (c0, c1) and plays the measurement role. The
// resource is lambda0|0..0 00> + lambda1|0..0 01> + lambda2|1..1 10> +
// lambda3|1..1 11>, whose every two-qubit reduction is separable.
struct MultipartySpec {
  std::size_t num_partners = 2;
  ResourceSpec lambda;
  std::vector<PauliAxis> partner_axes;      // one per partner
  std::optional<PauliAxis> charlie_axis;    // set to extend the gate to Charlie's target
  MultipartyMode mode = MultipartyMode::General;
  MeasurementAngles angles;                 // General mode only
  double improved_n = 1.0;                  // Improved mode only
  double improved_b = 1.001;                // Improved mode only
  std::size_t partner_cap = 8;

  bool include_charlie_target() const { return charlie_axis.has_value(); }
  void validate() const;
};

// Partner ancilla labels a1..aN followed by c0, c1.
std::vector<std::string> quasi_ghz_labels(const MultipartySpec& spec);

// Target labels A1..AN (and C when Charlie's target is included).
std::vector<std::string> multiparty_target_labels(const MultipartySpec& spec);

StateVector build_quasi_ghz(const MultipartySpec& spec);

// The realized gate cos(xi) I + i sin(xi) sigma_n1 (x) ... (x) sigma_nN
// ((x) sigma_nC when Charlie's target is included).
Operator multiparty_target_gate(const MultipartySpec& spec, double xi);

// Each partner applies the controlled sigma gate (the i phase sits on partner
// A1 alone), measures sigma_x, and sends one bit; sigma_z lands on c0 for
// each "-1" result; Charlie optionally extends the gate to C, then performs
// the collective (c0, c1) measurement (with the POVM-and-CNOT preamble in
// Improved mode) and broadcasts corrections. classical_bits = 2N.
ProtocolReport run_multiparty_protocol(const MultipartySpec& spec, double xi,
                                       const StateVector& target);

// PPT check of the two-qubit reduction onto `pair`; for two qubits a
// non-negative minimum eigenvalue is equivalent to separability.
struct SeparabilityResult {
  double min_pt_eigenvalue = 0.0;
  bool separable = false;
};

SeparabilityResult pairwise_separability(const StateVector& state,
                                         const std::vector<std::string>& pair);

// Entropy of the reduction onto `part` (a nonempty strict subset of the
// register); the smaller side of the cut is reduced, which is equivalent for
// a pure state.
double bipartition_entropy(const StateVector& state, const std::vector<std::string>& part);

}  // namespace statorsim

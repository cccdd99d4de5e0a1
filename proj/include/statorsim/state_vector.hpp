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

#include "statorsim/linalg.hpp"

namespace statorsim {

// Pure state over a register of named qubits. labels[0] is the most
// significant bit of the basis index, so amplitudes.size() == 1 << labels.size()
// and |labels[0] labels[1] ...> maps to index (b0 b1 ...) read as binary.
struct StateVector {
  std::vector<std::string> labels;
  std::vector<cplx> amplitudes;

  StateVector() = default;
  StateVector(std::vector<std::string> qubit_labels, std::vector<cplx> amps);

  std::size_t num_qubits() const { return labels.size(); }
  std::size_t index_of(const std::string& label) const;
  bool has_qubit(const std::string& label) const;

  double norm() const;
  void normalize();
};

// |label_0 ... label_{k-1}> with the given classical bit pattern.
StateVector basis_state(const std::vector<std::string>& labels, const std::vector<int>& bits);

// Tensor product; label sets must be disjoint.
StateVector tensor(const StateVector& a, const StateVector& b);

cplx inner_product(const StateVector& a, const StateVector& b);

// Applies a unitary (dim 2^k) to the listed qubits, in the order given:
// targets[0] is the most significant bit of the gate's index space.
void apply_gate(StateVector& psi, const Operator& gate, const std::vector<std::string>& targets);

// Raw linear action of an arbitrary operator on the listed qubits; the
// result is left unnormalized (e.g. for POVM elements).
void apply_operator(StateVector& psi, const Operator& op, const std::vector<std::string>& targets);

struct KrausResult {
  double probability = 0.0;
  // Normalized post-state; absent when probability is below PROB_FLOOR.
  std::optional<StateVector> post_state;
};

// Applies one Kraus operator (no unitarity requirement) and renormalizes.
KrausResult apply_kraus(const StateVector& psi, const Operator& k,
                        const std::vector<std::string>& targets);

// Projects onto an orthonormal outcome state over `targets` (dim 2^k), then
// removes those qubits from the register. outcome_states must be orthonormal
// to 1e-10 across a full call sequence; each call checks the outcome is unit.
struct MeasureResult {
  double probability = 0.0;
  std::optional<StateVector> post_state;  // remaining qubits, normalized
};

MeasureResult projective_measure(const StateVector& psi, const std::vector<cplx>& outcome_state,
                                 const std::vector<std::string>& targets);

// Measures in a complete orthonormal basis; one result per basis row, in
// order. Probabilities sum to 1 for a normalized input.
std::vector<MeasureResult> projective_measure(const StateVector& psi,
                                              const std::vector<std::vector<cplx>>& basis,
                                              const std::vector<std::string>& targets);

// Same projection but the surviving amplitudes keep their raw weight; the
// squared norm of the result is the outcome probability. The measured qubits
// are removed from the register.
StateVector project_unnormalized(const StateVector& psi, const std::vector<cplx>& outcome_state,
                                 const std::vector<std::string>& targets);

// Validates that the rows of `basis` (each of dim 2^k) are orthonormal.
bool is_orthonormal_basis(const std::vector<std::vector<cplx>>& basis, double eps);

// Partial trace down to `keep` (in the given order: keep[0] most significant).
DensityMatrix reduced_density_matrix(const StateVector& psi, const std::vector<std::string>& keep);

}  // namespace statorsim

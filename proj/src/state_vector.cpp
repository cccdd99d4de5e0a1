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

#include "statorsim/state_vector.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

#include "statorsim/tolerances.hpp"

namespace statorsim {

namespace {

void require_distinct(const std::vector<std::string>& labels) {
  std::unordered_set<std::string> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) {
      throw std::invalid_argument("duplicate qubit label: " + l);
    }
  }
}

// Positions (bit indices from the most significant end) of `targets` in psi.
std::vector<std::size_t> target_positions(const StateVector& psi,
                                          const std::vector<std::string>& targets) {
  require_distinct(targets);
  std::vector<std::size_t> pos;
  pos.reserve(targets.size());
  for (const auto& t : targets) pos.push_back(psi.index_of(t));
  return pos;
}

// Splits a register index into (gate-space index, untouched-space index).
// Gate-space bits follow the order of `pos`: pos[0] is the most significant
// gate bit. The untouched bits keep their relative order.
struct IndexSplitter {
  std::vector<std::size_t> pos;        // register bit position per gate bit
  std::vector<std::size_t> rest_pos;   // register bit positions not in pos
  std::size_t n;

  IndexSplitter(std::size_t num_qubits, std::vector<std::size_t> p) : pos(std::move(p)), n(num_qubits) {
    std::vector<bool> used(n, false);
    for (std::size_t q : pos) used[q] = true;
    for (std::size_t q = 0; q < n; ++q) {
      if (!used[q]) rest_pos.push_back(q);
    }
  }

  std::size_t bit_of(std::size_t index, std::size_t register_bit) const {
    return (index >> (n - 1 - register_bit)) & 1u;
  }

  std::size_t gate_index(std::size_t index) const {
    std::size_t g = 0;
    for (std::size_t q : pos) g = (g << 1) | bit_of(index, q);
    return g;
  }

  std::size_t rest_index(std::size_t index) const {
    std::size_t r = 0;
    for (std::size_t q : rest_pos) r = (r << 1) | bit_of(index, q);
    return r;
  }

  std::size_t combine(std::size_t gate_index, std::size_t rest_index) const {
    std::size_t index = 0;
    for (std::size_t k = 0; k < pos.size(); ++k) {
      const std::size_t bit = (gate_index >> (pos.size() - 1 - k)) & 1u;
      index |= bit << (n - 1 - pos[k]);
    }
    for (std::size_t k = 0; k < rest_pos.size(); ++k) {
      const std::size_t bit = (rest_index >> (rest_pos.size() - 1 - k)) & 1u;
      index |= bit << (n - 1 - rest_pos[k]);
    }
    return index;
  }
};

}  // namespace

StateVector::StateVector(std::vector<std::string> qubit_labels, std::vector<cplx> amps)
    : labels(std::move(qubit_labels)), amplitudes(std::move(amps)) {
  require_distinct(labels);
  if (amplitudes.size() != (std::size_t{1} << labels.size())) {
    throw std::invalid_argument("StateVector: amplitude count must be 2^(label count)");
  }
}

std::size_t StateVector::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == label) return i;
  }
  throw std::invalid_argument("unknown qubit label: " + label);
}

bool StateVector::has_qubit(const std::string& label) const {
  return std::find(labels.begin(), labels.end(), label) != labels.end();
}

double StateVector::norm() const {
  double s = 0.0;
  for (const cplx& a : amplitudes) s += std::norm(a);
  return std::sqrt(s);
}

void StateVector::normalize() {
  const double n = norm();
  if (n < PROB_FLOOR) {
    throw std::runtime_error("StateVector::normalize: vanishing norm");
  }
  for (cplx& a : amplitudes) a /= n;
}

StateVector basis_state(const std::vector<std::string>& labels, const std::vector<int>& bits) {
  if (labels.size() != bits.size()) {
    throw std::invalid_argument("basis_state: labels/bits size mismatch");
  }
  std::size_t index = 0;
  for (int b : bits) {
    if (b != 0 && b != 1) throw std::invalid_argument("basis_state: bits must be 0 or 1");
    index = (index << 1) | static_cast<std::size_t>(b);
  }
  std::vector<cplx> amps(std::size_t{1} << labels.size(), cplx{0.0, 0.0});
  amps[index] = cplx{1.0, 0.0};
  return StateVector(labels, std::move(amps));
}

StateVector tensor(const StateVector& a, const StateVector& b) {
  for (const auto& l : b.labels) {
    if (a.has_qubit(l)) throw std::invalid_argument("tensor: shared label " + l);
  }
  std::vector<std::string> labels = a.labels;
  labels.insert(labels.end(), b.labels.begin(), b.labels.end());
  std::vector<cplx> amps(a.amplitudes.size() * b.amplitudes.size());
  for (std::size_t i = 0; i < a.amplitudes.size(); ++i) {
    for (std::size_t j = 0; j < b.amplitudes.size(); ++j) {
      amps[i * b.amplitudes.size() + j] = a.amplitudes[i] * b.amplitudes[j];
    }
  }
  return StateVector(std::move(labels), std::move(amps));
}

cplx inner_product(const StateVector& a, const StateVector& b) {
  if (a.labels != b.labels) {
    throw std::invalid_argument("inner_product: registers differ");
  }
  cplx s{0.0, 0.0};
  for (std::size_t i = 0; i < a.amplitudes.size(); ++i) {
    s += std::conj(a.amplitudes[i]) * b.amplitudes[i];
  }
  return s;
}

void apply_operator(StateVector& psi, const Operator& op,
                    const std::vector<std::string>& targets) {
  if (op.dim != (std::size_t{1} << targets.size())) {
    throw std::invalid_argument("apply_operator: operator dim does not match target count");
  }
  const IndexSplitter split(psi.num_qubits(), target_positions(psi, targets));
  const std::size_t gate_dim = op.dim;
  const std::size_t rest_dim = psi.amplitudes.size() / gate_dim;

  std::vector<cplx> column(gate_dim);
  for (std::size_t r = 0; r < rest_dim; ++r) {
    for (std::size_t g = 0; g < gate_dim; ++g) {
      column[g] = psi.amplitudes[split.combine(g, r)];
    }
    for (std::size_t g = 0; g < gate_dim; ++g) {
      cplx v{0.0, 0.0};
      for (std::size_t h = 0; h < gate_dim; ++h) v += op(g, h) * column[h];
      psi.amplitudes[split.combine(g, r)] = v;
    }
  }
}

void apply_gate(StateVector& psi, const Operator& gate, const std::vector<std::string>& targets) {
  if (!is_unitary(gate, EPS_SIM)) {
    throw std::invalid_argument("apply_gate: gate is not unitary");
  }
  apply_operator(psi, gate, targets);
}

KrausResult apply_kraus(const StateVector& psi, const Operator& k,
                        const std::vector<std::string>& targets) {
  StateVector out = psi;
  apply_operator(out, k, targets);

  KrausResult result;
  const double n = out.norm();
  result.probability = n * n;
  if (result.probability >= PROB_FLOOR) {
    out.normalize();
    result.post_state = std::move(out);
  }
  return result;
}

StateVector project_unnormalized(const StateVector& psi, const std::vector<cplx>& outcome_state,
                                 const std::vector<std::string>& targets) {
  const std::size_t k = targets.size();
  const std::size_t gate_dim = std::size_t{1} << k;
  if (outcome_state.size() != gate_dim) {
    throw std::invalid_argument("project_unnormalized: outcome dim mismatch");
  }
  double onorm = 0.0;
  for (const cplx& a : outcome_state) onorm += std::norm(a);
  if (std::abs(onorm - 1.0) > EPS_SIM) {
    throw std::invalid_argument("project_unnormalized: outcome state is not unit");
  }
  const IndexSplitter split(psi.num_qubits(), target_positions(psi, targets));
  const std::size_t rest_dim = psi.amplitudes.size() / gate_dim;

  std::vector<std::string> rest_labels;
  for (std::size_t q : split.rest_pos) rest_labels.push_back(psi.labels[q]);

  std::vector<cplx> amps(rest_dim, cplx{0.0, 0.0});
  for (std::size_t r = 0; r < rest_dim; ++r) {
    cplx v{0.0, 0.0};
    for (std::size_t g = 0; g < gate_dim; ++g) {
      v += std::conj(outcome_state[g]) * psi.amplitudes[split.combine(g, r)];
    }
    amps[r] = v;
  }
  return StateVector(std::move(rest_labels), std::move(amps));
}

MeasureResult projective_measure(const StateVector& psi, const std::vector<cplx>& outcome_state,
                                 const std::vector<std::string>& targets) {
  StateVector proj = project_unnormalized(psi, outcome_state, targets);
  MeasureResult result;
  const double n = proj.norm();
  result.probability = n * n;
  if (result.probability >= PROB_FLOOR) {
    proj.normalize();
    result.post_state = std::move(proj);
  }
  return result;
}

std::vector<MeasureResult> projective_measure(const StateVector& psi,
                                              const std::vector<std::vector<cplx>>& basis,
                                              const std::vector<std::string>& targets) {
  if (!is_orthonormal_basis(basis, 1e-10)) {
    throw std::invalid_argument("projective_measure: basis is not orthonormal and complete");
  }
  std::vector<MeasureResult> results;
  results.reserve(basis.size());
  for (const auto& outcome : basis) {
    results.push_back(projective_measure(psi, outcome, targets));
  }
  return results;
}

bool is_orthonormal_basis(const std::vector<std::vector<cplx>>& basis, double eps) {
  if (basis.empty()) return false;
  const std::size_t d = basis.front().size();
  if (basis.size() != d) return false;
  for (const auto& row : basis) {
    if (row.size() != d) return false;
  }
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      cplx dot{0.0, 0.0};
      for (std::size_t k = 0; k < d; ++k) dot += std::conj(basis[i][k]) * basis[j][k];
      const cplx want = (i == j) ? cplx{1.0, 0.0} : cplx{0.0, 0.0};
      if (std::abs(dot - want) > eps) return false;
    }
  }
  return true;
}

DensityMatrix reduced_density_matrix(const StateVector& psi, const std::vector<std::string>& keep) {
  const IndexSplitter split(psi.num_qubits(), target_positions(psi, keep));
  const std::size_t keep_dim = std::size_t{1} << keep.size();
  const std::size_t rest_dim = psi.amplitudes.size() / keep_dim;

  DensityMatrix rho;
  rho.dim = keep_dim;
  rho.entries.assign(keep_dim * keep_dim, cplx{0.0, 0.0});
  for (std::size_t r = 0; r < rest_dim; ++r) {
    for (std::size_t i = 0; i < keep_dim; ++i) {
      const cplx ai = psi.amplitudes[split.combine(i, r)];
      if (ai == cplx{0.0, 0.0}) continue;
      for (std::size_t j = 0; j < keep_dim; ++j) {
        rho.entries[i * keep_dim + j] += ai * std::conj(psi.amplitudes[split.combine(j, r)]);
      }
    }
  }
  return rho;
}

}  // namespace statorsim

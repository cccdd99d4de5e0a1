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

// Shared internals of the branch-enumerating protocol runners. Every branch
// operator in this family has the canonical form a I + i b S for a tensor of
// axis Paulis S, so the correction search and the closed-form references are
// the same machinery for the two-party and multiparty runners.

#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "statorsim/linalg.hpp"
#include "statorsim/protocol.hpp"

namespace statorsim::internal {

// Closed-form branch operator for resource coefficients `lam` (non-negative,
// not necessarily normalized) and Pauli tensor S = `sigma_tensor`:
//   B00: lam0 cos(d0) I + i lam3 sin(d0) S    B01: lam3 cos(d0) I + i lam0 sin(d0) S
//   B10: lam1 cos(d1) I + i lam2 sin(d1) S    B11: lam2 cos(d1) I + i lam1 sin(d1) S
Operator stator_branch_closed_form(const std::array<double, 4>& lam,
                                   const MeasurementAngles& angles,
                                   const Operator& sigma_tensor, BasisOutcome which);

// Distance of t to its best fit of the form |u| I + i |v| S with
// u = tr(t)/dim, v = tr(S t)/dim; 1.0 when the fit collapses to zero.
double canonical_form_distance(const Operator& t, const Operator& sigma_tensor);

struct CorrectionPick {
  std::size_t index = 0;
  Operator corrected{1};
  double form_distance = 1.0;
};

// Applies each candidate correction (left multiplication) and keeps the one
// with the smallest canonical-form distance; near-ties (within EPS_SIM) are
// broken toward the candidate closest to the closed-form reference, earlier
// candidates winning exact ties. reference with norm < 1e-14 is ignored.
CorrectionPick pick_correction(const Operator& t_raw,
                               const std::vector<std::pair<std::string, Operator>>& candidates,
                               const Operator& sigma_tensor, const Operator& reference);

// Scales a nonzero operator to Frobenius norm sqrt(dim), the norm of a
// unitary of that dimension.
Operator unitary_normalized(const Operator& t);

// A reconstructed leaf of the measurement tree before corrections.
struct RawLeaf {
  std::vector<PathStep> path;
  BasisOutcome which = BasisOutcome::B00;
  Operator t_raw{1};  // linear action on the target space
  // Reference coefficients/angles for the closed-form comparison; for
  // sub-branches these are the transformed resource coefficients.
  std::array<double, 4> effective_lambda{};
  MeasurementAngles effective_angles;
};

struct LeafResolution {
  std::vector<BranchRecord> branches;
  // Worst over leaves of the best-over-candidates distance to the closed
  // form. Degenerate single-term leaves fit under several corrections, so
  // the convention score must not depend on which one the pick rule chose.
  double max_closed_form_distance = 0.0;
};

// Turns raw leaves into BranchRecords: picks corrections, measures distances
// against `gate_op`, and drops leaves whose probability on `target_amps`
// falls below PROB_FLOOR.
LeafResolution resolve_leaves(const std::vector<RawLeaf>& leaves,
                              const std::vector<cplx>& target_amps,
                              const std::vector<std::pair<std::string, Operator>>& corrections,
                              const Operator& sigma_tensor, const Operator& gate_op,
                              double probability_scale);

// The general technique from the resource state down to resolved branches:
// controlled gates, sigma_x on a (both outcomes), sigma_z on b0 per the
// convention, collective (b0, b1) measurement, correction search. The
// improved runner reuses this on its transformed resource coefficients with
// a path prefix and the POVM branch probability as the scale.
struct GeneralRunOptions {
  std::array<double, 4> lambda{};  // normalized, non-negative
  MeasurementAngles angles;
  GateSpec gate;
  std::vector<PathStep> path_prefix;
  double probability_scale = 1.0;
};

struct GeneralRunOutput {
  std::vector<BranchRecord> branches;
  std::string sigma_x_convention;  // outcome that triggered sigma_z
};

GeneralRunOutput enumerate_general_branches(const GeneralRunOptions& opt,
                                            const StateVector& target);

}  // namespace statorsim::internal

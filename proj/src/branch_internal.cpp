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

#include "branch_internal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "statorsim/tolerances.hpp"

namespace statorsim::internal {

Operator stator_branch_closed_form(const std::array<double, 4>& lam,
                                   const MeasurementAngles& angles,
                                   const Operator& sigma_tensor, BasisOutcome which) {
  double a = 0.0;
  double b = 0.0;
  const double c0 = std::cos(angles.delta0);
  const double s0 = std::sin(angles.delta0);
  const double c1 = std::cos(angles.delta1);
  const double s1 = std::sin(angles.delta1);
  switch (which) {
    case BasisOutcome::B00: a = lam[0] * c0; b = lam[3] * s0; break;
    case BasisOutcome::B01: a = lam[3] * c0; b = lam[0] * s0; break;
    case BasisOutcome::B10: a = lam[1] * c1; b = lam[2] * s1; break;
    case BasisOutcome::B11: a = lam[2] * c1; b = lam[1] * s1; break;
  }
  return cplx{a, 0.0} * Operator::identity(sigma_tensor.dim) + cplx{0.0, b} * sigma_tensor;
}

double canonical_form_distance(const Operator& t, const Operator& sigma_tensor) {
  const double dim = static_cast<double>(t.dim);
  const cplx u = trace(t) / dim;
  const cplx v = trace(sigma_tensor * t) / dim;
  const Operator fit = cplx{std::abs(u), 0.0} * Operator::identity(t.dim) +
                       cplx{0.0, std::abs(v)} * sigma_tensor;
  if (frobenius_norm(fit) < 1e-14 || frobenius_norm(t) < 1e-14) return 1.0;
  return distance_up_to_phase(t, fit);
}

CorrectionPick pick_correction(const Operator& t_raw,
                               const std::vector<std::pair<std::string, Operator>>& candidates,
                               const Operator& sigma_tensor, const Operator& reference) {
  if (candidates.empty()) {
    throw std::invalid_argument("pick_correction: no candidates");
  }
  std::vector<Operator> corrected;
  std::vector<double> form_d;
  corrected.reserve(candidates.size());
  double min_form = 1.0;
  for (const auto& [name, correction] : candidates) {
    (void)name;
    corrected.push_back(correction * t_raw);
    form_d.push_back(canonical_form_distance(corrected.back(), sigma_tensor));
    min_form = std::min(min_form, form_d.back());
  }
  // Degenerate angles (delta = 0 or pi/2) make several corrections fit the
  // canonical form equally well; the closed-form reference disambiguates.
  const bool use_reference = frobenius_norm(reference) >= 1e-14;
  CorrectionPick best;
  bool first = true;
  double best_ref = 2.0;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (form_d[i] > min_form + EPS_SIM) continue;
    const double ref_d =
        use_reference ? distance_up_to_phase(corrected[i], reference) : 0.0;
    if (first || ref_d < best_ref) {
      best.index = i;
      best.corrected = corrected[i];
      best.form_distance = form_d[i];
      best_ref = ref_d;
      first = false;
    }
  }
  return best;
}

Operator unitary_normalized(const Operator& t) {
  const double norm = frobenius_norm(t);
  if (norm < 1e-14) {
    throw std::invalid_argument("unitary_normalized: zero operator");
  }
  const double scale = std::sqrt(static_cast<double>(t.dim)) / norm;
  return cplx{scale, 0.0} * t;
}

LeafResolution resolve_leaves(const std::vector<RawLeaf>& leaves,
                              const std::vector<cplx>& target_amps,
                              const std::vector<std::pair<std::string, Operator>>& corrections,
                              const Operator& sigma_tensor, const Operator& gate_op,
                              double probability_scale) {
  LeafResolution out;
  for (const RawLeaf& leaf : leaves) {
    double prob = 0.0;
    for (std::size_t r = 0; r < leaf.t_raw.dim; ++r) {
      cplx v{0.0, 0.0};
      for (std::size_t c = 0; c < leaf.t_raw.dim; ++c) {
        v += leaf.t_raw(r, c) * target_amps[c];
      }
      prob += std::norm(v);
    }
    prob *= probability_scale;
    if (prob < PROB_FLOOR) continue;

    const Operator reference = stator_branch_closed_form(leaf.effective_lambda,
                                                         leaf.effective_angles, sigma_tensor,
                                                         leaf.which);
    const CorrectionPick pick = pick_correction(leaf.t_raw, corrections, sigma_tensor, reference);
    double d_reference = 1.0;
    if (frobenius_norm(reference) >= 1e-14) {
      for (const auto& [name, correction] : corrections) {
        (void)name;
        d_reference = std::min(d_reference,
                               distance_up_to_phase(correction * leaf.t_raw, reference));
      }
    }
    out.max_closed_form_distance = std::max(out.max_closed_form_distance, d_reference);

    BranchRecord record;
    record.path = leaf.path;
    record.path.emplace_back("correction", corrections[pick.index].first);
    record.probability = prob;
    record.conditional_operator = unitary_normalized(pick.corrected);
    record.distance = distance_up_to_phase(record.conditional_operator, gate_op);
    record.success = record.distance <= EPS_SIM;
    out.branches.push_back(std::move(record));
  }
  return out;
}

}  // namespace statorsim::internal

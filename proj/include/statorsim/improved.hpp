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

#include <utility>

#include "statorsim/protocol.hpp"

namespace statorsim {

// Reparameterization of the improved technique: n = tan^2(t0)/tan^2(t1),
// b = 2 cot^2(t0) + 1, and the retry-branch angle tan(d1) = n tan(xi).
struct ImprovedParams {
  double n = 1.0;
  double b = 1.001;
  double xi = 0.0;
  double theta0 = 0.0;
  double theta1 = 0.0;
  double delta1 = 0.0;

  void validate() const;
};

// Builds the derived angles from (n, b, xi); requires n > 0, b > 1,
// xi in (0, pi/4].
ImprovedParams params_from_nb(double n, double b, double xi);

// Normalized resource coefficients
//   lambda = (t1 c1, t0 c1, t0 c0, t1 c0) / sqrt((t0^2+t1^2)(c0^2+c1^2))
// with tK = tan(thetaK), cK = cos(thetaK). Satisfies
// lambda0 cos(t0) = lambda3 cos(t1) and lambda1 cos(t0) = lambda2 cos(t1).
ResourceSpec coefficients_from_angles(double theta0, double theta1);

// POVM on b0: M0 = diag(cos t0, cos t1), M1 = diag(sin t0, sin t1);
// M0^2 + M1^2 = I.
std::pair<Operator, Operator> povm_elements(double theta0, double theta1);

// Joint probability of the M1-then-B11 path,
//   (1 + n^4 tan^2 xi) / ((1 + n^2 tan^2 xi)(1 + n)(1 + n b)),
// valid for b >= 1 (the b = 1 limit is the closed-form idealization).
double failure_probability_closed(double n, double b, double xi);

// Full improved run: POVM on b0; on M0 restart the general technique with
// delta0 = delta1 = xi (all four basis branches succeed); on M1 apply
// CNOT(b0 -> b1) and restart with delta0 = xi, delta1 = arctan(n tan xi)
// (only B11 fails). Paths carry a ("b0.povm", "M0"/"M1") step.
ProtocolReport run_improved_protocol(const ImprovedParams& p, const GateSpec& g,
                                     const StateVector& target);

}  // namespace statorsim

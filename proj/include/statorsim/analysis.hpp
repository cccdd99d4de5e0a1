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
#include <string>
#include <vector>

namespace statorsim {

// Numerator coefficients of d P(B11) / d n as a quadratic in tan^2(xi):
//   C0 tan^4(xi) + C1 tan^2(xi) + C2  over  (1+n^2 tan^2 xi)^2 (1+n)^2 (1+nb)^2.
struct CCoeffs {
  double c0 = 0.0;
  double c1 = 0.0;
  double c2 = 0.0;
};

CCoeffs c_coefficients(double n, double b);

// The xi minimizing the failure probability at fixed (n, b):
//   tan^2 xi = -C1/(2 C0) + sqrt(C1^2/(4 C0^2) - C2/C0).
// Throws if the quartic has no positive root. The result is not clamped to
// pi/4; callers that need xi <= pi/4 must check.
double optimal_xi(double n, double b);

// Root in (1, 2) of n^6 + 2n^5 + 3n^4 - 4n^3 - 3n^2 - 2n - 1, by bracketed
// bisection to 1e-12. The polynomial does not depend on b; the parameter is
// kept so the call site reads like the other analysis entry points.
double find_n0(double b);

struct CurvePoint {
  double n = 0.0;
  double xi_opt = 0.0;
  double e0 = 0.0;        // h(n/(1+n)), the b -> 1 idealization
  double e0_exact = 0.0;  // h(H(n, b)) with the exact entanglement parameter
  double e_fpt = 0.0;     // h(F/2)
  double f = 0.0;         // 1 - failure probability at xi_opt
};

struct Curve {
  double b = 1.0;
  std::vector<CurvePoint> points;
  std::vector<std::string> warnings;  // skipped grid points
};

// Log-spaced grid on [find_n0(b), n_max].
std::vector<double> default_curve_grid(double b, std::size_t num_points = 2000,
                                       double n_max = 20.0);

Curve generate_curve(double b, const std::vector<double>& n_grid);

// Landmarks at the single crossing of e0 and e_fpt: the crossing abscissa n1,
// the common entanglement there, the fidelity, and xi_opt.
struct CurveCrossing {
  double n1 = 0.0;
  double entanglement = 0.0;
  double fidelity = 0.0;
  double xi = 0.0;
};

// Locates the sign change of (e0 - e_fpt) on the curve and refines it by
// bisection on the closed forms; throws if there is no unique sign change.
CurveCrossing find_crossings(const Curve& curve);

// Crossing abscissa computed directly from the closed forms, without a curve.
double empirical_threshold(double b);

// Implementation plan for one gate angle: below the crossing xi the improved
// protocol (inverted to its n) wins; above it the one-shot trade-off at the
// crossing fidelity is used as-is.
struct GatePlan {
  bool use_improved = false;
  double n = 0.0;
  double entanglement = 0.0;
  double fidelity = 0.0;
};

GatePlan plan_for_xi(double xi, double b);

}  // namespace statorsim

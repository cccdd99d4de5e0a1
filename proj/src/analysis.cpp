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

#include "statorsim/analysis.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <string>

#include "statorsim/improved.hpp"
#include "statorsim/linalg.hpp"
#include "statorsim/tolerances.hpp"

namespace statorsim {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kRootTol = 1e-12;

void require_nb(double n, double b) {
  if (!(n > 0.0)) throw std::invalid_argument("n must be positive");
  if (!(b >= 1.0)) throw std::invalid_argument("b must be >= 1");
}

// Bisection on a bracketing interval; f(lo) and f(hi) must have opposite
// signs.
double bisect(const std::function<double(double)>& f, double lo, double hi) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0)) {
    throw std::runtime_error("bisect: endpoints do not bracket a root");
  }
  while (hi - lo > kRootTol) {
    const double mid = 0.5 * (lo + hi);
    const double fmid = f(mid);
    if (fmid == 0.0) return mid;
    if ((fmid > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double n0_polynomial(double n) {
  return ((((((n + 2.0) * n + 3.0) * n - 4.0) * n - 3.0) * n - 2.0) * n) - 1.0;
}

// Exact entanglement parameter H(n, b) of the improved resource state.
double exact_entanglement_parameter(double n, double b) {
  const double inv_n = 1.0 / n;
  return 1.0 / ((1.0 - inv_n) * (b - 1.0) / (b + 1.0) + 1.0 + inv_n);
}

double e0_of(double n) { return binary_entropy(n / (1.0 + n)); }

double e_fpt_of(double n, double b) {
  const double f = 1.0 - failure_probability_closed(n, b, optimal_xi(n, b));
  return binary_entropy(f / 2.0);
}

double crossing_gap(double n, double b) { return e0_of(n) - e_fpt_of(n, b); }

}  // namespace

CCoeffs c_coefficients(double n, double b) {
  require_nb(n, b);
  CCoeffs c;
  const double n2 = n * n;
  const double n3 = n2 * n;
  const double n5 = n2 * n3;
  c.c0 = (2.0 + n + n * b) * n5;
  c.c1 = (2.0 * n3 + 3.0 * n2 - 4.0 * n - 3.0) * n2 * b +
         (3.0 * n3 + 4.0 * n2 - 3.0 * n - 2.0) * n;
  c.c2 = -1.0 - b - 2.0 * n * b;
  return c;
}

double optimal_xi(double n, double b) {
  require_nb(n, b);
  const CCoeffs c = c_coefficients(n, b);
  const double half = -c.c1 / (2.0 * c.c0);
  const double discriminant = half * half - c.c2 / c.c0;
  if (discriminant < 0.0) {
    throw std::domain_error("optimal_xi: quartic has no real root");
  }
  const double tan2 = half + std::sqrt(discriminant);
  if (!(tan2 > 0.0)) {
    throw std::domain_error("optimal_xi: quartic has no positive root");
  }
  return std::atan(std::sqrt(tan2));
}

double find_n0(double /*b*/) {
  return bisect(n0_polynomial, 1.0, 2.0);
}

std::vector<double> default_curve_grid(double b, std::size_t num_points, double n_max) {
  if (num_points < 2) throw std::invalid_argument("default_curve_grid: need >= 2 points");
  const double n0 = find_n0(b);
  if (!(n_max > n0)) throw std::invalid_argument("default_curve_grid: n_max must exceed n0");
  std::vector<double> grid(num_points);
  const double lo = std::log(n0);
  const double hi = std::log(n_max);
  for (std::size_t i = 0; i < num_points; ++i) {
    grid[i] = std::exp(lo + (hi - lo) * static_cast<double>(i) /
                                static_cast<double>(num_points - 1));
  }
  return grid;
}

Curve generate_curve(double b, const std::vector<double>& n_grid) {
  if (!(b >= 1.0)) throw std::invalid_argument("generate_curve: b must be >= 1");
  Curve curve;
  curve.b = b;
  curve.points.reserve(n_grid.size());
  for (double n : n_grid) {
    double xi = 0.0;
    try {
      xi = optimal_xi(n, b);
    } catch (const std::domain_error& e) {
      curve.warnings.push_back("n=" + std::to_string(n) + ": " + e.what());
      continue;
    }
    if (!(xi > 0.0 && xi <= kPi / 4.0 + EPS_ALG)) {
      curve.warnings.push_back("n=" + std::to_string(n) + ": optimal xi " +
                               std::to_string(xi) + " outside (0, pi/4]");
      continue;
    }
    CurvePoint point;
    point.n = n;
    point.xi_opt = xi;
    point.f = 1.0 - failure_probability_closed(n, b, xi);
    point.e0 = e0_of(n);
    point.e0_exact = binary_entropy(exact_entanglement_parameter(n, b));
    point.e_fpt = binary_entropy(point.f / 2.0);
    curve.points.push_back(point);
  }
  return curve;
}

CurveCrossing find_crossings(const Curve& curve) {
  if (curve.points.size() < 2) {
    throw std::invalid_argument("find_crossings: curve has fewer than 2 points");
  }
  std::size_t sign_changes = 0;
  std::size_t at = 0;
  for (std::size_t i = 0; i + 1 < curve.points.size(); ++i) {
    const double g0 = curve.points[i].e0 - curve.points[i].e_fpt;
    const double g1 = curve.points[i + 1].e0 - curve.points[i + 1].e_fpt;
    if ((g0 > 0.0) != (g1 > 0.0)) {
      ++sign_changes;
      at = i;
    }
  }
  if (sign_changes != 1) {
    throw std::runtime_error("find_crossings: expected exactly one sign change, found " +
                             std::to_string(sign_changes));
  }
  const double b = curve.b;
  const double n1 = bisect([b](double n) { return crossing_gap(n, b); },
                           curve.points[at].n, curve.points[at + 1].n);
  CurveCrossing crossing;
  crossing.n1 = n1;
  crossing.entanglement = e0_of(n1);
  crossing.xi = optimal_xi(n1, b);
  crossing.fidelity = 1.0 - failure_probability_closed(n1, b, crossing.xi);
  return crossing;
}

double empirical_threshold(double b) {
  if (!(b >= 1.0)) throw std::invalid_argument("empirical_threshold: b must be >= 1");
  const double lo = find_n0(b);
  const double hi = 20.0;
  return bisect([b](double n) { return crossing_gap(n, b); }, lo, hi);
}

GatePlan plan_for_xi(double xi, double b) {
  if (!(xi > 0.0 && xi <= kPi / 4.0 + EPS_ALG)) {
    throw std::invalid_argument("plan_for_xi: xi must lie in (0, pi/4]");
  }
  if (!(b >= 1.0)) throw std::invalid_argument("plan_for_xi: b must be >= 1");

  const double n1 = empirical_threshold(b);
  const double xi_crossing = optimal_xi(n1, b);
  GatePlan plan;
  if (xi <= xi_crossing) {
    // optimal_xi decreases in n past the crossing; invert it by bisection.
    double hi = std::max(2.0 * n1, 20.0);
    while (optimal_xi(hi, b) > xi) {
      hi *= 2.0;
      if (hi > 1e12) throw std::runtime_error("plan_for_xi: inversion bracket blew up");
    }
    const double n = bisect([b, xi](double m) { return optimal_xi(m, b) - xi; }, n1, hi);
    plan.use_improved = true;
    plan.n = n;
    plan.entanglement = e0_of(n);
    plan.fidelity = 1.0 - failure_probability_closed(n, b, xi);
  } else {
    // Past the crossing angle the one-shot trade-off at the crossing
    // fidelity is the better deal; its numbers are xi-independent.
    plan.use_improved = false;
    plan.n = n1;
    plan.fidelity = 1.0 - failure_probability_closed(n1, b, xi_crossing);
    plan.entanglement = binary_entropy(plan.fidelity / 2.0);
  }
  return plan;
}

}  // namespace statorsim

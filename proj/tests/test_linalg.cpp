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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "statorsim/linalg.hpp"
#include "statorsim/rng.hpp"
#include "statorsim/tolerances.hpp"

using namespace statorsim;

namespace {

const Operator kSigmaX = Operator::from_rows({{0.0, 1.0}, {1.0, 0.0}});
const Operator kSigmaZ = Operator::from_rows({{1.0, 0.0}, {0.0, -1.0}});

double max_abs_diff(const Operator& a, const Operator& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    m = std::max(m, std::abs(a.entries[i] - b.entries[i]));
  }
  return m;
}

}  // namespace

TEST_CASE("pauli_axis_matrix on coordinate axes") {
  CHECK(max_abs_diff(pauli_axis_matrix(PauliAxis{0.0, 0.0, 1.0}), kSigmaZ) == 0.0);
  CHECK(max_abs_diff(pauli_axis_matrix(PauliAxis{1.0, 0.0, 0.0}), kSigmaX) == 0.0);
  const Operator sy = pauli_axis_matrix(PauliAxis{0.0, 1.0, 0.0});
  CHECK(sy(0, 1) == cplx{0.0, -1.0});
  CHECK(sy(1, 0) == cplx{0.0, 1.0});
}

TEST_CASE("pauli_axis_matrix rejects non-unit axes") {
  CHECK_THROWS_AS(pauli_axis_matrix(PauliAxis{1.0, 1.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(make_axis(0.5, 0.5, 0.5), std::invalid_argument);
}

TEST_CASE("random pauli matrices square to the identity") {
  SplitMix64 rng(7);
  for (int i = 0; i < 50; ++i) {
    const Operator s = pauli_axis_matrix(random_axis(rng));
    CHECK(is_hermitian(s, EPS_ALG));
    CHECK(is_unitary(s, EPS_ALG));
    CHECK(std::abs(trace(s)) < EPS_ALG);
    CHECK(max_abs_diff(s * s, Operator::identity(2)) < EPS_ALG);
    const auto eigs = hermitian_eigenvalues(s.entries, 2);
    CHECK(eigs[0] == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(eigs[1] == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("kron satisfies the mixed-product identity") {
  SplitMix64 rng(11);
  auto random_op = [&rng](std::size_t dim) {
    Operator m(dim);
    for (cplx& v : m.entries) v = cplx{rng.next_normal(), rng.next_normal()};
    return m;
  };
  const Operator a = random_op(2), b = random_op(2), c = random_op(2), d = random_op(2);
  CHECK(max_abs_diff(kron(a, b) * kron(c, d), kron(a * c, b * d)) < 1e-12);
  CHECK(max_abs_diff(adjoint(kron(a, b)), kron(adjoint(a), adjoint(b))) < 1e-12);
  CHECK(std::abs(trace(kron(a, b)) - trace(a) * trace(b)) < 1e-12);
}

TEST_CASE("binary_entropy endpoints, midpoint, and symmetry") {
  CHECK(binary_entropy(0.0) == 0.0);
  CHECK(binary_entropy(1.0) == 0.0);
  CHECK(binary_entropy(0.5) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(binary_entropy(0.25) == doctest::Approx(0.811278124459133).epsilon(1e-12));
  CHECK(binary_entropy(0.3) == binary_entropy(0.7));
  CHECK_THROWS_AS(binary_entropy(-0.1), std::domain_error);
  CHECK_THROWS_AS(binary_entropy(1.1), std::domain_error);
}

TEST_CASE("hermitian_eigenvalues recovers a known similarity-transformed spectrum") {
  // (Hd (x) Hd) diag(1,2,3,4) (Hd (x) Hd)^dag has spectrum {1,2,3,4}.
  const double r = 1.0 / std::sqrt(2.0);
  const Operator hd = Operator::from_rows({{r, r}, {r, -r}});
  const Operator u = kron(hd, hd);
  Operator d(4);
  d(0, 0) = 1.0;
  d(1, 1) = 2.0;
  d(2, 2) = 3.0;
  d(3, 3) = 4.0;
  const Operator m = u * d * adjoint(u);
  const auto eigs = hermitian_eigenvalues(m.entries, 4);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(eigs[i] == doctest::Approx(static_cast<double>(i + 1)).epsilon(1e-12));
  }
}

TEST_CASE("hermitian_eigenvalues on a complex Hermitian matrix") {
  // [[2, i], [-i, 2]] has eigenvalues 1 and 3.
  Operator q(2);
  q(0, 0) = 2.0;
  q(0, 1) = cplx{0.0, 1.0};
  q(1, 0) = cplx{0.0, -1.0};
  q(1, 1) = 2.0;
  const auto eigs = hermitian_eigenvalues(q.entries, 2);
  CHECK(eigs[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(eigs[1] == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("hermitian_eigenvalues handles unequal diagonals with coupling") {
  // [[a, g], [g, b]] closed form: (a+b)/2 +- sqrt(((a-b)/2)^2 + g^2).
  SplitMix64 rng(13);
  for (int i = 0; i < 100; ++i) {
    const double a = rng.next_normal();
    const double b = rng.next_normal();
    const double g = rng.next_normal();
    Operator m(2);
    m(0, 0) = a;
    m(0, 1) = g;
    m(1, 0) = g;
    m(1, 1) = b;
    const double mid = 0.5 * (a + b);
    const double rad = std::sqrt(0.25 * (a - b) * (a - b) + g * g);
    const auto eigs = hermitian_eigenvalues(m.entries, 2);
    CHECK(eigs[0] == doctest::Approx(mid - rad).epsilon(1e-10));
    CHECK(eigs[1] == doctest::Approx(mid + rad).epsilon(1e-10));
  }
}

TEST_CASE("hermitian_eigenvalues preserves trace and Frobenius norm on random input") {
  SplitMix64 rng(17);
  for (int rep = 0; rep < 20; ++rep) {
    Operator m(8);
    for (cplx& v : m.entries) v = cplx{rng.next_normal(), rng.next_normal()};
    Operator h = m + adjoint(m);
    const auto eigs = hermitian_eigenvalues(h.entries, 8);
    double sum = 0.0;
    double sq = 0.0;
    for (double e : eigs) {
      sum += e;
      sq += e * e;
    }
    CHECK(sum == doctest::Approx(trace(h).real()).epsilon(1e-10));
    const double f = frobenius_norm(h);
    CHECK(sq == doctest::Approx(f * f).epsilon(1e-10));
  }
}

TEST_CASE("von_neumann_entropy basics") {
  DensityMatrix pure;
  pure.dim = 2;
  pure.entries = {cplx{1.0, 0.0}, {}, {}, {}};
  CHECK(von_neumann_entropy(pure) == 0.0);

  DensityMatrix mixed;
  mixed.dim = 2;
  mixed.entries = {cplx{0.5, 0.0}, {}, {}, cplx{0.5, 0.0}};
  CHECK(von_neumann_entropy(mixed) == doctest::Approx(1.0).epsilon(1e-14));

  DensityMatrix skew;
  skew.dim = 2;
  skew.entries = {cplx{0.25, 0.0}, {}, {}, cplx{0.75, 0.0}};
  CHECK(von_neumann_entropy(skew) == doctest::Approx(0.811278124459133).epsilon(1e-12));

  DensityMatrix bad;
  bad.dim = 2;
  bad.entries = {cplx{0.5, 0.0}, cplx{0.3, 0.0}, cplx{0.1, 0.0}, cplx{0.5, 0.0}};
  CHECK_THROWS_AS(von_neumann_entropy(bad), std::invalid_argument);
}

TEST_CASE("entropy is basis independent") {
  // Rotating diag(0.25, 0.75) by any unitary keeps the entropy.
  const double c = std::cos(0.7), s = std::sin(0.7);
  const Operator u = Operator::from_rows({{c, s}, {-s, c}});
  Operator d(2);
  d(0, 0) = 0.25;
  d(1, 1) = 0.75;
  const Operator rotated = u * d * adjoint(u);
  DensityMatrix rho;
  rho.dim = 2;
  rho.entries = rotated.entries;
  CHECK(von_neumann_entropy(rho) == doctest::Approx(0.811278124459133).epsilon(1e-12));
}

TEST_CASE("distance_up_to_phase identities") {
  const Operator u = pauli_axis_matrix(PauliAxis{0.0, 0.0, 1.0});
  CHECK(distance_up_to_phase(u, u) <= 1e-15);
  const cplx phase = std::exp(cplx{0.0, 1.2});
  CHECK(distance_up_to_phase(u, phase * u) < 1e-14);
  CHECK(distance_up_to_phase(Operator::identity(2), kSigmaX) == doctest::Approx(1.0));
  // Invariant under rescaling either argument.
  CHECK(distance_up_to_phase(u, cplx{2.5, 0.0} * u) < 1e-14);
  CHECK_THROWS_AS(distance_up_to_phase(u, Operator(2)), std::invalid_argument);
}

TEST_CASE("ppt_min_eigenvalue separates product from Bell states") {
  // |00> product state: PPT, min eigenvalue 0.
  DensityMatrix product;
  product.dim = 4;
  product.entries.assign(16, cplx{0.0, 0.0});
  product.entries[0] = 1.0;
  CHECK(ppt_min_eigenvalue(product) >= -1e-14);

  // Bell state (|00>+|11>)/sqrt(2): min PT eigenvalue exactly -1/2.
  DensityMatrix bell;
  bell.dim = 4;
  bell.entries.assign(16, cplx{0.0, 0.0});
  bell.entries[0 * 4 + 0] = 0.5;
  bell.entries[0 * 4 + 3] = 0.5;
  bell.entries[3 * 4 + 0] = 0.5;
  bell.entries[3 * 4 + 3] = 0.5;
  CHECK(ppt_min_eigenvalue(bell) == doctest::Approx(-0.5).epsilon(1e-12));

  // Werner mixture p|Bell><Bell| + (1-p) I/4: min PT eigenvalue (1-3p)/4.
  const double p = 0.6;
  DensityMatrix werner;
  werner.dim = 4;
  werner.entries.assign(16, cplx{0.0, 0.0});
  for (std::size_t i = 0; i < 4; ++i) werner.entries[i * 4 + i] = (1.0 - p) / 4.0;
  werner.entries[0 * 4 + 0] += p * 0.5;
  werner.entries[0 * 4 + 3] += p * 0.5;
  werner.entries[3 * 4 + 0] += p * 0.5;
  werner.entries[3 * 4 + 3] += p * 0.5;
  CHECK(ppt_min_eigenvalue(werner) == doctest::Approx((1.0 - 3.0 * p) / 4.0).epsilon(1e-12));

  DensityMatrix wrong;
  wrong.dim = 2;
  wrong.entries.assign(4, cplx{0.0, 0.0});
  CHECK_THROWS_AS(ppt_min_eigenvalue(wrong), std::invalid_argument);
}

TEST_CASE("DensityMatrix validation") {
  DensityMatrix ok;
  ok.dim = 2;
  ok.entries = {cplx{0.5, 0.0}, cplx{0.1, 0.2}, cplx{0.1, -0.2}, cplx{0.5, 0.0}};
  CHECK_NOTHROW(ok.validate());

  DensityMatrix bad_trace = ok;
  bad_trace.entries[0] = 0.7;
  CHECK_THROWS_AS(bad_trace.validate(), std::invalid_argument);

  DensityMatrix not_hermitian = ok;
  not_hermitian.entries[1] = cplx{0.3, 0.2};
  CHECK_THROWS_AS(not_hermitian.validate(), std::invalid_argument);

  DensityMatrix negative;
  negative.dim = 2;
  negative.entries = {cplx{1.5, 0.0}, {}, {}, cplx{-0.5, 0.0}};
  CHECK_THROWS_AS(negative.validate(), std::invalid_argument);
}

TEST_CASE("operator helpers") {
  CHECK_THROWS_AS(Operator::from_rows({{1.0, 0.0}, {0.0}}), std::invalid_argument);
  const Operator a = kSigmaX;
  CHECK(frobenius_norm(a) == doctest::Approx(std::sqrt(2.0)));
  CHECK(is_unitary(a, 1e-12));
  CHECK_FALSE(is_unitary(cplx{2.0, 0.0} * a, 1e-12));
  CHECK(is_hermitian(a, 1e-12));
  CHECK_FALSE(is_hermitian(Operator::from_rows({{0.0, 1.0}, {2.0, 0.0}}), 1e-12));
}

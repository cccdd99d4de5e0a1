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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace statorsim {

using cplx = std::complex<double>;

/// Unit direction on the Bloch sphere; the n in sigma_n.
struct PauliAxis {
  double nx = 0.0;
  double ny = 0.0;
  double nz = 1.0;
};

/// Validates nx^2+ny^2+nz^2 = 1 within EPS_ALG.
PauliAxis make_axis(double nx, double ny, double nz);

/// Dense square complex matrix. dim is a power of two.
struct Operator {
  std::size_t dim = 0;
  std::vector<cplx> entries;  // row-major, dim*dim

  Operator() = default;
  explicit Operator(std::size_t d) : dim(d), entries(d * d, cplx{0.0, 0.0}) {}

  cplx& operator()(std::size_t r, std::size_t c) { return entries[r * dim + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const { return entries[r * dim + c]; }

  static Operator identity(std::size_t d);
  static Operator from_rows(std::initializer_list<std::initializer_list<cplx>> rows);
};

Operator operator*(const Operator& a, const Operator& b);
Operator operator*(cplx s, const Operator& a);
Operator operator+(const Operator& a, const Operator& b);
Operator operator-(const Operator& a, const Operator& b);

Operator adjoint(const Operator& a);
Operator kron(const Operator& a, const Operator& b);
cplx trace(const Operator& a);
double frobenius_norm(const Operator& a);
bool is_unitary(const Operator& a, double eps);
bool is_hermitian(const Operator& a, double eps);

/// Positive-semidefinite unit-trace Hermitian matrix.
struct DensityMatrix {
  std::size_t dim = 0;
  std::vector<cplx> entries;  // row-major

  DensityMatrix() = default;
  explicit DensityMatrix(std::size_t d) : dim(d), entries(d * d, cplx{0.0, 0.0}) {}

  cplx& operator()(std::size_t r, std::size_t c) { return entries[r * dim + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const { return entries[r * dim + c]; }

  /// Throws if Hermiticity, unit trace, or positivity fails tolerance.
  void validate() const;
};

/// nx*sx + ny*sy + nz*sz. Hermitian, unitary, traceless, squares to I.
Operator pauli_axis_matrix(const PauliAxis& axis);

/// -p log2 p - (1-p) log2 (1-p), with 0 log 0 := 0.
double binary_entropy(double p);

/// Eigenvalues of a Hermitian matrix by cyclic Jacobi rotations, ascending.
std::vector<double> hermitian_eigenvalues(const std::vector<cplx>& entries, std::size_t dim);

/// -sum e_i log2 e_i over the spectrum, in ebits.
double von_neumann_entropy(const DensityMatrix& rho);

/// 1 - |tr(A^dag B)| / (||A||_F ||B||_F); zero iff A = c*B for some c != 0.
double distance_up_to_phase(const Operator& a, const Operator& b);

/// Minimum eigenvalue of the partial transpose (second qubit) of a two-qubit
/// state. Nonnegative iff the state is separable.
double ppt_min_eigenvalue(const DensityMatrix& rho);

}  // namespace statorsim

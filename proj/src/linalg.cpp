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

#include "statorsim/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "statorsim/tolerances.hpp"

namespace statorsim {

namespace {

bool power_of_two(std::size_t d) { return d != 0 && (d & (d - 1)) == 0; }

void require_same_dim(const Operator& a, const Operator& b, const char* what) {
  if (a.dim != b.dim) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch " +
                                std::to_string(a.dim) + " vs " + std::to_string(b.dim));
  }
}

}  // namespace

PauliAxis make_axis(double nx, double ny, double nz) {
  const double n2 = nx * nx + ny * ny + nz * nz;
  if (std::abs(n2 - 1.0) > EPS_ALG) {
    throw std::invalid_argument("make_axis: direction is not unit length");
  }
  return PauliAxis{nx, ny, nz};
}

Operator Operator::identity(std::size_t d) {
  Operator out(d);
  for (std::size_t i = 0; i < d; ++i) out(i, i) = 1.0;
  return out;
}

Operator Operator::from_rows(std::initializer_list<std::initializer_list<cplx>> rows) {
  Operator out(rows.size());
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != out.dim) {
      throw std::invalid_argument("Operator::from_rows: ragged rows");
    }
    std::size_t c = 0;
    for (const cplx& v : row) out(r, c++) = v;
    ++r;
  }
  return out;
}

Operator operator*(const Operator& a, const Operator& b) {
  require_same_dim(a, b, "operator*");
  Operator out(a.dim);
  for (std::size_t i = 0; i < a.dim; ++i) {
    for (std::size_t k = 0; k < a.dim; ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx{0.0, 0.0}) continue;
      for (std::size_t j = 0; j < a.dim; ++j) {
        out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

Operator operator*(cplx s, const Operator& a) {
  Operator out = a;
  for (cplx& v : out.entries) v *= s;
  return out;
}

Operator operator+(const Operator& a, const Operator& b) {
  require_same_dim(a, b, "operator+");
  Operator out = a;
  for (std::size_t i = 0; i < out.entries.size(); ++i) out.entries[i] += b.entries[i];
  return out;
}

Operator operator-(const Operator& a, const Operator& b) {
  require_same_dim(a, b, "operator-");
  Operator out = a;
  for (std::size_t i = 0; i < out.entries.size(); ++i) out.entries[i] -= b.entries[i];
  return out;
}

Operator adjoint(const Operator& a) {
  Operator out(a.dim);
  for (std::size_t i = 0; i < a.dim; ++i) {
    for (std::size_t j = 0; j < a.dim; ++j) out(j, i) = std::conj(a(i, j));
  }
  return out;
}

Operator kron(const Operator& a, const Operator& b) {
  Operator out(a.dim * b.dim);
  for (std::size_t i = 0; i < a.dim; ++i) {
    for (std::size_t j = 0; j < a.dim; ++j) {
      const cplx aij = a(i, j);
      if (aij == cplx{0.0, 0.0}) continue;
      for (std::size_t k = 0; k < b.dim; ++k) {
        for (std::size_t l = 0; l < b.dim; ++l) {
          out(i * b.dim + k, j * b.dim + l) = aij * b(k, l);
        }
      }
    }
  }
  return out;
}

cplx trace(const Operator& a) {
  cplx t{0.0, 0.0};
  for (std::size_t i = 0; i < a.dim; ++i) t += a(i, i);
  return t;
}

double frobenius_norm(const Operator& a) {
  double s = 0.0;
  for (const cplx& v : a.entries) s += std::norm(v);
  return std::sqrt(s);
}

bool is_unitary(const Operator& a, double eps) {
  const Operator g = adjoint(a) * a;
  for (std::size_t i = 0; i < a.dim; ++i) {
    for (std::size_t j = 0; j < a.dim; ++j) {
      const cplx want = (i == j) ? cplx{1.0, 0.0} : cplx{0.0, 0.0};
      if (std::abs(g(i, j) - want) > eps) return false;
    }
  }
  return true;
}

bool is_hermitian(const Operator& a, double eps) {
  for (std::size_t i = 0; i < a.dim; ++i) {
    for (std::size_t j = i; j < a.dim; ++j) {
      if (std::abs(a(i, j) - std::conj(a(j, i))) > eps) return false;
    }
  }
  return true;
}

void DensityMatrix::validate() const {
  if (!power_of_two(dim)) {
    throw std::invalid_argument("DensityMatrix: dim must be a power of two");
  }
  double max_herm = 0.0;
  cplx tr{0.0, 0.0};
  for (std::size_t i = 0; i < dim; ++i) {
    tr += (*this)(i, i);
    for (std::size_t j = i; j < dim; ++j) {
      max_herm = std::max(max_herm, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    }
  }
  if (max_herm > EPS_ALG) {
    throw std::invalid_argument("DensityMatrix: not Hermitian");
  }
  if (std::abs(tr - cplx{1.0, 0.0}) > EPS_ALG) {
    throw std::invalid_argument("DensityMatrix: trace != 1");
  }
  const auto eigs = hermitian_eigenvalues(entries, dim);
  if (!eigs.empty() && eigs.front() < -1e-10) {
    throw std::invalid_argument("DensityMatrix: negative eigenvalue " +
                                std::to_string(eigs.front()));
  }
}

Operator pauli_axis_matrix(const PauliAxis& axis) {
  const double n2 = axis.nx * axis.nx + axis.ny * axis.ny + axis.nz * axis.nz;
  if (std::abs(n2 - 1.0) > EPS_ALG) {
    throw std::invalid_argument("pauli_axis_matrix: non-unit axis");
  }
  Operator m(2);
  m(0, 0) = cplx{axis.nz, 0.0};
  m(0, 1) = cplx{axis.nx, -axis.ny};
  m(1, 0) = cplx{axis.nx, axis.ny};
  m(1, 1) = cplx{-axis.nz, 0.0};
  return m;
}

double binary_entropy(double p) {
  if (p < -EPS_ALG || p > 1.0 + EPS_ALG) {
    throw std::domain_error("binary_entropy: argument outside [0,1]");
  }
  p = std::clamp(p, 0.0, 1.0);
  double h = 0.0;
  if (p > 0.0) h -= p * std::log2(p);
  if (p < 1.0) h -= (1.0 - p) * std::log2(1.0 - p);
  return h;
}

// Cyclic Jacobi for complex Hermitian matrices. Each sweep annihilates every
// off-diagonal pair (p,q) with a complex Givens rotation; the off-diagonal
// mass is strictly decreasing, so a handful of sweeps reaches 1e-13 at the
// dimensions used here.
std::vector<double> hermitian_eigenvalues(const std::vector<cplx>& entries, std::size_t dim) {
  if (entries.size() != dim * dim) {
    throw std::invalid_argument("hermitian_eigenvalues: entries/dim mismatch");
  }
  std::vector<cplx> a = entries;
  auto at = [&](std::size_t r, std::size_t c) -> cplx& { return a[r * dim + c]; };

  double scale = 0.0;
  for (const cplx& v : a) scale = std::max(scale, std::abs(v));
  if (scale == 0.0) return std::vector<double>(dim, 0.0);
  const double tol = 1e-13 * scale;

  for (int sweep = 0; sweep < 60; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p + 1 < dim; ++p) {
      for (std::size_t q = p + 1; q < dim; ++q) off = std::max(off, std::abs(at(p, q)));
    }
    if (off <= tol) break;

    for (std::size_t p = 0; p + 1 < dim; ++p) {
      for (std::size_t q = p + 1; q < dim; ++q) {
        const cplx gamma = at(p, q);
        const double g = std::abs(gamma);
        if (g <= tol * 1e-2) continue;
        const double alpha = at(p, p).real();
        const double beta = at(q, q).real();
        const cplx phase = gamma / g;

        // t solves g t^2 - (alpha-beta) t - g = 0; the smaller-magnitude root
        // tau - sign(tau) sqrt(1+tau^2) in rationalized form.
        const double tau = (alpha - beta) / (2.0 * g);
        const double t = (tau >= 0.0 ? -1.0 : 1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const cplx s = t * c * phase;

        // A <- V^dag A V with V = [[c, s], [-conj(s), c]] embedded at (p,q).
        for (std::size_t k = 0; k < dim; ++k) {
          const cplx akp = at(k, p);
          const cplx akq = at(k, q);
          at(k, p) = c * akp - std::conj(s) * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < dim; ++k) {
          const cplx apk = at(p, k);
          const cplx aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = std::conj(s) * apk + c * aqk;
        }
        at(p, q) = cplx{0.0, 0.0};
        at(q, p) = cplx{0.0, 0.0};
      }
    }
  }

  std::vector<double> eigs(dim);
  for (std::size_t i = 0; i < dim; ++i) eigs[i] = at(i, i).real();
  std::sort(eigs.begin(), eigs.end());
  return eigs;
}

double von_neumann_entropy(const DensityMatrix& rho) {
  Operator m(rho.dim);
  m.entries = rho.entries;
  if (!is_hermitian(m, EPS_ALG)) {
    throw std::invalid_argument("von_neumann_entropy: non-Hermitian input");
  }
  const auto eigs = hermitian_eigenvalues(rho.entries, rho.dim);
  double h = 0.0;
  for (double e : eigs) {
    if (e < -1e-10) {
      throw std::domain_error("von_neumann_entropy: negative eigenvalue " + std::to_string(e));
    }
    if (e > 0.0) h -= e * std::log2(e);
  }
  // A clean 0 for pure states instead of -0.0.
  return h <= 0.0 ? 0.0 : h;
}

double distance_up_to_phase(const Operator& a, const Operator& b) {
  require_same_dim(a, b, "distance_up_to_phase");
  const double na = frobenius_norm(a);
  const double nb = frobenius_norm(b);
  if (na == 0.0 || nb == 0.0) {
    throw std::invalid_argument("distance_up_to_phase: zero operator");
  }
  cplx overlap{0.0, 0.0};
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    overlap += std::conj(a.entries[i]) * b.entries[i];
  }
  const double d = 1.0 - std::abs(overlap) / (na * nb);
  return std::clamp(d, 0.0, 1.0);
}

double ppt_min_eigenvalue(const DensityMatrix& rho) {
  if (rho.dim != 4) {
    throw std::invalid_argument("ppt_min_eigenvalue: expected a two-qubit (4x4) state");
  }
  // Transpose the second qubit: [(i,j),(k,l)] -> [(i,l),(k,j)].
  std::vector<cplx> pt(16);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      for (std::size_t k = 0; k < 2; ++k) {
        for (std::size_t l = 0; l < 2; ++l) {
          pt[(2 * i + l) * 4 + (2 * k + j)] = rho.entries[(2 * i + j) * 4 + (2 * k + l)];
        }
      }
    }
  }
  return hermitian_eigenvalues(pt, 4).front();
}

}  // namespace statorsim

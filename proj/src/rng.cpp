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

#include "statorsim/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace statorsim {

std::uint64_t SplitMix64::next_u64() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

double SplitMix64::next_double() {
  // 53 significant bits, shifted into (0, 1].
  return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
}

double SplitMix64::next_normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = next_double();
  const double u2 = next_double();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(theta);
  has_spare_ = true;
  return r * std::cos(theta);
}

std::vector<cplx> random_state(SplitMix64& rng, std::size_t num_qubits) {
  const std::size_t dim = std::size_t{1} << num_qubits;
  std::vector<cplx> amps(dim);
  double norm2 = 0.0;
  for (std::size_t i = 0; i < dim; ++i) {
    const double re = rng.next_normal();
    const double im = rng.next_normal();
    amps[i] = cplx{re, im};
    norm2 += re * re + im * im;
  }
  if (norm2 <= 0.0) {
    throw std::runtime_error("random_state: degenerate draw");
  }
  const double inv = 1.0 / std::sqrt(norm2);
  for (cplx& a : amps) a *= inv;
  return amps;
}

PauliAxis random_axis(SplitMix64& rng) {
  double x = 0.0, y = 0.0, z = 0.0, n = 0.0;
  do {
    x = rng.next_normal();
    y = rng.next_normal();
    z = rng.next_normal();
    n = std::sqrt(x * x + y * y + z * z);
  } while (n < 1e-6);
  return PauliAxis{x / n, y / n, z / n};
}

}  // namespace statorsim

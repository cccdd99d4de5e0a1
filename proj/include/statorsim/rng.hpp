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

#include <cstdint>
#include <vector>

#include "statorsim/linalg.hpp"

namespace statorsim {

// SplitMix64 generator. The full state is the 64-bit counter, so streams are
// reproducible from the seed alone and identical across platforms.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();

  // Uniform in (0, 1]; never returns 0 so log() is always safe.
  double next_double();

  // Standard normal via Box-Muller; pairs are generated together and the
  // second value is cached.
  double next_normal();

 private:
  std::uint64_t state_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

// Haar-like random pure state on k qubits: 2^(k+1) normals taken as
// (re, im) pairs in index order, then normalized.
std::vector<cplx> random_state(SplitMix64& rng, std::size_t num_qubits);

// Random unit vector on the Bloch sphere from three normals.
PauliAxis random_axis(SplitMix64& rng);

}  // namespace statorsim

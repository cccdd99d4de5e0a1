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

namespace statorsim {

// Central tolerance ladder. EPS_ALG guards exact algebraic identities,
// EPS_SIM simulated-vs-closed-form comparisons, EPS_NUM optimizer outputs.
inline constexpr double EPS_ALG = 1e-12;
inline constexpr double EPS_SIM = 1e-10;
inline constexpr double EPS_NUM = 1e-6;

// Branches below this probability are treated as absent.
inline constexpr double PROB_FLOOR = 1e-14;

}  // namespace statorsim

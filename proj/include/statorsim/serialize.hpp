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

#include <map>
#include <string>

#include "statorsim/analysis.hpp"
#include "statorsim/protocol.hpp"

namespace statorsim {

// CSV with header n,xi,E0,E0_exact,EFPT,F, fixed 6 decimals, '\n' endings.
std::string curve_to_csv(const Curve& curve);

// {"command": ..., "params": {...}, "branches": [...], "F": ..., "E": ...,
// "classical_bits": ...}; operators are row-major [re, im] pairs. Key order
// is fixed, so identical inputs serialize byte-identically.
std::string report_to_json(const std::string& command,
                           const std::map<std::string, double>& params,
                           const ProtocolReport& report);

std::string plan_to_json(double xi, double b, const GatePlan& plan);

}  // namespace statorsim

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

#include <iosfwd>
#include <string>
#include <vector>

namespace statorsim::verify {

struct CheckResult {
  int id = 0;
  std::string name;
  std::string expected;
  std::string actual;
  std::string tolerance;
  bool pass = false;
  bool info_only = false;  // reported without gating the exit status
};

// Runs the ten acceptance checks plus informational side reports; every
// random draw uses a fixed seed, so the numbers are identical across runs.
std::vector<CheckResult> run_all();

// One line per check: "PASS|FAIL|INFO <id> <name>: expected ..., actual ...,
// tolerance ...". Returns true when every non-info check passes.
bool print_results(const std::vector<CheckResult>& results, std::ostream& out);

}  // namespace statorsim::verify

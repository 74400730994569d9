// Copyright 2026 The geomq Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Randomized property suites. Each property compares two independently
// computed sides over `samples` random draws and keeps the largest residual.
// A nonzero `perturb` shifts the input on one side by that amount, which must
// make the suite fail; it exists to show the checks can fail.

#ifndef GEOMQ_CHECKS_HPP
#define GEOMQ_CHECKS_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "geomq/types.hpp"

namespace geomq {

struct CheckOptions {
  Index n = 2;
  int samples = 100;
  std::uint64_t seed = 7;
  double perturb = 0.0;
};

struct PropertyResult {
  std::string name;
  double residual = 0.0;   ///< max over samples
  double tolerance = 0.0;
  int samples = 0;
  bool passed = false;
};

struct SuiteReport {
  std::string suite;
  std::vector<PropertyResult> properties;
  std::vector<Index> dims;  ///< closure suite only

  int passes() const noexcept;
  int failures() const noexcept;
  double max_residual() const noexcept;
  bool all_passed() const noexcept { return failures() == 0; }
};

/// kahler, brackets, mu, density, kraus, gkls, gns, closure, spectral.
std::vector<std::string> suite_names();

/// Runs one suite. Throws invalid_argument for unknown names or n < 2.
SuiteReport run_suite(std::string_view suite, const CheckOptions& opts);

/// Runs the named suite, or every suite for "all".
std::vector<SuiteReport> run_checks(std::string_view suite, const CheckOptions& opts);

}  // namespace geomq

#endif  // GEOMQ_CHECKS_HPP

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

#include "geomq/checks.hpp"
#include "support.hpp"

using namespace geomq;

TEST_SUITE("checks") {
  TEST_CASE("every suite passes at n = 2") {
    CheckOptions opts;
    opts.samples = 25;
    const auto reports = run_checks("all", opts);
    CHECK(reports.size() == suite_names().size());
    for (const auto& r : reports) {
      INFO(r.suite);
      CHECK(r.all_passed());
      CHECK(r.passes() > 0);
      CHECK(r.max_residual() < 1e-6);
    }
  }

  TEST_CASE("closure suite reports the algebra dimensions") {
    CheckOptions opts;
    opts.samples = 1;
    CHECK(run_suite("closure", opts).dims == std::vector<Index>{3, 6, 8});
    opts.n = 3;
    CHECK(run_suite("closure", opts).dims == std::vector<Index>{8, 16, 18});
  }

  TEST_CASE("perturbed operators make properties fail") {
    CheckOptions opts;
    opts.samples = 10;
    opts.perturb = 1e-3;
    for (const char* s : {"brackets", "mu", "gkls", "kraus", "gns"}) {
      INFO(s);
      CHECK(run_suite(s, opts).failures() > 0);
    }
  }

  TEST_CASE("runs are deterministic in the seed") {
    CheckOptions opts;
    opts.samples = 5;
    const auto a = run_suite("mu", opts), b = run_suite("mu", opts);
    REQUIRE(a.properties.size() == b.properties.size());
    for (std::size_t i = 0; i < a.properties.size(); ++i) CHECK(a.properties[i].residual == b.properties[i].residual);
  }

  TEST_CASE("bad options") {
    CheckOptions opts;
    CHECK(geomq::test::error_code([&] { run_suite("nope", opts); }) == ErrorCode::invalid_argument);
    opts.n = 1;
    CHECK(geomq::test::error_code([&] { run_suite("kahler", opts); }) == ErrorCode::invalid_argument);
    opts.n = 2;
    opts.samples = 0;
    CHECK(geomq::test::error_code([&] { run_checks("all", opts); }) == ErrorCode::invalid_argument);
  }
}

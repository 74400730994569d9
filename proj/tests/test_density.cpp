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

#include "geomq/density.hpp"
#include "support.hpp"

using namespace geomq;
using namespace geomq::test;

TEST_SUITE("density") {
  TEST_CASE("positivity and trace are enforced") {
    CHECK(error_code([] { PositiveOperator(HermitianOperator(mat2(1, 0, 0, -1))); }) == ErrorCode::not_positive);
    CHECK(error_code([] { DensityMatrix::from_matrix(mat2(1, 0, 0, 1)); }) == ErrorCode::invalid_argument);
    CHECK(error_code([] { DensityMatrix::from_matrix(mat2(1, 1, 0, 0)); }) == ErrorCode::not_hermitian);
    const PositiveOperator p(HermitianOperator(mat2(2, 0, 0, 0)));
    CHECK(p.rank() == 1);
    CHECK(p.trace() == doctest::Approx(2.0));
    CHECK(p.min_eigenvalue() == doctest::Approx(0.0));
  }

  TEST_CASE("pure and maximally mixed states") {
    const auto rho = DensityMatrix::pure(vec({1, 0, 1, 0}));
    CHECK(dist(rho.matrix(), mat2(0.5, 0.5, 0.5, 0.5)) < 1e-15);
    CHECK(rho.rank() == 1);
    CHECK(error_code([] { DensityMatrix::pure(vec({0, 0, 0, 0})); }) == ErrorCode::zero_vector);
    const auto mixed = DensityMatrix::maximally_mixed(3);
    CHECK(mixed.rank() == 3);
    CHECK(mixed.matrix()(1, 1).real() == doctest::Approx(1.0 / 3));
  }

  TEST_CASE("GL action on states and the cone") {
    const auto out = gl_action_states(mat2(2, 0, 0, 1), DensityMatrix::maximally_mixed(2));
    CHECK(dist(out.matrix(), mat2(0.8, 0, 0, 0.2)) < 1e-15);
    const auto cone = gl_action_cone(mat2(2, 0, 0, 1), PositiveOperator(HermitianOperator(mat2(1, 0, 0, 1))));
    CHECK(dist(cone.matrix(), mat2(4, 0, 0, 1)) < 1e-15);
    CHECK(error_code([] { gl_action_states(mat2(1, 1, 1, 1), DensityMatrix::maximally_mixed(2)); }) ==
          ErrorCode::singular);
    CHECK(error_code([] { gl_action_states(CMatrix::Identity(3, 3), DensityMatrix::maximally_mixed(2)); }) ==
          ErrorCode::dimension_mismatch);

    // Rank is invariant, group composition holds.
    Sampler rng(14);
    for (Index r = 1; r <= 3; ++r) {
      const auto rho = rng.state(3, r);
      const CMatrix g1 = rng.well_conditioned(3), g2 = rng.well_conditioned(3);
      const auto moved = gl_action_states(g1, rho);
      CHECK(moved.rank() == r);
      CHECK(dist(gl_action_states(g1 * g2, rho).matrix(), gl_action_states(g1, gl_action_states(g2, rho)).matrix()) <
            1e-12);
    }
  }

  TEST_CASE("factorization and strata") {
    Sampler rng(15);
    const CMatrix r = rng.complex_matrix(3, 2);
    const auto w = factorize_positive(r);
    CHECK(w.rank() == 2);
    CHECK(stratum(w) == 2);

    std::vector<DensityMatrix> states{rng.state(3, 1), rng.state(3, 3), rng.state(3, 1), rng.state(3, 2)};
    const auto strata = stratify(states);
    CHECK(strata.at(1) == std::vector<std::size_t>{0, 2});
    CHECK(strata.at(2) == std::vector<std::size_t>{3});
    CHECK(strata.at(3) == std::vector<std::size_t>{1});
    CHECK(positive_rank(vec({0, 0.5, 0.5}), 1.0) == 2);
  }

  TEST_CASE("realified GL membership") {
    CHECK(is_gl_member(realify_operator(mat2(2, I, 0, 1))));
    CHECK_FALSE(is_gl_member(realify_operator(mat2(1, 1, 1, 1))));
    // Complex conjugation is real-linear but not complex-linear.
    CHECK_FALSE(is_gl_member(RMatrix(vec({1, -1, 1, -1}).asDiagonal())));
    CHECK_FALSE(is_gl_member(RMatrix::Identity(3, 3)));
  }
}

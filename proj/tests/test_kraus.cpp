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

#include <cmath>

#include "geomq/kraus.hpp"
#include "support.hpp"

using namespace geomq;
using namespace geomq::test;

TEST_SUITE("kraus") {
  TEST_CASE("amplitude damping") {
    const auto k = amplitude_damping(0.3);
    CHECK(k.size() == 2);
    CHECK(is_normalized(k));
    CHECK(dist(geomq::apply(k, mat2(0, 0, 0, 1)), mat2(0.3, 0, 0, 0.7)) < 1e-15);
    // Coherences decay with √(1−γ).
    CHECK(std::abs(geomq::apply(k, mat2(0.5, 0.5, 0.5, 0.5))(0, 1) - 0.5 * std::sqrt(0.7)) < 1e-15);
    CHECK(error_code([] { amplitude_damping(1.5); }) == ErrorCode::invalid_argument);
    CHECK(normalization_defect(KrausFamily({2.0 * CMatrix::Identity(2, 2)})) == doctest::Approx(3.0));
  }

  TEST_CASE("composition applies the right factor first") {
    const auto ad = amplitude_damping(0.5);
    const KrausFamily flip({pauli(1).matrix()});
    const CMatrix rho = mat2(1, 0, 0, 0);
    const CMatrix composed = geomq::apply(compose(ad, flip), rho);
    CHECK(dist(composed, geomq::apply(ad, geomq::apply(flip, rho))) < 1e-15);
    CHECK(dist(composed, mat2(0.5, 0, 0, 0.5)) < 1e-15);
    CHECK(compose(ad, ad).size() == 4);
  }

  TEST_CASE("vec and unvec") {
    const CMatrix m = mat2(1, 2, 3, 4);
    const CVector v = vec(m);
    CHECK(v(1) == Complex(3));  // column-major
    CHECK(dist(unvec(v, 2), m) == 0.0);
    CHECK(error_code([&] { unvec(v, 3); }) == ErrorCode::dimension_mismatch);
  }

  TEST_CASE("Choi matrix") {
    const auto id = choi(KrausFamily({CMatrix::Identity(3, 3)}));
    CHECK(id.rank() == 1);
    CHECK(id.matrix().trace().real() == doctest::Approx(3.0));
    CHECK(kraus_rank(amplitude_damping(0.2)) == 2);
    CHECK(kraus_rank(amplitude_damping(0.0)) == 1);

    Sampler rng(16);
    const KrausFamily k({rng.complex_matrix(3, 3), rng.complex_matrix(3, 3)});
    const CMatrix rho = rng.state(3, 2).matrix();
    CHECK(dist(choi(k).apply(rho), geomq::apply(k, rho)) < 1e-12);
    CHECK(choi(k).min_eigenvalue() > -1e-10);
    CHECK(error_code([] { ChoiMatrix(CMatrix::Identity(3, 3), 2); }) == ErrorCode::dimension_mismatch);
  }

  TEST_CASE("inverting single-operator families") {
    Sampler rng(17);
    const CMatrix u = rng.unitary(3);
    const auto m = invert(KrausFamily({u}));
    REQUIRE(m.has_value());
    CHECK(dist(*m, u) < 1e-12);
    // Two proportional operators collapse to one of norm √(|a|²+|b|²).
    const auto merged = invert(KrausFamily({0.6 * u, 0.8 * I * u}));
    REQUIRE(merged.has_value());
    CHECK(dist(CMatrix(merged->adjoint() * *merged), CMatrix::Identity(3, 3)) < 1e-12);
    CHECK_FALSE(invert(amplitude_damping(0.4)).has_value());
    // Rank one but singular.
    CHECK_FALSE(invert(KrausFamily({mat2(1, 0, 0, 0)})).has_value());
  }
}

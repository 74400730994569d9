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

#include "support.hpp"

using namespace geomq;
using namespace geomq::test;

TEST_SUITE("hermitian") {
  TEST_CASE("construction rejects non-Hermitian and non-square input") {
    CHECK(error_code([] { HermitianOperator(mat2(0, 1, 0, 0)); }) == ErrorCode::not_hermitian);
    CHECK(error_code([] { HermitianOperator(CMatrix::Zero(2, 3)); }) == ErrorCode::dimension_mismatch);
    CMatrix bad = CMatrix::Identity(2, 2);
    bad(0, 0) = std::numeric_limits<double>::quiet_NaN();
    CHECK(error_code([&] { HermitianOperator{bad}; }) == ErrorCode::non_finite);
    // Roundoff-level asymmetry is accepted.
    CHECK_NOTHROW(HermitianOperator(mat2(1, Complex(0, 1e-14), Complex(0, -1e-14) + 1e-15, 2)));
  }

  TEST_CASE("symmetrized takes the Hermitian part") {
    const auto h = HermitianOperator::symmetrized(mat2(1, 2, 0, 3));
    CHECK(dist(h.matrix(), mat2(1, 1, 1, 3)) == 0.0);
  }

  TEST_CASE("Pauli algebra") {
    const CMatrix s1 = pauli(1).matrix(), s2 = pauli(2).matrix(), s3 = pauli(3).matrix();
    CHECK(dist(s1 * s1, CMatrix::Identity(2, 2)) == 0.0);
    CHECK(dist(s1 * s2, I * s3) == 0.0);
    CHECK(dist(pauli(0).matrix(), CMatrix::Identity(2, 2)) == 0.0);
    CHECK(error_code([] { pauli(4); }) == ErrorCode::invalid_argument);
  }

  TEST_CASE("brackets on Pauli matrices") {
    // −i(σ₁σ₂ − σ₂σ₁) = 2σ₃ and σ₁σ₂ + σ₂σ₁ = 0.
    CHECK(dist(lie_bracket(pauli(1), pauli(2)).matrix(), 2.0 * pauli(3).matrix()) < 1e-15);
    CHECK(dist(jordan_bracket(pauli(1), pauli(2)).matrix(), CMatrix::Zero(2, 2)) < 1e-15);
    CHECK(dist(jordan_bracket(pauli(1), pauli(1)).matrix(), 2.0 * CMatrix::Identity(2, 2)) < 1e-15);
    CHECK(dist(star_decompose(pauli(1), pauli(2)), I * pauli(3).matrix()) < 1e-15);
  }

  TEST_CASE("generalized Pauli basis") {
    const auto b2 = gell_mann_basis(2);
    REQUIRE(b2.size() == 4);
    for (int k = 0; k < 4; ++k) CHECK(dist(b2[static_cast<std::size_t>(k)].matrix(), pauli(k).matrix()) < 1e-15);

    for (Index n : {3, 4}) {
      const auto b = gell_mann_basis(n);
      REQUIRE(static_cast<Index>(b.size()) == n * n);
      for (std::size_t j = 0; j < b.size(); ++j)
        for (std::size_t k = 0; k < b.size(); ++k)
          CHECK(std::abs(0.5 * (b[j].matrix() * b[k].matrix()).trace().real() - (j == k ? 1.0 : 0.0)) < 1e-14);
      for (std::size_t k = 1; k < b.size(); ++k) CHECK(std::abs(b[k].matrix().trace()) < 1e-14);
    }
  }

  TEST_CASE("Lie-Jordan compatibility holds at hbar = 1 only") {
    Sampler rng(3);
    for (int i = 0; i < 20; ++i) {
      const auto a = rng.hermitian(3), b = rng.hermitian(3), c = rng.hermitian(3);
      const auto r = lie_jordan_residual(a, b, c, 1.0);
      CHECK(r.derivation < 1e-10);
      CHECK(r.associator < 1e-10);
      CHECK(check_lie_jordan_axioms(a, b, c, 1.0));
      CHECK_FALSE(check_lie_jordan_axioms(a, b, c, 2.0));
    }
    CHECK(error_code([] { lie_jordan_residual(pauli(1), pauli(2), pauli(3), 0.0); }) == ErrorCode::invalid_argument);
  }

  TEST_CASE("deformed metric and K-unitaries") {
    const auto k = DeformedMetric::diagonal_alpha(0.5);
    CHECK(dist(k.k().matrix(), mat2(0.5, 0, 0, 1.5)) == 0.0);
    CHECK(error_code([] { DeformedMetric::diagonal_alpha(2.0); }) == ErrorCode::not_positive);

    CVector e1 = CVector::Zero(2);
    e1(0) = 1.0;
    CHECK(std::abs(k_inner(e1, e1, k) - 0.5) < 1e-15);

    // Diagonal phases preserve a diagonal K; a swap does not.
    const CMatrix phases = mat2(std::exp(I * 0.3), 0, 0, std::exp(I * 1.1));
    CHECK(is_k_unitary(phases, k));
    CHECK_FALSE(is_k_unitary(pauli(1).matrix(), k));
    CHECK(is_k_unitary(pauli(1).matrix(), DeformedMetric::diagonal_alpha(1.0)));

    const CMatrix k0 = metric_factor(k);
    CHECK(dist(k0.adjoint() * k0, k.k().matrix()) < 1e-14);

    // K₀ A K₀⁻¹ is unitary for every K-unitary A.
    Sampler rng(5);
    const CMatrix a = k0.inverse() * rng.unitary(2) * k0;
    REQUIRE(is_k_unitary(a, k));
    const CMatrix u = to_standard_unitary(a, k);
    CHECK(dist(u.adjoint() * u, CMatrix::Identity(2, 2)) < 1e-12);
  }

  TEST_CASE("arithmetic and dimension checks") {
    const auto s = pauli(1) + pauli(3) * 2.0 - pauli(0);
    CHECK(dist(s.matrix(), mat2(1, 1, 1, -3)) == 0.0);
    CHECK(error_code([] { lie_bracket(pauli(1), HermitianOperator::identity(3)); }) == ErrorCode::dimension_mismatch);
    CHECK(hermiticity_defect(mat2(0, 1, 0, 0)) == doctest::Approx(1.0));
    CHECK(max_abs(mat2(0, -3, I * 2.0, 1)) == 3.0);
  }
}

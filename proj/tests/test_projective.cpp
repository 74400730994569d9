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

#include <algorithm>

#include <Eigen/Eigenvalues>

#include "geomq/projective.hpp"
#include "support.hpp"

using namespace geomq;
using namespace geomq::test;

TEST_SUITE("projective") {
  TEST_CASE("expectation values are ray functions") {
    CHECK(expectation(pauli(3), vec({1, 0, 0, 0})) == doctest::Approx(0.5));
    CHECK(expectation(pauli(3), vec({0, 3, 0, 0})) == doctest::Approx(0.5));
    CHECK(expectation(pauli(1), vec({1, 0, 1, 0})) == doctest::Approx(0.5));
    CHECK(error_code([] { expectation(pauli(1), vec({0, 0, 0, 0})); }) == ErrorCode::zero_vector);

    const Complex c = expectation_complex(I * pauli(3).matrix(), vec({0, 0, 2, 0}));
    CHECK(c.imag() == doctest::Approx(-0.5));
  }

  TEST_CASE("expectation differential against finite differences") {
    Sampler rng(4);
    const auto a = rng.hermitian(3);
    const RVector psi = rng.real_vector(6);
    const RVector d = expectation_differential(a, psi);
    for (Index k = 0; k < 6; ++k) {
      RVector e = RVector::Zero(6);
      e(k) = 1e-6;
      CHECK(d(k) == doctest::Approx((expectation(a, psi + e) - expectation(a, psi - e)) / 2e-6).epsilon(1e-6));
    }
    // Invariance under scaling and phase means de kills Δ and Γ.
    CHECK(std::abs(d.dot(psi)) < 1e-12);
    CHECK(std::abs(d.dot(KahlerTensors::standard(3).J * psi)) < 1e-12);
  }

  TEST_CASE("projected tensors at a basis vector") {
    const RVector e1 = vec({1, 0, 0, 0});
    // G_P(de_σ₁, de_σ₁) = e_{2𝕀} − 4e_σ₁² = 1 and Ω_P(de_σ₁, de_σ₂) = e_{2σ₃} = 1.
    CHECK(projected_metric(pauli(1), pauli(1), e1) == doctest::Approx(1.0));
    CHECK(projected_poisson(pauli(1), pauli(2), e1) == doctest::Approx(1.0));
    // σ₃ is stationary at e₁.
    CHECK(std::abs(projected_metric(pauli(3), pauli(1), e1)) < 1e-15);

    // Both tensors annihilate the covectors along the ray.
    const RVector psi = vec({0.3, -0.2, 0.5, 0.7});
    const RMatrix gp = projected_metric_tensor(psi);
    const RMatrix op = projected_poisson_tensor(psi);
    const RMatrix j = KahlerTensors::standard(2).J;
    CHECK((gp * psi).norm() < 1e-14);
    CHECK((gp * (j * psi)).norm() < 1e-14);
    CHECK((op * psi).norm() < 1e-14);
    CHECK(dist(gp, RMatrix(gp.transpose())) == 0.0);
    CHECK(dist(op, RMatrix(-op.transpose())) == 0.0);
  }

  TEST_CASE("projective fields vanish exactly at eigenvectors") {
    const RVector e1 = vec({1, 0, 0, 0});
    CHECK(projective_gradient(pauli(3))(e1).norm() == 0.0);
    CHECK(projective_hamiltonian(pauli(3))(e1).norm() == 0.0);
    CHECK(projective_gradient(pauli(1))(e1).norm() > 0.5);
    CHECK(projective_gradient(pauli(3)).kind() == ProjectiveKind::gradient);
  }

  TEST_CASE("star product on expectations") {
    const RVector e1 = vec({1, 0, 0, 0});
    const Complex s = star_on_expectations(pauli(1), pauli(2), e1);  // e_{iσ₃}(e₁)
    CHECK(s.real() == doctest::Approx(0.0));
    CHECK(s.imag() == doctest::Approx(0.5));
    // Complex operators use their Hermitian split.
    Sampler rng(6);
    const CMatrix a = rng.complex_matrix(3, 3), b = rng.complex_matrix(3, 3);
    const RVector psi = rng.real_vector(6);
    CHECK(std::abs(star_on_expectations(a, b, psi) - expectation_complex(a * b, psi)) < 1e-12);
  }

  TEST_CASE("GL automorphism") {
    const auto same = gl_automorphism(CMatrix::Identity(2, 2), pauli(1));
    CHECK(dist(same.op(), pauli(1).matrix()) == 0.0);
    const CMatrix t = mat2(2, 0, 0, 1);
    const auto moved = gl_automorphism(t, pauli(1));
    CHECK(dist(moved.op(), mat2(0, 2, 0.5, 0)) < 1e-15);
    CHECK(error_code([] { gl_automorphism(mat2(1, 1, 1, 1), pauli(3)); }) == ErrorCode::singular);
  }

  TEST_CASE("same complex ray") {
    CHECK(same_ray(vec({1, 0, 0, 0}), vec({0, 1, 0, 0})));  // i·e₁
    CHECK(same_ray(vec({1, 2, 3, 4}), vec({-2, -4, -6, -8})));
    CHECK_FALSE(same_ray(vec({1, 0, 0, 0}), vec({0, 0, 1, 0})));
    CHECK_FALSE(same_ray(vec({1, 0, 0, 0}), vec({1, 0, 1e-4, 0})));
  }

  TEST_CASE("critical points of e_A are eigenvectors at half the eigenvalue") {
    const auto pts = critical_points(pauli(3), {vec({0.2, 0.3, 0.3, std::sqrt(0.78)})});
    REQUIRE(pts.size() == 1);
    CHECK(pts[0].converged);
    CHECK(pts[0].value == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(same_ray(pts[0].psi, vec({1, 0, 0, 0}), 1e-6));
    CHECK(pts[0].eigen_residual < 1e-7);

    CMatrix d = CMatrix::Zero(3, 3);
    d.diagonal() << 3.0, 1.0, -2.0;
    const auto spec = critical_spectrum(HermitianOperator(d), 11);
    REQUIRE(spec.size() == 3);
    CHECK(spec[0].value == doctest::Approx(1.5));
    CHECK(spec[1].value == doctest::Approx(0.5));
    CHECK(spec[2].value == doctest::Approx(-1.0));
    for (const auto& p : spec) CHECK(p.converged);
  }

  TEST_CASE("critical spectrum against an eigensolver") {
    Sampler rng(8);
    for (Index n : {2, 3, 4}) {
      const auto a = rng.hermitian(n);
      const auto spec = critical_spectrum(a, 100 + static_cast<std::uint64_t>(n));
      Eigen::SelfAdjointEigenSolver<CMatrix> es(a.matrix());
      for (Index k = 0; k < n; ++k)
        CHECK(2.0 * spec[static_cast<std::size_t>(k)].value == doctest::Approx(es.eigenvalues()(n - 1 - k)).epsilon(1e-7));
    }
  }
}

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

#include "geomq/coadjoint.hpp"
#include "support.hpp"

using namespace geomq;
using namespace geomq::test;

TEST_SUITE("coadjoint") {
  TEST_CASE("pairings and linear functions") {
    CHECK(linear_function(pauli(3), pauli(3)) == doctest::Approx(2.0));
    CHECK(linear_function(pauli(1), pauli(3)) == doctest::Approx(0.0));
    CHECK(dual_scalar(pauli(2), pauli(2)) == doctest::Approx(1.0));
    CHECK(dist(hat(pauli(1)), CMatrix(-I * pauli(1).matrix())) == 0.0);
    // ⟨ξ, ξ̂⟩ = ½Tr(iξ·(−iξ)) = ½Tr ξ².
    CHECK(dual_pairing(pauli(3), hat(pauli(3))) == doctest::Approx(1.0));
    CHECK(error_code([] { dual_pairing(pauli(3), pauli(1).matrix()); }) == ErrorCode::invalid_argument);
  }

  TEST_CASE("tensors on the dual") {
    CHECK(tensor_Lambda(pauli(3), pauli(1), pauli(2)) == doctest::Approx(4.0));
    CHECK(tensor_R(pauli(0), pauli(1), pauli(1)) == doctest::Approx(4.0));
    CHECK(tensor_R(pauli(3), pauli(1), pauli(2)) == doctest::Approx(0.0));
    CHECK(dist(dual_bracket(pauli(1), pauli(2)).matrix(), 2.0 * pauli(3).matrix()) < 1e-15);
  }

  TEST_CASE("Heisenberg flow of σ₁ under σ₃") {
    for (double t : {0.0, 0.4, 1.3}) {
      const CMatrix expected = std::cos(2 * t) * pauli(1).matrix() - std::sin(2 * t) * pauli(2).matrix();
      CHECK(dist(heisenberg_flow(pauli(3), pauli(1), t).matrix(), expected) < 1e-14);
      CHECK(dist(heisenberg_integrate(pauli(3), pauli(1), t).matrix(), expected) < 1e-11);
    }
    CHECK(error_code([] { heisenberg_integrate(pauli(3), pauli(1), -1.0); }) == ErrorCode::invalid_argument);
  }

  TEST_CASE("momentum maps") {
    const RVector e1 = vec({1, 0, 0, 0});
    CHECK(dist(momentum_map(e1).matrix(), mat2(0.5, 0, 0, 0)) == 0.0);
    CHECK(dist(momentum_map_projective(2.0 * e1).matrix(), mat2(0.5, 0, 0, 0)) < 1e-16);
    CHECK(error_code([] { momentum_map_projective(vec({0, 0})); }) == ErrorCode::zero_vector);

    // Differentials against central differences.
    Sampler rng(11);
    const RVector psi = rng.real_vector(6), v = rng.real_vector(6);
    const double h = 1e-6;
    const CMatrix fd = (momentum_map(psi + h * v).matrix() - momentum_map(psi - h * v).matrix()) / (2 * h);
    CHECK(dist(momentum_map_differential(psi, v), fd) < 1e-8);
    const CMatrix fdp =
        (momentum_map_projective(psi + h * v).matrix() - momentum_map_projective(psi - h * v).matrix()) / (2 * h);
    CHECK(dist(momentum_map_projective_differential(psi, v), fdp) < 1e-8);
  }

  TEST_CASE("quadratic functions pull back from the dual") {
    Sampler rng(12);
    for (Index n : {2, 3, 4}) {
      for (int i = 0; i < 10; ++i) {
        const auto r = check_mu_related(rng.hermitian(n), rng.hermitian(n), rng.real_vector(2 * n));
        CHECK(r.max() < 1e-10);
      }
    }
    // A mismatched dual generator shows up in the residual.
    const auto bad = mu_residuals(pauli(1), pauli(2), pauli(3), pauli(2), vec({0.6, 0, 0, 0.8}));
    CHECK(bad.push_hamiltonian > 0.1);
  }

  TEST_CASE("Bloch coordinates") {
    CHECK(dist(bloch_coords(HermitianOperator(0.5 * CMatrix::Identity(2, 2))), vec({0.5, 0, 0, 0})) < 1e-16);
    const RVector up = bloch_coords(HermitianOperator(mat2(1, 0, 0, 0)));
    CHECK(dist(up, vec({0.5, 0, 0, 0.5})) < 1e-16);
    CHECK(bloch_radius_squared(up) == doctest::Approx(0.25));

    Sampler rng(13);
    const auto a = rng.hermitian(3);
    CHECK(dist(bloch_inverse(bloch_coords(a)).matrix(), a.matrix()) < 1e-14);
    CHECK(error_code([] { bloch_inverse(RVector::Zero(5)); }) == ErrorCode::dimension_mismatch);
  }
}

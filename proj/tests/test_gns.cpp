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

#include "geomq/gns.hpp"
#include "support.hpp"

using namespace geomq;
using namespace geomq::test;

TEST_SUITE("gns") {
  TEST_CASE("pure state gives an irreducible representation") {
    const AlgebraState omega(DensityMatrix::pure(vec({1, 0, 0, 0})));
    CHECK(gelfand_ideal(omega).size() == 2);
    const auto rep = build_gns(omega);
    CHECK(rep.dim() == 2);
    CHECK(dist(rep.gram(), CMatrix::Identity(2, 2)) < 1e-14);
    const auto blocks = decompose(rep);
    REQUIRE(blocks.size() == 1);
    CHECK(blocks[0].p == doctest::Approx(1.0));
    CHECK(commutant_dimension(rep) == 1);
    CHECK(is_cyclic(rep, rep.cyclic_vector()));
  }

  TEST_CASE("diag(3/4, 1/4) splits into two weighted blocks") {
    const AlgebraState omega(DensityMatrix::from_matrix(mat2(0.75, 0, 0, 0.25)));
    const auto rep = build_gns(omega);
    CHECK(rep.dim() == 4);
    const auto blocks = decompose(rep);
    REQUIRE(blocks.size() == 2);
    CHECK(std::abs(blocks[0].p - 0.75) < 1e-12);
    CHECK(std::abs(blocks[1].p - 0.25) < 1e-12);
    for (const auto& b : blocks) {
      CHECK(b.dim == 2);
      CHECK(commutant_dimension(rep, b.isometry) == 1);
    }
    // The cyclic vector is the sum of the block vectors, and ω is the weighted sum of the block states.
    CHECK((blocks[0].omega + blocks[1].omega - rep.cyclic_vector()).norm() < 1e-12);
    const CMatrix a = mat2(1, 2, I, -1);
    CHECK(std::abs(omega(a) - (blocks[0].p * blocks[0].pure_state(rep, a) + blocks[1].p * blocks[1].pure_state(rep, a))) <
          1e-12);
    CHECK(commutant_dimension(rep) == 4);
  }

  TEST_CASE("representation is a *-homomorphism that recovers the state") {
    Sampler rng(19);
    for (Index n : {2, 3}) {
      for (Index r = 1; r <= n; ++r) {
        const AlgebraState omega(rng.state(n, r));
        const auto rep = build_gns(omega);
        CHECK(rep.dim() == n * r);
        CHECK(static_cast<Index>(gelfand_ideal(omega).size()) == n * (n - r));
        const CMatrix a = rng.complex_matrix(n, n), b = rng.complex_matrix(n, n);
        CHECK(std::abs(rep.expectation(a) - omega(a)) < 1e-10);
        CHECK(dist(rep.pi(a * b), CMatrix(rep.pi(a) * rep.pi(b))) < 1e-10);
        CHECK(dist(rep.pi(a.adjoint()), CMatrix(rep.pi(a).adjoint())) < 1e-10);
        CHECK(commutant_dimension(rep) == r * r);
      }
    }
  }

  TEST_CASE("right action") {
    CHECK(error_code([] { build_gns(AlgebraState(DensityMatrix::pure(vec({1, 0, 0, 0}))), GNSAction::right_printed); }) ==
          ErrorCode::invalid_argument);
    const auto rep = build_gns(AlgebraState(DensityMatrix::maximally_mixed(2)), GNSAction::right_printed);
    CHECK(rep.dim() == 4);
    // It reverses products.
    const CMatrix a = pauli(1).matrix(), b = pauli(2).matrix();
    CHECK(dist(rep.pi(a * b), CMatrix(rep.pi(b) * rep.pi(a))) < 1e-12);
    CHECK(error_code([&] { decompose(rep); }) == ErrorCode::invalid_argument);
  }

  TEST_CASE("cyclicity and commutants") {
    const auto rep = build_gns(AlgebraState(DensityMatrix::maximally_mixed(2)));
    CHECK_FALSE(is_cyclic(rep, CVector::Zero(4)));
    // A block vector alone only reaches its own block.
    CHECK_FALSE(is_cyclic(rep, decompose(rep)[0].omega));
    CHECK(commutant_dimension({CMatrix::Identity(3, 3)}) == 9);
    CHECK(matrix_units(3).size() == 9);
  }
}

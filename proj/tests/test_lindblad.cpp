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

#include "geomq/lindblad.hpp"
#include "support.hpp"

using namespace geomq;
using namespace geomq::test;

namespace {

CMatrix lowering() { return mat2(0, 1, 0, 0); }

DiagonalGKLS decay(double gamma) { return DiagonalGKLS(HermitianOperator::zero(2), {std::sqrt(gamma) * lowering()}); }

}  // namespace

TEST_SUITE("lindblad") {
  TEST_CASE("traceless basis is orthonormal") {
    for (Index n : {2, 3, 4}) {
      const auto f = traceless_basis(n);
      REQUIRE(static_cast<Index>(f.size()) == n * n - 1);
      for (std::size_t i = 0; i < f.size(); ++i) {
        CHECK(std::abs(f[i].trace()) < 1e-14);
        for (std::size_t j = 0; j < f.size(); ++j)
          CHECK(std::abs((f[i] * f[j].adjoint()).trace() - (i == j ? 1.0 : 0.0)) < 1e-14);
      }
    }
  }

  TEST_CASE("spec validation") {
    const auto f = traceless_basis(2);
    const auto h = HermitianOperator::zero(2);
    CHECK_NOTHROW(GKLSSpec(h, CMatrix::Identity(3, 3), f));
    CHECK_NOTHROW(GKLSSpec(h, CMatrix::Identity(1, 1), {f[0]}));
    CHECK(error_code([&] { GKLSSpec(h, CMatrix::Identity(2, 2), f); }) == ErrorCode::invalid_spec);
    CHECK(error_code([&] { GKLSSpec(h, mat2(1, 0, 0, -1), {f[0], f[1]}); }) == ErrorCode::invalid_spec);
    CHECK(error_code([&] { GKLSSpec(h, mat2(1, 1, 0, 1), {f[0], f[1]}); }) == ErrorCode::invalid_spec);
    CHECK(error_code([&] { GKLSSpec(h, CMatrix::Identity(1, 1), {CMatrix::Identity(2, 2)}); }) ==
          ErrorCode::invalid_spec);
    CHECK(error_code([&] { GKLSSpec(h, CMatrix::Identity(2, 2), {f[0], f[0]}); }) == ErrorCode::invalid_spec);
    CHECK(error_code([&] { GKLSSpec(h, CMatrix::Identity(1, 1), {2.0 * f[0]}); }) == ErrorCode::invalid_spec);
  }

  TEST_CASE("diagonal form agrees with the (H, c, F) form") {
    Sampler rng(18);
    for (Index n : {2, 3}) {
      const auto f = traceless_basis(n);
      const CMatrix x = rng.complex_matrix(n * n - 1, n * n - 1);
      const GKLSSpec spec(rng.hermitian(n), x * x.adjoint(), f);
      const DiagonalGKLS d = diagonalize(spec);
      const CMatrix rho = rng.state(n, n).matrix();
      const CMatrix l = apply_generator(spec, rho);
      CHECK(dist(l, apply_diagonal(d, rho)) < 1e-10);
      CHECK(std::abs(l.trace()) < 1e-12);
      const auto p = decompose_parts(d, rho);
      CHECK(dist(CMatrix(p.hamiltonian + p.gradient + p.kraus), l) < 1e-10);
    }
  }

  TEST_CASE("decay of the excited state") {
    LindbladConfig cfg;
    cfg.t_max = 2.0;
    const auto traj = evolve(decay(0.7), DensityMatrix::from_matrix(mat2(0, 0, 0, 1)), cfg);
    REQUIRE(traj.states.size() == 2001);
    for (std::size_t k = 0; k < traj.states.size(); k += 250) {
      const double expected = std::exp(-0.7 * traj.times[k]);
      CHECK(std::abs(traj.states[k](1, 1).real() - expected) < 1e-10);
    }
    CHECK(traj.max_trace_defect < 1e-12);
    CHECK(traj.min_eigenvalue > -1e-12);
    CHECK(traj.h == doctest::Approx(1e-3));
  }

  TEST_CASE("oversized steps are rejected") {
    LindbladConfig cfg;
    cfg.t_max = 10.0;
    cfg.h = 10.0;
    CHECK(error_code([&] { evolve(decay(1.0), DensityMatrix::from_matrix(mat2(0, 0, 0, 1)), cfg); }) ==
          ErrorCode::integration_failure);
    cfg.h = 0.0;
    CHECK(error_code([&] { evolve(decay(1.0), DensityMatrix::maximally_mixed(2), cfg); }) ==
          ErrorCode::invalid_argument);
  }

  TEST_CASE("Kraus part of a diagonal generator") {
    const DiagonalGKLS d(HermitianOperator::zero(2), {lowering(), CMatrix::Zero(2, 2)});
    CHECK(d.kraus_family().size() == 1);
    CHECK(dist(d.g().matrix(), mat2(0, 0, 0, 1)) == 0.0);
    const DiagonalGKLS empty(pauli(3), {});
    CHECK(empty.kraus_family().size() == 1);
  }
}

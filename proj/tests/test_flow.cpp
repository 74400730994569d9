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

#include <Eigen/Eigenvalues>

#include "geomq/flow.hpp"
#include "support.hpp"

using namespace geomq;
using namespace geomq::test;

namespace {

constexpr double kTwoPi = 6.283185307179586;

// e^{cAt} z for Hermitian A via its eigendecomposition.
CVector exact_linear(const HermitianOperator& a, Complex c, double t, const CVector& z) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(a.matrix());
  const CVector phases = (c * t * es.eigenvalues().cast<Complex>()).array().exp();
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint() * z;
}

}  // namespace

TEST_SUITE("flow") {
  TEST_CASE("one RK4 step has fifth-order local error") {
    const FieldFn rotate = as_field_fn(phase_field(1));
    for (double h : {0.1, 0.05}) {
      const RVector next = rk4_step(rotate, vec({1, 0}), h);
      const double err = (next - vec({std::cos(h), std::sin(h)})).norm();
      CHECK(err < std::pow(h, 5) / 100.0);
      CHECK(err > 0.0);
    }
  }

  TEST_CASE("Hamiltonian flow matches e^{iAt}z") {
    Sampler rng(9);
    const auto a = rng.hermitian(3);
    const CVector z0 = rng.complex_vector(3);
    IntegratorConfig cfg;
    cfg.t_max = 2.0;
    cfg.convergence_eps = 0.0;
    const auto traj = integrate(hamiltonian_field(a), realify(z0), cfg);
    CHECK(traj.meta.stop == StopReason::horizon);
    CHECK(traj.times.back() == doctest::Approx(2.0));
    CHECK((complexify(traj.final_point()) - exact_linear(a, I, 2.0, z0)).norm() < 1e-9);
    // Unitary flows preserve the norm.
    CHECK(traj.final_point().norm() == doctest::Approx(z0.norm()).epsilon(1e-10));
  }

  TEST_CASE("the opposite-sign Hamiltonian flow matches e^{−iAt}z") {
    Sampler rng(21);
    const auto a = rng.hermitian(2);
    const CVector z0 = rng.complex_vector(2);
    IntegratorConfig cfg;
    cfg.convergence_eps = 0.0;
    const auto traj = integrate(schrodinger_field(a), realify(z0), cfg);
    CHECK((complexify(traj.final_point()) - exact_linear(a, -I, 1.0, z0)).norm() < 1e-9);
    CHECK(dist(schrodinger_field(a).matrix, hamiltonian_field(HermitianOperator(-a.matrix())).matrix) == 0.0);
  }

  TEST_CASE("gradient flow matches e^{At}z") {
    Sampler rng(10);
    const auto a = rng.hermitian(2);
    const CVector z0 = rng.complex_vector(2);
    IntegratorConfig cfg;
    cfg.t_max = 0.5;
    cfg.convergence_eps = 0.0;
    const auto traj = integrate(gradient_field(a), realify(z0), cfg);
    const CVector exact = exact_linear(a, 1.0, 0.5, z0);
    CHECK((complexify(traj.final_point()) - exact).norm() < 1e-9 * exact.norm());
  }

  TEST_CASE("σ₃ Hamiltonian orbit closes after 2π") {
    IntegratorConfig cfg;
    cfg.t_max = kTwoPi;
    cfg.convergence_eps = 0.0;
    const auto traj = integrate(hamiltonian_field(pauli(3)), vec({1, 0, 0, 0}), cfg);
    CHECK(dist(traj.final_point(), vec({1, 0, 0, 0})) < 1e-10);
    CHECK(traj.times.size() == 6285);  // ceil(2π/h) steps plus the seed
  }

  TEST_CASE("step count and spacing") {
    IntegratorConfig cfg;
    cfg.h = 0.3;
    cfg.t_max = 1.0;
    cfg.convergence_eps = 0.0;
    const auto t = integrate(dilation_field(1), vec({1, 0}), cfg);
    CHECK(t.times.size() == 5);
    CHECK(t.meta.h == doctest::Approx(0.25));
    CHECK(t.final_point()(0) == doctest::Approx(std::exp(1.0)).epsilon(1e-4));
    // Exact multiples keep the requested step.
    cfg.h = 0.1;
    CHECK(integrate(dilation_field(1), vec({1, 0}), cfg).times.size() == 11);
  }

  TEST_CASE("projective gradient flow stops at a critical point") {
    IntegratorConfig cfg;
    cfg.t_max = 50.0;
    const auto traj = integrate(projective_gradient(pauli(3)), figure_seed(), cfg);
    CHECK(traj.converged());
    CHECK(traj.meta.final_field_norm < cfg.convergence_eps);
    CHECK(traj.times.back() < 50.0);
    CHECK(same_ray(traj.final_point(), vec({1, 0, 0, 0}), 1e-6));
  }

  TEST_CASE("renormalization keeps the seed radius") {
    IntegratorConfig cfg;
    cfg.t_max = 1.0;
    cfg.renormalize = true;
    cfg.convergence_eps = 0.0;
    const auto traj = integrate(gradient_field(pauli(3)), vec({0, 0.6, 0.8, 0}) * 2.0, cfg);
    for (const auto& p : traj.points) CHECK(p.norm() == doctest::Approx(2.0));
  }

  TEST_CASE("integration failures and bad arguments") {
    const FieldFn blowup = [](const RVector& x) { return RVector(x.array().square() * 1e6); };
    IntegratorConfig cfg;
    cfg.t_max = 10.0;
    cfg.convergence_eps = 0.0;
    CHECK(error_code([&] { integrate(blowup, vec({1, 1}), cfg); }) == ErrorCode::integration_failure);
    cfg.h = -1.0;
    CHECK(error_code([&] { integrate(phase_field(1), vec({1, 0}), cfg); }) == ErrorCode::invalid_argument);
    cfg.h = 1e-3;
    CHECK(error_code([&] { integrate(phase_field(2), vec({1, 0}), cfg); }) == ErrorCode::dimension_mismatch);
  }

  TEST_CASE("flow_to runs backwards for negative time") {
    const FieldFn x = as_field_fn(projective_hamiltonian(pauli(1)));
    const RVector p0 = figure_seed();
    const RVector forward = flow_to(x, p0, 0.7);
    CHECK(dist(flow_to(x, forward, -0.7), p0) < 1e-10);
    CHECK(dist(flow_to(x, p0, 0.0), p0) == 0.0);
  }

  TEST_CASE("commuting and non-commuting flows") {
    const RVector p0 = figure_seed();
    const auto x3 = as_field_fn(projective_hamiltonian(pauli(3)));
    const auto c1 = flows_commute(x3, as_field_fn(phase_field(2)), p0, 1.0, 1.0, 1e-6);
    CHECK(c1.commute);
    CHECK(c1.defect < 1e-9);
    const auto c2 = flows_commute(x3, as_field_fn(dilation_field(2)), p0, 1.0, 1.0, 1e-6);
    CHECK(c2.commute);
    const auto c3 = flows_commute(x3, as_field_fn(projective_hamiltonian(pauli(1))), p0, 1.0, 1.0, 1e-6);
    CHECK_FALSE(c3.commute);
    CHECK(c3.defect > 1e-2);
  }

  TEST_CASE("figure presets") {
    const RVector s = figure_seed();
    CHECK(dist(s, vec({0.2, 0.3, 0.3, std::sqrt(0.78)})) == 0.0);
    CHECK(s.norm() == doctest::Approx(1.0));

    const auto f1 = run_figure("fig1");
    CHECK(f1.primary.converged());
    CHECK_FALSE(f1.companion.has_value());
    const RVector& end = f1.primary.final_point();
    CHECK(end(0) == doctest::Approx(0.5547).epsilon(1e-3));
    CHECK(end(1) == doctest::Approx(0.83205).epsilon(1e-3));
    CHECK(std::abs(end(2)) < 1e-3);
    CHECK(std::abs(end(3)) < 1e-3);

    const auto f3b = run_figure("fig3b");
    REQUIRE(f3b.companion.has_value());
    CHECK(dist(f3b.companion->points.front(), vec({1, 0, 0, 0})) == 0.0);
    // Γ moves (1,0,0,0) around its own complex ray.
    for (const auto& p : f3b.companion->points) CHECK(same_ray(p, vec({1, 0, 0, 0})));

    const auto f2 = run_figure("fig2");
    // The Hamiltonian flow of σ₃ keeps |z₁| fixed.
    for (const auto& p : f2.primary.points) CHECK(std::hypot(p(0), p(1)) == doctest::Approx(std::hypot(0.2, 0.3)));

    CHECK(error_code([] { run_figure("fig9"); }) == ErrorCode::invalid_argument);
    CHECK(figure_names().size() == 4);
  }
}

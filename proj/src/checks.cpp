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

#include <algorithm>
#include <cmath>
#include <functional>

#include <Eigen/Eigenvalues>

#include "geomq/coadjoint.hpp"
#include "geomq/flow.hpp"
#include "geomq/gns.hpp"
#include "geomq/lindblad.hpp"
#include "geomq/random.hpp"

namespace geomq {

namespace {

const Complex kI{0.0, 1.0};

// Collects properties for one suite. `perturb` is applied by the helpers
// below to the implementation-side input only.
class Suite {
 public:
  Suite(std::string name, const CheckOptions& opts) : opts_(opts), rng_(opts.seed), tilt_rng_(opts.seed ^ 0x9e3779b97f4a7c15ULL) {
    report_.suite = std::move(name);
  }

  Index n() const { return opts_.n; }
  int samples() const { return std::max(1, opts_.samples); }
  Sampler& rng() { return rng_; }

  // Runs `sample` `count` times and records the largest residual.
  void property(const std::string& name, double tolerance, const std::function<double()>& sample, int count = -1) {
    const int reps = count < 0 ? samples() : count;
    double worst = 0.0;
    for (int i = 0; i < reps; ++i) {
      const double r = sample();
      worst = std::isfinite(r) ? std::max(worst, r) : std::numeric_limits<double>::infinity();
    }
    report_.properties.push_back({name, worst, tolerance, reps, worst <= tolerance});
  }

  HermitianOperator tilt(const HermitianOperator& a) {
    if (opts_.perturb == 0.0) return a;
    const HermitianOperator e = tilt_rng_.hermitian(a.dim());
    return a + e * (opts_.perturb / max_abs(e.matrix()));
  }
  CMatrix tilt(const CMatrix& m) {
    if (opts_.perturb == 0.0) return m;
    const CMatrix e = tilt_rng_.complex_matrix(m.rows(), m.cols());
    return m + (opts_.perturb / max_abs(e)) * e;
  }
  RVector tilt(const RVector& v) {
    if (opts_.perturb == 0.0) return v;
    const RVector e = tilt_rng_.real_vector(v.size());
    return v + (opts_.perturb / e.cwiseAbs().maxCoeff()) * e;
  }
  RMatrix tilt_real(const RMatrix& m) {
    if (opts_.perturb == 0.0) return m;
    RMatrix e(m.rows(), m.cols());
    for (Index i = 0; i < e.size(); ++i) e.data()[i] = tilt_rng_.normal();
    return m + (opts_.perturb / e.cwiseAbs().maxCoeff()) * e;
  }

  SuiteReport& report() { return report_; }

 private:
  CheckOptions opts_;
  Sampler rng_;
  Sampler tilt_rng_;
  SuiteReport report_;
};

double spectrum_distance(const CMatrix& a, const CMatrix& b) {
  Eigen::SelfAdjointEigenSolver<CMatrix> ea(a, Eigen::EigenvaluesOnly);
  Eigen::SelfAdjointEigenSolver<CMatrix> eb(b, Eigen::EigenvaluesOnly);
  return (ea.eigenvalues() - eb.eigenvalues()).cwiseAbs().maxCoeff();
}

RMatrix rotation(Index n, double theta) {
  const auto t = KahlerTensors::standard(n);
  return std::cos(theta) * RMatrix::Identity(2 * n, 2 * n) + std::sin(theta) * t.J;
}

// ---------------------------------------------------------------- kahler

void kahler_suite(Suite& s) {
  const Index n = s.n();
  const auto t = KahlerTensors::standard(n);
  auto& rng = s.rng();

  s.property("compatibility g = ω(·, J·)", 0.0, [&] { return (t.g - t.omega * s.tilt_real(t.J)).cwiseAbs().maxCoeff(); }, 1);
  s.property("complex structure J² = −𝕀", 0.0, [&] {
    const RMatrix j = s.tilt_real(t.J);
    return (j * j + RMatrix::Identity(2 * n, 2 * n)).cwiseAbs().maxCoeff();
  }, 1);
  s.property("gradient field = −J·hamiltonian field", 1e-12, [&] {
    const HermitianOperator a = rng.hermitian(n);
    return (gradient_field(a).matrix + t.J * hamiltonian_field(s.tilt(a)).matrix).cwiseAbs().maxCoeff();
  });
  s.property("g(Δ,Δ) = g(Γ,Γ) = ω(Δ,Γ) = ⟨ψ|ψ⟩, g(Δ,Γ) = 0", 1e-10, [&] {
    const RVector psi = rng.real_vector(2 * n);
    const RVector d = dilation_field(n)(psi);
    const RVector gm = phase_field(n)(psi);
    const double norm2 = complexify(s.tilt(psi)).squaredNorm();
    return std::max({std::abs(d.dot(t.g * d) - norm2), std::abs(gm.dot(t.g * gm) - norm2),
                     std::abs(d.dot(t.omega * gm) - norm2), std::abs(d.dot(t.g * gm))});
  });
  s.property("dilation derivative of f_A is 2f_A", 1e-10, [&] {
    const HermitianOperator a = rng.hermitian(n);
    const RVector psi = rng.real_vector(2 * n);
    return std::abs(quadratic_differential(s.tilt(a), psi).dot(dilation_field(n)(psi)) - 2.0 * quadratic_function(a, psi));
  });
  s.property("G(df_A, df_B) scales as λ²", 1e-10, [&] {
    const HermitianOperator a = rng.hermitian(n);
    const HermitianOperator b = rng.hermitian(n);
    const RVector psi = rng.real_vector(2 * n);
    const double lambda = rng.uniform(0.5, 2.0);
    const double scaled = jordan_bracket_fn(a, b, lambda * psi);
    return std::abs(scaled - lambda * lambda * jordan_bracket_fn(s.tilt(a), b, psi)) / std::max(1.0, std::abs(scaled));
  });
  s.property("[Y_A, Y_B] = X_{−[A,B]}", 1e-12, [&] {
    const HermitianOperator a = rng.hermitian(n);
    const HermitianOperator b = rng.hermitian(n);
    const auto proj = project_to_hamiltonian(field_bracket(gradient_field(a), gradient_field(b)));
    const HermitianOperator expected = lie_bracket(s.tilt(a), b) * -1.0;
    return std::max(proj.residual, max_abs(proj.generator.matrix() - expected.matrix()));
  });
  s.property("projective fields equal Y − 2eΔ and X − 2eΓ", 1e-12, [&] {
    const HermitianOperator a = rng.hermitian(n);
    const RVector psi = rng.unit_vector(n);
    const double e = expectation(s.tilt(a), psi);
    const RVector y = gradient_field(a)(psi) - 2.0 * e * psi;
    const RVector x = hamiltonian_field(a)(psi) - 2.0 * e * (t.J * psi);
    return std::max((projective_gradient(a)(psi) - y).cwiseAbs().maxCoeff(),
                    (projective_hamiltonian(a)(psi) - x).cwiseAbs().maxCoeff());
  });
  s.property("g(𝒴_A, 𝒳_A) = 0", 1e-10, [&] {
    const HermitianOperator a = rng.hermitian(n);
    const RVector psi = rng.unit_vector(n);
    return std::abs(projective_gradient(a)(psi).dot(t.g * projective_hamiltonian(s.tilt(a))(psi)));
  });
  s.property("projective fields tangent to the sphere", 1e-10, [&] {
    const HermitianOperator a = rng.hermitian(n);
    const RVector psi = rng.unit_vector(n);
    const RVector probe = s.tilt(psi);
    return std::max(std::abs(probe.dot(projective_gradient(a)(psi))), std::abs(probe.dot(projective_hamiltonian(a)(psi))));
  });
  s.property("projectability under scaling and phase", 1e-10, [&] {
    const HermitianOperator a = rng.hermitian(n);
    const HermitianOperator b = rng.hermitian(n);
    const RVector psi = rng.unit_vector(n);
    const double lambda = rng.uniform(0.3, 3.0);
    const RMatrix rot = rotation(n, rng.uniform(0.0, 6.283185307179586));
    const RVector moved = lambda * rot * psi;
    const HermitianOperator at = s.tilt(a);
    const double r1 = std::abs(expectation(at, moved) - expectation(a, psi));
    const double r2 = std::abs(projected_metric(at, b, moved) - projected_metric(a, b, psi));
    const double r3 = std::abs(projected_poisson(at, b, moved) - projected_poisson(a, b, psi));
    const double r4 = (projective_gradient(at)(moved) - lambda * rot * projective_gradient(a)(psi)).cwiseAbs().maxCoeff();
    const double r5 = (projective_hamiltonian(at)(moved) - lambda * rot * projective_hamiltonian(a)(psi)).cwiseAbs().maxCoeff();
    return std::max({r1, r2, r3, r4 / lambda, r5 / lambda});
  });
  s.property("G_P and Ω_P kill ĝ(Δ) and ĝ(Γ)", 1e-10, [&] {
    const RVector psi = rng.real_vector(2 * n);
    const RVector tilted = s.tilt(psi);
    const RMatrix gp = projected_metric_tensor(tilted);
    const RMatrix op = projected_poisson_tensor(tilted);
    const RVector d = t.g * psi, g = t.g * (t.J * psi);
    return std::max({(gp * d).cwiseAbs().maxCoeff(), (gp * g).cwiseAbs().maxCoeff(), (op * d).cwiseAbs().maxCoeff(),
                     (op * g).cwiseAbs().maxCoeff()}) /
           psi.squaredNorm();
  });
}

// ---------------------------------------------------------------- brackets

void brackets_suite(Suite& s) {
  const Index n = s.n();
  auto& rng = s.rng();

  s.property("Ω(df_A, df_B) = f_{[A,B]}", 1e-10, [&] {
    const HermitianOperator a = rng.hermitian(n), b = rng.hermitian(n);
    const RVector psi = rng.real_vector(2 * n);
    return std::abs(poisson_bracket(a, b, psi) - quadratic_function(lie_bracket(s.tilt(a), b), psi));
  });
  s.property("G(df_A, df_B) = f_{AB+BA}", 1e-10, [&] {
    const HermitianOperator a = rng.hermitian(n), b = rng.hermitian(n);
    const RVector psi = rng.real_vector(2 * n);
    return std::abs(jordan_bracket_fn(a, b, psi) - quadratic_function(jordan_bracket(s.tilt(a), b), psi));
  });
  s.property("½G + (i/2)Ω = f_{AB}", 1e-10, [&] {
    const HermitianOperator a = rng.hermitian(n), b = rng.hermitian(n);
    const RVector psi = rng.real_vector(2 * n);
    return std::abs(star_product_fn(a, b, psi) -
                    quadratic_function_complex(s.tilt(a).matrix() * b.matrix(), psi));
  });
  s.property("brackets of Hermitian operators are Hermitian", 1e-12, [&] {
    const CMatrix a = rng.hermitian(n).matrix(), b = s.tilt(rng.hermitian(n).matrix());
    return std::max(hermiticity_defect(-kI * (a * b - b * a)), hermiticity_defect(a * b + b * a));
  });
  s.property("½[A,B]₊ + (i/2)[A,B] = AB", 1e-12, [&] {
    const HermitianOperator a = rng.hermitian(n), b = rng.hermitian(n);
    return max_abs(star_decompose(a, b) - s.tilt(a).matrix() * b.matrix());
  });
  s.property("Lie-Jordan axioms with ħ = 1", 1e-10, [&] {
    // Holds for every triple, so a perturbed input cannot break it.
    const HermitianOperator a = rng.hermitian(n), b = rng.hermitian(n), c = rng.hermitian(n);
    const auto r = lie_jordan_residual(a, b, c, 1.0);
    return std::max(r.derivation, r.associator);
  });
  s.property("K-unitaries form a group and conjugate to unitaries", 1e-10, [&] {
    const CMatrix b = rng.complex_matrix(n, n);
    const DeformedMetric k(HermitianOperator::symmetrized(b.adjoint() * b + 0.5 * CMatrix::Identity(n, n)));
    const CMatrix k0 = metric_factor(k);
    const CMatrix k0inv = k0.inverse();
    const CMatrix a1 = k0inv * rng.unitary(n) * k0;
    const CMatrix a2 = s.tilt(CMatrix(k0inv * rng.unitary(n) * k0));
    const auto defect = [&](const CMatrix& m) { return max_abs(m.adjoint() * k.k().matrix() * m - k.k().matrix()); };
    const CMatrix u = to_standard_unitary(a1 * a2, k);
    return std::max({defect(a1 * a2), defect(a1.inverse()), defect(a2.inverse()),
                     max_abs(u.adjoint() * u - CMatrix::Identity(n, n))});
  });
  s.property("Ω_P(de_A, de_B) = e_{[A,B]}", 1e-10, [&] {
    const HermitianOperator a = rng.hermitian(n), b = rng.hermitian(n);
    const RVector psi = rng.real_vector(2 * n);
    return std::abs(projected_poisson(a, b, psi) - expectation(lie_bracket(s.tilt(a), b), psi));
  });
  s.property("G_P(de_A, de_B) = e_{A∘B} − ⟨A⟩⟨B⟩", 1e-10, [&] {
    const HermitianOperator a = rng.hermitian(n), b = rng.hermitian(n);
    const RVector psi = rng.real_vector(2 * n);
    const HermitianOperator at = s.tilt(a);
    return std::abs(projected_metric(a, b, psi) -
                    (expectation(jordan_bracket(at, b), psi) - 4.0 * expectation(at, psi) * expectation(b, psi)));
  });
  s.property("e_A ⋆ e_B = e_{AB}", 1e-10, [&] {
    const HermitianOperator a = rng.hermitian(n), b = rng.hermitian(n);
    const RVector psi = rng.real_vector(2 * n);
    return std::abs(star_on_expectations(a, b, psi) - expectation_complex(s.tilt(a).matrix() * b.matrix(), psi));
  });
  s.property("GL automorphism is ⋆-multiplicative", 1e-9, [&] {
    const HermitianOperator a = rng.hermitian(n), b = rng.hermitian(n);
    const RVector psi = rng.unit_vector(n);
    const CMatrix g = rng.well_conditioned(n);
    const CMatrix tab = g * a.matrix() * b.matrix() * g.inverse();
    const auto ta = gl_automorphism(g, s.tilt(a));
    const auto tb = gl_automorphism(g, b);
    return std::abs(expectation_complex(tab, psi) - star_on_expectations(ta.op(), tb.op(), psi));
  });
}

// ---------------------------------------------------------------- mu

void mu_suite(Suite& s) {
  const Index n = s.n();
  auto& rng = s.rng();
  const double tol = 1e-10;

  using Field = double MuResidualReport::*;
  const std::vector<std::pair<const char*, Field>> identities = {
      {"G(df_A,df_B) = R(A,B)∘μ", &MuResidualReport::metric},
      {"Ω(df_A,df_B) = Λ(A,B)∘μ", &MuResidualReport::poisson},
      {"Ω_P(de_A,de_B) = Λ(A,B)∘μ_P", &MuResidualReport::projective_poisson},
      {"G_P(de_A,de_B) = R(A,B)∘μ_P − ⟨A⟩⟨B⟩", &MuResidualReport::projective_metric},
      {"Tμ(X_A) = X_Â∘μ", &MuResidualReport::push_hamiltonian},
      {"Tμ(Y_A) = Y_Â∘μ", &MuResidualReport::push_gradient},
      {"Tμ(Δ) = 2μ", &MuResidualReport::push_dilation},
      {"Tμ(Γ) = 0", &MuResidualReport::push_phase},
      {"Tμ_P(𝒳_A) = X_Â∘μ_P", &MuResidualReport::push_projective_hamiltonian},
  };
  std::vector<MuResidualReport> reports;
  for (int i = 0; i < s.samples(); ++i) {
    const HermitianOperator a = rng.hermitian(n), b = rng.hermitian(n);
    const RVector psi = rng.real_vector(2 * n);
    reports.push_back(mu_residuals(a, b, s.tilt(a), b, psi));
  }
  for (const auto& [name, field] : identities) {
    std::size_t k = 0;
    s.property(name, tol, [&] { return reports[k++].*field; });
  }
  // The dilation and phase identities do not involve A; check them at a moved point.
  s.property("Tμ(Δ) = 2μ and Tμ(Γ) = 0 at perturbed base point", tol, [&] {
    const RVector psi = rng.real_vector(2 * n);
    const RVector moved = s.tilt(psi);
    return std::max(max_abs(momentum_map_differential(psi, dilation_field(n)(psi)) - 2.0 * momentum_map(moved).matrix()),
                    max_abs(momentum_map_differential(psi, phase_field(n)(moved))));
  });
  s.property("hat map intertwines brackets", 1e-12, [&] {
    const HermitianOperator x = rng.hermitian(n), y = rng.hermitian(n);
    const CMatrix hx = hat(s.tilt(x)), hy = hat(y);
    return max_abs(hat(dual_bracket(x, y)) - (hx * hy - hy * hx));
  });
  s.property("½Tr(B_j B_k) = δ_jk on the generalized Pauli basis", 1e-12, [&] {
    const auto basis = gell_mann_basis(n);
    double worst = 0.0;
    for (std::size_t j = 0; j < basis.size(); ++j)
      for (std::size_t k = 0; k < basis.size(); ++k)
        worst = std::max(worst, std::abs(dual_scalar(j == 0 ? s.tilt(basis[j]) : basis[j], basis[k]) - (j == k ? 1.0 : 0.0)));
    return worst;
  }, 1);
  s.property("μ_P is positive, rank one, trace ½", 1e-12, [&] {
    const RVector psi = rng.real_vector(2 * n);
    const CMatrix m = s.tilt(momentum_map_projective(psi)).matrix();
    Eigen::SelfAdjointEigenSolver<CMatrix> es(m, Eigen::EigenvaluesOnly);
    const RVector ev = es.eigenvalues();
    double rest = 0.0;
    for (Index k = 0; k + 1 < n; ++k) rest = std::max(rest, std::abs(ev(k)));
    return std::max({std::abs(m.trace().real() - 0.5), std::abs(ev(n - 1) - 0.5), rest});
  });
  s.property("Heisenberg flow is isospectral (RK4, t = 1, h = 1e-3)", 1e-8, [&] {
    const HermitianOperator h = rng.hermitian(n), xi = rng.hermitian(n);
    const HermitianOperator moved = heisenberg_integrate(h, xi, 1.0, 1e-3);
    return std::max(spectrum_distance(moved.matrix(), s.tilt(xi).matrix()),
                    max_abs(moved.matrix() - heisenberg_flow(h, xi, 1.0).matrix()));
  }, std::min(s.samples(), 20));
  s.property("Bloch coordinates round trip", 1e-12, [&] {
    const HermitianOperator rho = rng.hermitian(n);
    return max_abs(bloch_inverse(bloch_coords(rho)).matrix() - s.tilt(rho).matrix());
  });
  if (n == 2) {
    // Positivity of ρ = Σ yᵏσ_k with y⁰ = ½ is exactly |y|² ≤ ¼.
    s.property("qubit Bloch ball radius² ≤ ¼ matches positivity", 0.0, [&] {
      RVector y(4);
      y(0) = 0.5;
      y.tail(3) = rng.real_vector(3).normalized() * rng.uniform(0.0, 0.7);
      const CMatrix rho = s.tilt(bloch_inverse(y).matrix());
      Eigen::SelfAdjointEigenSolver<CMatrix> es(rho, Eigen::EigenvaluesOnly);
      const bool positive = es.eigenvalues()(0) >= -1e-12;
      const bool inside = bloch_radius_squared(y) <= 0.25 + 1e-12;
      return positive == inside ? 0.0 : 1.0;
    });
  }
}

// ---------------------------------------------------------------- density

void density_suite(Suite& s) {
  const Index n = s.n();
  auto& rng = s.rng();

  s.property("GL action preserves rank", 0.0, [&] {
    const Index r = rng.integer(1, n);
    const DensityMatrix rho = rng.state(n, r);
    const CMatrix g = rng.well_conditioned(n);
    const Index out = gl_action_states(s.tilt(g), rho).rank();
    const Index cone = gl_action_cone(g, rho.positive()).rank();
    return static_cast<double>(std::abs(out - r) + std::abs(cone - r));
  });
  s.property("trace-normalized GL action is a group action", 1e-10, [&] {
    const DensityMatrix rho = rng.state(n, rng.integer(1, n));
    const CMatrix g1 = rng.well_conditioned(n), g2 = rng.well_conditioned(n);
    return max_abs(gl_action_states(g1, gl_action_states(g2, rho)).matrix() -
                   gl_action_states(s.tilt(CMatrix(g1 * g2)), rho).matrix());
  });
  s.property("GL action on pure states is the projectivized linear action", 1e-10, [&] {
    const RVector psi = rng.real_vector(2 * n);
    const CMatrix g = rng.well_conditioned(n);
    const DensityMatrix lhs = gl_action_states(g, DensityMatrix::pure(psi));
    const DensityMatrix rhs = DensityMatrix::pure(realify(s.tilt(g) * complexify(psi)));
    return max_abs(lhs.matrix() - rhs.matrix());
  });
  s.property("unitaries preserve the spectrum", 1e-10, [&] {
    const DensityMatrix rho = rng.state(n, n);
    const CMatrix u = rng.unitary(n);
    return spectrum_distance(gl_action_states(s.tilt(u), rho).matrix(), rho.matrix());
  });
  s.property("non-unitary g changes the spectrum", 0.0, [&] {
    const DensityMatrix rho = rng.state(n, n);
    CMatrix g = CMatrix::Identity(n, n);
    g(0, 0) = 2.0;
    const CMatrix u = rng.unitary(n);
    return spectrum_distance(gl_action_states(u * g * u.adjoint(), rho).matrix(), rho.matrix()) > 1e-6 ? 0.0 : 1.0;
  });
  s.property("rank(RR†) = rank(R)", 0.0, [&] {
    const Index r = rng.integer(1, n);
    const CMatrix big = s.tilt(CMatrix(rng.complex_matrix(n, r) * rng.complex_matrix(r, n)));
    Eigen::FullPivLU<CMatrix> lu(big);
    lu.setThreshold(1e-8);
    return static_cast<double>(std::abs(factorize_positive(big).rank() - lu.rank()) +
                               std::abs(lu.rank() - r));
  });
  s.property("GL(n,ℂ) membership is J-commutation", 0.0, [&] {
    const CMatrix g = rng.well_conditioned(n);
    RMatrix conj = RMatrix::Identity(2 * n, 2 * n);
    for (Index k = 0; k < n; ++k) conj(2 * k + 1, 2 * k + 1) = -1.0;
    const bool ok = is_gl_member(s.tilt_real(realify_operator(g))) && !is_gl_member(conj) &&
                    is_gl_member(KahlerTensors::standard(n).J);
    return ok ? 0.0 : 1.0;
  });
}

// ---------------------------------------------------------------- kraus

KrausFamily random_normalized_family(Sampler& rng, Index n, Index count) {
  // Columns of an isometry ℂⁿ → ℂ^{count·n}, cut into blocks.
  Eigen::HouseholderQR<CMatrix> qr(rng.complex_matrix(count * n, n));
  const CMatrix v = qr.householderQ() * CMatrix::Identity(count * n, n);
  std::vector<CMatrix> ops;
  for (Index k = 0; k < count; ++k) ops.push_back(v.middleRows(k * n, n));
  return KrausFamily(std::move(ops));
}

KrausFamily random_family(Sampler& rng, Index n, Index count) {
  std::vector<CMatrix> ops;
  for (Index k = 0; k < count; ++k) ops.push_back(rng.complex_matrix(n, n) * 0.5);
  return KrausFamily(std::move(ops));
}

KrausFamily tilted(Suite& s, const KrausFamily& k) {
  std::vector<CMatrix> ops = k.ops();
  ops.front() = s.tilt(ops.front());
  return KrausFamily(std::move(ops));
}

void kraus_suite(Suite& s) {
  const Index n = s.n();
  auto& rng = s.rng();

  s.property("Choi matrix is positive semidefinite", 1e-10, [&] {
    const KrausFamily k = random_family(rng, n, rng.integer(1, n * n));
    return std::max(0.0, -choi(k).min_eigenvalue());
  });
  s.property("trace preservation ⟺ normalization", 1e-10, [&] {
    const bool normalized = rng.integer(0, 1) == 1;
    const KrausFamily k = normalized ? random_normalized_family(rng, n, rng.integer(1, 4)) : random_family(rng, n, 2);
    const KrausFamily kt = tilted(s, k);
    double tp_defect = 0.0;
    const auto units = matrix_units(n);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j)
        tp_defect = std::max(tp_defect, std::abs(geomq::apply(kt, units[static_cast<std::size_t>(i * n + j)]).trace() -
                                                 (i == j ? 1.0 : 0.0)));
    const bool agree = is_normalized(k) == normalized && (tp_defect <= 1e-10) == normalized;
    return agree ? std::abs(tp_defect - normalization_defect(k)) : 1.0;
  });
  s.property("apply∘compose = nested apply", 1e-12, [&] {
    const KrausFamily k1 = random_normalized_family(rng, n, 2), k2 = random_normalized_family(rng, n, 3);
    const KrausFamily k3 = random_normalized_family(rng, n, 2);
    const CMatrix rho = rng.state(n, n).matrix();
    const CMatrix nested = geomq::apply(k1, geomq::apply(k2, geomq::apply(k3, rho)));
    return std::max(max_abs(geomq::apply(compose(compose(tilted(s, k1), k2), k3), rho) - nested),
                    max_abs(geomq::apply(compose(k1, compose(k2, k3)), rho) - nested));
  });
  s.property("normalized + invertible ⟹ unitary representative", 1e-10, [&] {
    const CMatrix u = rng.unitary(n);
    const RVector w = rng.real_vector(3).normalized();
    std::vector<CMatrix> ops;
    for (Index k = 0; k < 3; ++k) ops.push_back(w(k) * std::exp(kI * rng.uniform(0.0, 6.28)) * u);
    const KrausFamily fam(std::move(ops));
    const auto m = invert(tilted(s, fam));
    if (!m || !is_normalized(fam)) return 1.0;
    return max_abs(m->adjoint() * *m - CMatrix::Identity(n, n));
  });
  s.property("Choi matrix and action invariant under isometric mixing", 1e-10, [&] {
    const Index m = rng.integer(1, 3);
    const KrausFamily k = random_family(rng, n, m);
    const Index mp = m + rng.integer(0, 2);
    Eigen::HouseholderQR<CMatrix> qr(rng.complex_matrix(mp, m));
    const CMatrix v = qr.householderQ() * CMatrix::Identity(mp, m);
    std::vector<CMatrix> mixed;
    for (Index j = 0; j < mp; ++j) {
      CMatrix acc = CMatrix::Zero(n, n);
      for (Index l = 0; l < m; ++l) acc += v(j, l) * k.ops()[static_cast<std::size_t>(l)];
      mixed.push_back(acc);
    }
    const KrausFamily km = tilted(s, KrausFamily(std::move(mixed)));
    const CMatrix rho = rng.state(n, n).matrix();
    return std::max(max_abs(choi(km).matrix() - choi(k).matrix()), max_abs(geomq::apply(km, rho) - geomq::apply(k, rho)));
  });
  s.property("Choi matrix reconstructs the action", 1e-12, [&] {
    const KrausFamily k = random_family(rng, n, rng.integer(1, 3));
    const CMatrix rho = rng.complex_matrix(n, n);
    return max_abs(choi(tilted(s, k)).apply(rho) - geomq::apply(k, rho));
  });
  s.property("Choi trace and rank", 1e-10, [&] {
    const Index m = rng.integer(1, std::min<Index>(n * n, 4));
    const KrausFamily k = random_family(rng, n, m);
    double tr = 0.0;
    for (const auto& op : k.ops()) tr += (op.adjoint() * op).trace().real();
    const ChoiMatrix c = choi(tilted(s, k));
    return std::abs(c.matrix().trace().real() - tr) / tr + static_cast<double>(std::abs(c.rank() - m));
  });
}

// ---------------------------------------------------------------- gkls

GKLSSpec random_spec(Sampler& rng, Index n) {
  const Index m = n * n - 1;
  const CMatrix x = rng.complex_matrix(m, m);
  CMatrix c = x * x.adjoint() / static_cast<double>(m);
  // Occasionally rank-deficient, so zero V_α appear.
  if (rng.integer(0, 3) == 0) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(c);
    RVector ev = es.eigenvalues();
    ev.head(m / 2).setZero();
    c = es.eigenvectors() * ev.cast<Complex>().asDiagonal() * es.eigenvectors().adjoint();
  }
  const CMatrix w = rng.unitary(m);
  const auto base = traceless_basis(n);
  std::vector<CMatrix> f;
  for (Index i = 0; i < m; ++i) {
    CMatrix acc = CMatrix::Zero(n, n);
    for (Index j = 0; j < m; ++j) acc += w(i, j) * base[static_cast<std::size_t>(j)];
    f.push_back(acc);
  }
  return GKLSSpec(rng.hermitian(n), 0.5 * (c + c.adjoint()), std::move(f));
}

void gkls_suite(Suite& s) {
  const Index n = s.n();
  auto& rng = s.rng();

  s.property("Tr L(ρ) = 0", 1e-12, [&] {
    const GKLSSpec spec = random_spec(rng, n);
    const CMatrix rho = rng.state(n, rng.integer(1, n)).matrix();
    return std::abs(apply_generator(spec, rho).trace()) + max_abs(s.tilt(rho) - rho);
  });
  s.property("(H, c, F) form = diagonal form", 1e-10, [&] {
    const GKLSSpec spec = random_spec(rng, n);
    const CMatrix rho = rng.state(n, rng.integer(1, n)).matrix();
    return max_abs(apply_generator(spec, rho) - apply_diagonal(diagonalize(spec), s.tilt(rho)));
  });
  s.property("Hamiltonian + gradient + Kraus parts sum to L", 1e-12, [&] {
    const DiagonalGKLS d = diagonalize(random_spec(rng, n));
    const CMatrix rho = rng.state(n, rng.integer(1, n)).matrix();
    const GKLSParts p = decompose_parts(d, s.tilt(rho));
    return max_abs(p.hamiltonian + p.gradient + p.kraus - apply_diagonal(d, rho));
  });
  s.property("Kraus part is the Kraus map of {V_α}", 1e-12, [&] {
    const DiagonalGKLS d = diagonalize(random_spec(rng, n));
    const CMatrix rho = rng.state(n, n).matrix();
    return max_abs(decompose_parts(d, rho).kraus - geomq::apply(d.kraus_family(), s.tilt(rho)));
  });
  s.property("L(ρ) is Hermitian", 1e-12, [&] {
    const GKLSSpec spec = random_spec(rng, n);
    const CMatrix rho = rng.hermitian(n).matrix();
    return hermiticity_defect(apply_generator(spec, s.tilt(rho)));
  });
  s.property("small-time complete positivity (h = 1e-3)", 0.0, [&] {
    const double h = 1e-3;
    const GKLSSpec spec = random_spec(rng, n);
    const auto units = matrix_units(n);
    CMatrix c = CMatrix::Zero(n * n, n * n);
    for (Index j = 0; j < n; ++j)
      for (Index l = 0; l < n; ++l) {
        const CMatrix& e = units[static_cast<std::size_t>(j * n + l)];
        // Taylor step of e^{hL} through fourth order.
        const CMatrix l1 = apply_generator(spec, e);
        const CMatrix l2 = apply_generator(spec, l1);
        const CMatrix l3 = apply_generator(spec, l2);
        const CMatrix l4 = apply_generator(spec, l3);
        const CMatrix img = s.tilt(CMatrix(e + h * l1 + (h * h / 2.0) * l2 + (h * h * h / 6.0) * l3 +
                                           (h * h * h * h / 24.0) * l4));
        for (Index i = 0; i < n; ++i)
          for (Index k = 0; k < n; ++k) c(i + n * j, k + n * l) = img(i, k);
      }
    Eigen::SelfAdjointEigenSolver<CMatrix> es(0.5 * (c + c.adjoint()), Eigen::EigenvaluesOnly);
    return std::max(0.0, -es.eigenvalues()(0) - 10.0 * h * h);
  });
  s.property("dissipative evolution keeps trace and changes spectrum", 1e-8, [&] {
    const DiagonalGKLS d = diagonalize(random_spec(rng, n));
    const DensityMatrix rho = rng.state(n, n);
    LindbladConfig cfg;
    cfg.h = 1e-3;
    cfg.t_max = 0.1;
    const auto traj = evolve(d, rho, cfg);
    const double change = spectrum_distance(traj.states.back(), s.tilt(rho.matrix()));
    return change > 1e-6 ? traj.max_trace_defect : 1.0;
  }, std::min(s.samples(), 20));
  if (n == 2) {
    s.property("qubit decay follows e^{−γt}", 1e-8, [&] {
      const double gamma = rng.uniform(0.2, 2.0);
      CMatrix lower = CMatrix::Zero(2, 2);
      lower(0, 1) = std::sqrt(gamma);
      const DiagonalGKLS d(HermitianOperator::zero(2), {lower});
      CMatrix excited = CMatrix::Zero(2, 2);
      excited(1, 1) = 1.0;
      LindbladConfig cfg;
      cfg.h = 1e-3;
      cfg.t_max = 1.0;
      const auto traj = evolve(d, DensityMatrix::from_matrix(excited), cfg);
      return std::abs(s.tilt(traj.states.back())(1, 1).real() - std::exp(-gamma));
    }, std::min(s.samples(), 10));
  }
}

// ---------------------------------------------------------------- gns

void gns_suite(Suite& s) {
  const Index n = s.n();
  auto& rng = s.rng();

  s.property("dim ℋ_ω = n·rank ρ and dim ideal = n(n − rank ρ)", 0.0, [&] {
    const Index r = rng.integer(1, n);
    const AlgebraState omega(rng.state(n, r));
    const GNSRepresentation rep = build_gns(omega);
    // Independent count: null space of the Gram form over matrix units.
    const auto units = matrix_units(n);
    CMatrix g(n * n, n * n);
    for (Index a = 0; a < n * n; ++a)
      for (Index b = 0; b < n * n; ++b)
        g(a, b) = omega(units[static_cast<std::size_t>(a)].adjoint() * units[static_cast<std::size_t>(b)]);
    Eigen::SelfAdjointEigenSolver<CMatrix> es(0.5 * (g + g.adjoint()), Eigen::EigenvaluesOnly);
    const auto null = static_cast<Index>((es.eigenvalues().array() < 1e-9).count());
    const auto ideal = static_cast<Index>(gelfand_ideal(omega).size());
    return static_cast<double>(std::abs(rep.dim() - n * r) + std::abs(ideal - n * (n - r)) + std::abs(null - ideal));
  });
  s.property("ω(a) = ⟨Ω|π(a)Ω⟩", 1e-10, [&] {
    const AlgebraState omega(rng.state(n, rng.integer(1, n)));
    const GNSRepresentation rep = build_gns(omega);
    const CMatrix a = rng.complex_matrix(n, n);
    return std::abs(rep.expectation(s.tilt(a)) - omega(a));
  });
  s.property("π is a *-homomorphism", 1e-10, [&] {
    const GNSRepresentation rep = build_gns(AlgebraState(rng.state(n, rng.integer(1, n))));
    const CMatrix a = rng.complex_matrix(n, n), b = rng.complex_matrix(n, n);
    return std::max(max_abs(rep.pi(s.tilt(a) * b) - rep.pi(a) * rep.pi(b)),
                    max_abs(rep.pi(a.adjoint()) - rep.pi(a).adjoint()));
  });
  s.property("Gram form is nondegenerate on the quotient", 1e-10, [&] {
    const GNSRepresentation rep = build_gns(AlgebraState(rng.state(n, rng.integer(1, n))));
    return max_abs(s.tilt(rep.gram()) - CMatrix::Identity(rep.dim(), rep.dim()));
  });
  s.property("commutant dimension = rank², irreducible iff pure", 0.0, [&] {
    const Index r = rng.integer(1, n);
    const GNSRepresentation rep = build_gns(AlgebraState(rng.state(n, r)));
    const Index c = commutant_dimension(rep);
    return static_cast<double>(std::abs(c - r * r) + ((c == 1) != (r == 1) ? 1 : 0));
  }, std::min(s.samples(), 20));
  s.property("Ω is cyclic", 0.0, [&] {
    const GNSRepresentation rep = build_gns(AlgebraState(rng.state(n, rng.integer(1, n))));
    return is_cyclic(rep, s.tilt(CMatrix(rep.cyclic_vector())).col(0)) ? 0.0 : 1.0;
  }, std::min(s.samples(), 20));
  s.property("ω = Σ p_α ξ_α with irreducible blocks", 1e-10, [&] {
    const Index r = rng.integer(1, n);
    const DensityMatrix rho = rng.state(n, r);
    const AlgebraState omega(rho);
    const GNSRepresentation rep = build_gns(omega);
    const auto blocks = decompose(rep);
    const CMatrix a = rng.complex_matrix(n, n);
    Complex mix = 0.0;
    CVector total = CVector::Zero(rep.dim());
    double psum = 0.0;
    double worst = static_cast<double>(std::abs(static_cast<Index>(blocks.size()) - r));
    for (const auto& b : blocks) {
      mix += b.p * b.pure_state(rep, a);
      total += b.omega;
      psum += b.p;
      worst += static_cast<double>(std::abs(b.dim - n) + std::abs(commutant_dimension(rep, b.isometry) - 1));
    }
    worst = std::max({worst, std::abs(mix - omega(s.tilt(a))), std::abs(psum - 1.0),
                      (total - rep.cyclic_vector()).cwiseAbs().maxCoeff()});
    return worst;
  });
}

// ---------------------------------------------------------------- closure

void closure_suite(Suite& s) {
  const Index n = s.n();
  const auto gm = gell_mann_basis(n);
  std::vector<LinearVectorField> xs, ys;
  for (std::size_t k = 1; k < gm.size(); ++k) {
    xs.push_back(hamiltonian_field(gm[k]));
    ys.push_back(gradient_field(gm[k]));
  }
  xs.front().matrix = s.tilt_real(xs.front().matrix);

  std::vector<LinearVectorField> xy = xs;
  xy.insert(xy.end(), ys.begin(), ys.end());
  std::vector<LinearVectorField> all = xy;
  all.push_back(dilation_field(n));
  all.push_back(phase_field(n));

  const Index d1 = lie_closure(xs).dimension;
  const Index d2 = lie_closure(xy).dimension;
  const Index d3 = lie_closure(all).dimension;
  s.report().dims = {d1, d2, d3};
  const Index m = n * n - 1;
  s.property("Hamiltonian fields close on su(n): dim n² − 1", 0.0, [&] { return static_cast<double>(std::abs(d1 - m)); }, 1);
  s.property("adding gradient fields gives sl(n,ℂ): dim 2(n² − 1)", 0.0,
             [&] { return static_cast<double>(std::abs(d2 - 2 * m)); }, 1);
  s.property("adding Δ and Γ gives gl(n,ℂ): dim 2n²", 0.0, [&] { return static_cast<double>(std::abs(d3 - 2 * n * n)); }, 1);
}

// ---------------------------------------------------------------- spectral

void spectral_suite(Suite& s) {
  const Index n = s.n();
  auto& rng = s.rng();
  s.property("2 × critical values of e_A = spectrum of A", 1e-6, [&] {
    const HermitianOperator a = rng.hermitian(n);
    const auto cps = critical_spectrum(a, static_cast<std::uint64_t>(rng.integer(0, 1 << 30)));
    RVector found(n);
    for (Index k = 0; k < n; ++k) found(k) = 2.0 * cps[static_cast<std::size_t>(k)].value;
    std::sort(found.data(), found.data() + n);
    Eigen::SelfAdjointEigenSolver<CMatrix> es(s.tilt(a).matrix(), Eigen::EigenvaluesOnly);
    return (found - es.eigenvalues()).cwiseAbs().maxCoeff();
  }, std::min(s.samples(), 20));
}

}  // namespace

int SuiteReport::passes() const noexcept {
  return static_cast<int>(std::count_if(properties.begin(), properties.end(), [](const auto& p) { return p.passed; }));
}

int SuiteReport::failures() const noexcept { return static_cast<int>(properties.size()) - passes(); }

double SuiteReport::max_residual() const noexcept {
  double m = 0.0;
  for (const auto& p : properties) m = std::max(m, p.residual);
  return m;
}

std::vector<std::string> suite_names() {
  return {"kahler", "brackets", "mu", "density", "kraus", "gkls", "gns", "closure", "spectral"};
}

SuiteReport run_suite(std::string_view suite, const CheckOptions& opts) {
  detail::require(opts.n >= 2, ErrorCode::invalid_argument, "run_suite: n must be >= 2");
  detail::require(opts.samples >= 1, ErrorCode::invalid_argument, "run_suite: samples must be >= 1");
  Suite s(std::string(suite), opts);
  if (suite == "kahler") kahler_suite(s);
  else if (suite == "brackets") brackets_suite(s);
  else if (suite == "mu") mu_suite(s);
  else if (suite == "density") density_suite(s);
  else if (suite == "kraus") kraus_suite(s);
  else if (suite == "gkls") gkls_suite(s);
  else if (suite == "gns") gns_suite(s);
  else if (suite == "closure") closure_suite(s);
  else if (suite == "spectral") spectral_suite(s);
  else throw Error(ErrorCode::invalid_argument, "run_suite: unknown suite '" + std::string(suite) + "'");
  return std::move(s.report());
}

std::vector<SuiteReport> run_checks(std::string_view suite, const CheckOptions& opts) {
  std::vector<SuiteReport> out;
  if (suite == "all") {
    for (const auto& name : suite_names()) out.push_back(run_suite(name, opts));
  } else {
    out.push_back(run_suite(suite, opts));
  }
  return out;
}

}  // namespace geomq
